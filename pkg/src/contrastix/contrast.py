"""Contrast and likeness predicates, plus partial-assignment shape checks.

A weak (phi, psi)-contrast is entailed by phi & !psi but not by !phi & psi; a
strong contrast has its negation entailed on the second side; a likeness is
entailed on both sides.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import sat
from .cnf import CnfFormula, Literal, PartialAssignment
from .formula import And, Formula, Not, Symbol

__all__ = [
    "is_weak_contrast",
    "is_strong_contrast",
    "is_likeness",
    "classify_clause",
    "implied_partial_assignment",
    "defines_partial_assignment",
]

Side = Formula | CnfFormula


def _sides(phi: Formula, psi: Formula) -> tuple[Formula, Formula]:
    return And(phi, Not(psi)), And(Not(phi), psi)


def is_weak_contrast(t: Side, phi: Formula, psi: Formula) -> bool:
    left, right = _sides(phi, psi)
    return sat.entails([left], t) and not sat.entails([right], t)


def is_strong_contrast(t: Side, phi: Formula, psi: Formula) -> bool:
    left, right = _sides(phi, psi)
    t_formula = t.to_formula() if isinstance(t, CnfFormula) else t
    return sat.entails([left], t) and sat.entails([right], Not(t_formula))


def is_likeness(t: Side, phi: Formula, psi: Formula) -> bool:
    left, right = _sides(phi, psi)
    return sat.entails([left], t) and sat.entails([right], t)


def classify_clause(t: Side, phi: Formula, psi: Formula) -> str:
    """Tag per Def-style classification: 'weak_contrast', 'likeness' or 'neither'."""
    left, right = _sides(phi, psi)
    if not sat.entails([left], t):
        return "neither"
    return "likeness" if sat.entails([right], t) else "weak_contrast"


def implied_partial_assignment(
    constraints: Sequence[Side], vocab: Iterable[Symbol]
) -> PartialAssignment | None:
    """The partial assignment defined by ``constraints``, or None.

    A formula set defines a partial assignment s when it is equivalent to the
    conjunction of exactly the literals it entails; unsatisfiable sets define
    nothing (they entail both polarities).
    """
    constraints = tuple(constraints)
    if not sat.is_satisfiable(*constraints):
        return None
    entailed: list[Literal] = []
    for sym in sorted(set(vocab), key=lambda s: s.id):
        pos = Literal(sym)
        if sat.entails(constraints, pos.to_formula()):
            entailed.append(pos)
        elif sat.entails(constraints, pos.dual.to_formula()):
            entailed.append(pos.dual)
    candidate = PartialAssignment.from_literals(entailed)
    if sat.equivalent(constraints, [candidate.to_term()]):
        return candidate
    return None


def defines_partial_assignment(constraints: Sequence[Side], vocab: Iterable[Symbol]) -> bool:
    return implied_partial_assignment(constraints, vocab) is not None
