"""Complete satisfiability and entailment checks (DPLL with unit propagation).

Constraints may mix clausal forms and arbitrary formula ASTs; clauses get
classic unit propagation while AST constraints are reduced under the growing
assignment, with forced literals harvested from their residuals.  Branching is
deterministic (smallest unassigned symbol id, false before true), so model
extraction is reproducible.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .cnf import Clause, CnfFormula, PartialAssignment
from .formula import BOTTOM, TOP, And, Atom, Bottom, Formula, Not, Or, Symbol, atoms, conjoin

__all__ = ["is_satisfiable", "find_model", "entails", "equivalent"]

Constraint = Formula | CnfFormula | Clause | PartialAssignment


def _compile(constraints: Iterable[Constraint]) -> tuple[list[tuple[int, ...]], list[Formula]]:
    clauses: list[tuple[int, ...]] = []
    asts: list[Formula] = []
    for item in constraints:
        if isinstance(item, CnfFormula):
            for cl in item.clauses:
                clauses.append(tuple(lit.symbol.id * 2 + lit.negated for lit in cl.literals))
        elif isinstance(item, Clause):
            clauses.append(tuple(lit.symbol.id * 2 + lit.negated for lit in item.literals))
        elif isinstance(item, PartialAssignment):
            for lit in item.literals():
                clauses.append((lit.symbol.id * 2 + lit.negated,))
        elif isinstance(item, Formula):
            asts.append(item)
        else:
            raise TypeError(f"not a constraint: {item!r}")
    return clauses, asts


def _reduce(f: Formula, assign: Mapping[int, bool]) -> Formula:
    if isinstance(f, Bottom):
        return f
    if isinstance(f, Atom):
        value = assign.get(f.symbol.id)
        if value is None:
            return f
        return TOP if value else BOTTOM
    if isinstance(f, Not):
        r = _reduce(f.operand, assign)
        if r == BOTTOM:
            return TOP
        if r == TOP:
            return BOTTOM
        return Not(r)
    if isinstance(f, And):
        left = _reduce(f.left, assign)
        if left == BOTTOM:
            return BOTTOM
        right = _reduce(f.right, assign)
        if right == BOTTOM:
            return BOTTOM
        if left == TOP:
            return right
        if right == TOP:
            return left
        return And(left, right)
    if isinstance(f, Or):
        left = _reduce(f.left, assign)
        if left == TOP:
            return TOP
        right = _reduce(f.right, assign)
        if right == TOP:
            return TOP
        if left == BOTTOM:
            return right
        if right == BOTTOM:
            return left
        return Or(left, right)
    raise TypeError(f"not a formula: {f!r}")


def _push_ast(f: Formula, asts: list[Formula], forced: dict[int, bool]) -> bool:
    """Flatten a reduced AST into residuals and forced literals; False on conflict."""
    if f == TOP:
        return True
    if f == BOTTOM:
        return False
    if isinstance(f, Atom):
        prior = forced.get(f.symbol.id)
        if prior is False:
            return False
        forced[f.symbol.id] = True
        return True
    if isinstance(f, Not) and isinstance(f.operand, Atom):
        prior = forced.get(f.operand.symbol.id)
        if prior is True:
            return False
        forced[f.operand.symbol.id] = False
        return True
    if isinstance(f, And):
        return _push_ast(f.left, asts, forced) and _push_ast(f.right, asts, forced)
    asts.append(f)
    return True


def _dpll(clauses: list[tuple[int, ...]], asts: list[Formula], assign: dict[int, bool]) -> dict[int, bool] | None:
    while True:
        forced: dict[int, bool] = {}
        next_clauses: list[tuple[int, ...]] = []
        for cl in clauses:
            satisfied = False
            remaining: list[int] = []
            for lit in cl:
                value = assign.get(lit >> 1)
                if value is None:
                    remaining.append(lit)
                elif value != bool(lit & 1):
                    satisfied = True
                    break
            if satisfied:
                continue
            if not remaining:
                return None
            if len(remaining) == 1:
                lit = remaining[0]
                want = not (lit & 1)
                prior = forced.get(lit >> 1)
                if prior is not None and prior != want:
                    return None
                forced[lit >> 1] = want
            else:
                next_clauses.append(tuple(remaining))
        next_asts: list[Formula] = []
        for f in asts:
            if not _push_ast(_reduce(f, assign), next_asts, forced):
                return None
        if forced:
            assign = dict(assign)
            assign.update(forced)
            clauses, asts = next_clauses, next_asts
            continue
        clauses, asts = next_clauses, next_asts
        break

    if not clauses and not asts:
        return assign

    candidates: set[int] = set()
    for cl in clauses:
        for lit in cl:
            candidates.add(lit >> 1)
    for f in asts:
        candidates.update(sym.id for sym in atoms(f))
    var = min(candidates)
    for value in (False, True):
        branched = dict(assign)
        branched[var] = value
        model = _dpll(clauses, asts, branched)
        if model is not None:
            return model
    return None


def find_model(
    *constraints: Constraint,
    complete_over: Iterable[Symbol] = (),
) -> dict[int, bool] | None:
    """A satisfying assignment keyed by symbol id, or None; unforced symbols get False."""
    clauses, asts = _compile(constraints)
    model = _dpll(clauses, asts, {})
    if model is None:
        return None
    for sym in complete_over:
        model.setdefault(sym.id, False)
    return model


def is_satisfiable(*constraints: Constraint) -> bool:
    return find_model(*constraints) is not None


def _negation(conclusion: Constraint | Iterable[Constraint]) -> Formula:
    if isinstance(conclusion, CnfFormula):
        return Not(conclusion.to_formula())
    if isinstance(conclusion, Clause):
        return Not(conclusion.to_formula())
    if isinstance(conclusion, PartialAssignment):
        return Not(conclusion.to_term().to_formula())
    if isinstance(conclusion, Formula):
        return Not(conclusion)
    return Not(conjoin(_as_formula(c) for c in conclusion))


def _as_formula(c: Constraint) -> Formula:
    if isinstance(c, Formula):
        return c
    if isinstance(c, (CnfFormula, Clause)):
        return c.to_formula()
    if isinstance(c, PartialAssignment):
        return c.to_term().to_formula()
    raise TypeError(f"not a constraint: {c!r}")


def entails(premises: Iterable[Constraint], conclusion: Constraint | Iterable[Constraint]) -> bool:
    """True iff the conjunction of premises entails the conclusion (set semantics)."""
    return not is_satisfiable(*premises, _negation(conclusion))


def equivalent(a: Iterable[Constraint], b: Iterable[Constraint]) -> bool:
    """S = S' in the set sense: each side entails the conjunction of the other."""
    a = tuple(a)
    b = tuple(b)
    return entails(a, b) and entails(b, a)
