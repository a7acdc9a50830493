"""Clausal forms: literals, clauses, canonical CNF, and partial assignments.

Canonical order is fixed once and used everywhere: literals sort by
(symbol id, polarity) with positive before negative, clauses sort
lexicographically by their literal keys, and a CNF formula stores its clauses
sorted and deduplicated.  TOP is the empty CNF; BOTTOM is the CNF holding the
empty clause.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .formula import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Bottom,
    Formula,
    Not,
    Or,
    Symbol,
    conjoin,
    disjoin,
)

__all__ = [
    "Literal",
    "Clause",
    "CnfFormula",
    "CNF_TOP",
    "CNF_BOTTOM",
    "PartialAssignment",
    "cnf_size",
    "canonicalize",
    "canonical_clauses",
    "to_cnf",
    "format_cnf",
]


@dataclass(frozen=True)
class Literal:
    """A possibly negated proposition symbol."""

    symbol: Symbol
    negated: bool = False

    @property
    def dual(self) -> "Literal":
        return Literal(self.symbol, not self.negated)

    @property
    def key(self) -> tuple[int, bool]:
        return (self.symbol.id, self.negated)

    def to_formula(self) -> Formula:
        atom = Atom(self.symbol)
        return Not(atom) if self.negated else atom

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return assignment[self.symbol.id] != self.negated

    def __str__(self) -> str:
        return ("!" if self.negated else "") + self.symbol.name


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals, stored sorted and deduplicated.

    The empty clause denotes falsum. Tautological clauses (p | !p) may exist
    transiently in parsed input but are banned from solver output by
    canonicalize().
    """

    literals: tuple[Literal, ...]

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> "Clause":
        return cls(tuple(sorted(set(literals), key=lambda l: l.key)))

    @property
    def size(self) -> int:
        return len(self.literals)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    @property
    def is_tautology(self) -> bool:
        seen = set()
        for lit in self.literals:
            if (lit.symbol.id, not lit.negated) in seen:
                return True
            seen.add(lit.key)
        return False

    @property
    def key(self) -> tuple[tuple[int, bool], ...]:
        return tuple(lit.key for lit in self.literals)

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return any(lit.satisfied_by(assignment) for lit in self.literals)

    def to_formula(self) -> Formula:
        return disjoin(lit.to_formula() for lit in self.literals)

    def __str__(self) -> str:
        return "(" + " | ".join(str(lit) for lit in self.literals) + ")"


@dataclass(frozen=True)
class CnfFormula:
    """A conjunction of clauses, stored sorted and deduplicated."""

    clauses: tuple[Clause, ...]

    @classmethod
    def of(cls, clauses: Iterable[Clause]) -> "CnfFormula":
        return cls(tuple(sorted(set(clauses), key=lambda c: c.key)))

    @property
    def size(self) -> int:
        return sum(c.size for c in self.clauses)

    @property
    def is_top(self) -> bool:
        return not self.clauses

    @property
    def has_empty_clause(self) -> bool:
        return any(c.is_empty for c in self.clauses)

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(c.satisfied_by(assignment) for c in self.clauses)

    def to_formula(self) -> Formula:
        if self.is_top:
            return TOP
        return conjoin(c.to_formula() for c in self.clauses)

    def symbols(self) -> frozenset[Symbol]:
        return frozenset(lit.symbol for c in self.clauses for lit in c.literals)

    def __str__(self) -> str:
        return format_cnf(self)


CNF_TOP = CnfFormula(())
CNF_BOTTOM = CnfFormula((Clause(()),))


def cnf_size(cnf: CnfFormula) -> int:
    """Total literal occurrences; 0 for both the empty CNF and the empty clause."""
    return cnf.size


def canonicalize(cnf: CnfFormula) -> CnfFormula:
    """Deduplicated, tautology-free, deterministically ordered equivalent form.

    Any CNF containing the empty clause collapses to the bare empty clause.
    Idempotent and equivalence-preserving.
    """
    kept = [c for c in cnf.clauses if not c.is_tautology]
    if any(c.is_empty for c in kept):
        return CNF_BOTTOM
    return CnfFormula.of(kept)


def format_cnf(cnf: CnfFormula) -> str:
    """Canonical serialization: 'true', 'false', or parenthesized clauses joined by '&'."""
    if cnf.is_top:
        return "true"
    if cnf.has_empty_clause:
        return "false"
    return " & ".join(str(c) for c in cnf.clauses)


def canonical_clauses(symbols: Sequence[Symbol], max_width: int | None = None) -> list[Clause]:
    """All non-empty, non-tautological clauses in canonical (pure lexicographic) order."""
    syms = sorted(symbols, key=lambda s: s.id)
    width_cap = len(syms) if max_width is None else min(max_width, len(syms))
    out: list[Clause] = []
    for width in range(1, width_cap + 1):
        for combo in combinations(syms, width):
            for polarity in product((False, True), repeat=width):
                out.append(Clause.of(Literal(sym, neg) for sym, neg in zip(combo, polarity)))
    out.sort(key=lambda c: c.key)
    return out


# --- conversion from the AST -------------------------------------------------

def _nnf(f: Formula, negate: bool) -> Formula:
    if isinstance(f, Bottom):
        return TOP if negate else BOTTOM
    if isinstance(f, Atom):
        return Not(f) if negate else f
    if isinstance(f, Not):
        return _nnf(f.operand, not negate)
    if isinstance(f, And):
        ctor = Or if negate else And
        return ctor(_nnf(f.left, negate), _nnf(f.right, negate))
    if isinstance(f, Or):
        ctor = And if negate else Or
        return ctor(_nnf(f.left, negate), _nnf(f.right, negate))
    raise TypeError(f"not a formula: {f!r}")


def _clause_sets(f: Formula) -> set[frozenset[Literal]]:
    """CNF of an NNF formula as a set of literal sets; {} is TOP, {frozenset()} is BOTTOM."""
    if isinstance(f, Bottom):
        return {frozenset()}
    if isinstance(f, Atom):
        return {frozenset({Literal(f.symbol)})}
    if isinstance(f, Not):
        # NNF: negation sits directly on an atom or on Bottom (i.e. TOP).
        if isinstance(f.operand, Bottom):
            return set()
        assert isinstance(f.operand, Atom)
        return {frozenset({Literal(f.operand.symbol, True)})}
    if isinstance(f, And):
        return _clause_sets(f.left) | _clause_sets(f.right)
    if isinstance(f, Or):
        left = _clause_sets(f.left)
        right = _clause_sets(f.right)
        if not left or not right:
            return set()
        merged: set[frozenset[Literal]] = set()
        for a in left:
            for b in right:
                c = a | b
                if len({lit.symbol.id for lit in c}) == len(c):  # drop tautologies eagerly
                    merged.add(c)
        return merged
    raise TypeError(f"not a formula: {f!r}")


def to_cnf(f: Formula) -> CnfFormula:
    """Distribution-based CNF conversion; exponential worst case, inputs are small."""
    sets = _clause_sets(_nnf(f, False))
    return canonicalize(CnfFormula.of(Clause.of(lits) for lits in sets))


# --- partial assignments ------------------------------------------------------

@dataclass(frozen=True)
class PartialAssignment:
    """A partial map from symbols to truth values, identified with a term.

    Stored as bindings sorted by symbol id; at most one binding per symbol.
    """

    bindings: tuple[tuple[Symbol, bool], ...]

    @classmethod
    def of(cls, mapping: Mapping[Symbol, bool] | Iterable[tuple[Symbol, bool]]) -> "PartialAssignment":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        by_symbol: dict[Symbol, bool] = {}
        for sym, value in items:
            if sym in by_symbol and by_symbol[sym] != bool(value):
                raise ValueError(f"conflicting bindings for {sym.name}")
            by_symbol[sym] = bool(value)
        return cls(tuple(sorted(by_symbol.items(), key=lambda kv: kv[0].id)))

    @classmethod
    def from_literals(cls, literals: Iterable[Literal]) -> "PartialAssignment":
        return cls.of((lit.symbol, not lit.negated) for lit in literals)

    def literals(self) -> tuple[Literal, ...]:
        return tuple(Literal(sym, not value) for sym, value in self.bindings)

    def to_term(self) -> CnfFormula:
        return CnfFormula.of(Clause.of([lit]) for lit in self.literals())

    def as_dict(self) -> dict[Symbol, bool]:
        return dict(self.bindings)

    def symbols(self) -> tuple[Symbol, ...]:
        return tuple(sym for sym, _ in self.bindings)

    def get(self, symbol: Symbol) -> bool | None:
        for sym, value in self.bindings:
            if sym == symbol:
                return value
        return None

    def __len__(self) -> int:
        return len(self.bindings)

    def __str__(self) -> str:
        return format_cnf(self.to_term())
