"""Shared test utilities: independent truth-table references and formula builders.

Everything here decides semantics by brute-force enumeration over total
assignments, on purpose: it is the yardstick the package's DPLL engine and
bitmask oracle are measured against.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from contrastix.cnf import Clause, CnfFormula, Literal, PartialAssignment
from contrastix.formula import (
    And,
    Atom,
    Formula,
    Not,
    Or,
    Symbol,
    Vocabulary,
    atoms,
    conjoin,
    disjoin,
    evaluate,
    parse_formula,
)


def assignments(symbols: Sequence[Symbol]) -> Iterator[dict[int, bool]]:
    ids = [sym.id for sym in symbols]
    for values in product((False, True), repeat=len(ids)):
        yield dict(zip(ids, values))


def holds(item: Formula | CnfFormula, assignment: dict[int, bool]) -> bool:
    if isinstance(item, CnfFormula):
        return item.satisfied_by(assignment)
    return evaluate(item, assignment)


def brute_models(item: Formula | CnfFormula, symbols: Sequence[Symbol]) -> list[dict[int, bool]]:
    return [a for a in assignments(symbols) if holds(item, a)]


def brute_satisfiable(item: Formula | CnfFormula, symbols: Sequence[Symbol]) -> bool:
    return any(holds(item, a) for a in assignments(symbols))


def brute_entails(
    premises: Iterable[Formula | CnfFormula],
    conclusion: Formula | CnfFormula,
    symbols: Sequence[Symbol],
) -> bool:
    premises = tuple(premises)
    return all(
        holds(conclusion, a)
        for a in assignments(symbols)
        if all(holds(p, a) for p in premises)
    )


def symbols_of(*items: Formula | CnfFormula) -> list[Symbol]:
    out: set[Symbol] = set()
    for item in items:
        out |= item.symbols() if isinstance(item, CnfFormula) else atoms(item)
    return sorted(out, key=lambda s: s.id)


def exactly_k(symbols: Sequence[Symbol], k: int) -> Formula:
    """Formula satisfied precisely by assignments mapping exactly k symbols to 1."""
    terms = []
    for trues in combinations(range(len(symbols)), k):
        lits = [
            Atom(sym) if j in trues else Not(Atom(sym))
            for j, sym in enumerate(symbols)
        ]
        terms.append(conjoin(lits))
    return disjoin(terms)


def pqr() -> tuple[Vocabulary, Symbol, Symbol, Symbol]:
    vocab = Vocabulary(["p", "q", "r"])
    p, q, r = vocab.symbols()
    return vocab, p, q, r


def parse(text: str, vocab: Vocabulary) -> Formula:
    return parse_formula(text, vocab)


def unit(sym: Symbol, negated: bool = False) -> Clause:
    return Clause.of([Literal(sym, negated)])


def cnf_of(*clauses: Clause) -> CnfFormula:
    return CnfFormula.of(clauses)


def clause(*lits: tuple[Symbol, bool]) -> Clause:
    return Clause.of(Literal(sym, neg) for sym, neg in lits)


def random_formula(rng, symbols: Sequence[Symbol], budget: int) -> Formula:
    """Random AST with at most ``budget`` atom occurrences (at least one)."""
    if budget <= 1:
        leaf: Formula = Atom(rng.choice(symbols))
        return Not(leaf) if rng.random() < 0.4 else leaf
    roll = rng.random()
    if roll < 0.2:
        return Not(random_formula(rng, symbols, budget))
    split = rng.randint(1, budget - 1)
    left = random_formula(rng, symbols, split)
    right = random_formula(rng, symbols, budget - split)
    return And(left, right) if roll < 0.6 else Or(left, right)


# --- random instance generators for the property suites --------------------------

def random_nondegenerate_pair(rng, symbols, budget: int = 8):
    """Random (phi, psi) with both phi & !psi and !phi & psi satisfiable."""
    from contrastix import sat

    while True:
        phi = random_formula(rng, symbols, rng.randint(1, budget))
        psi = random_formula(rng, symbols, rng.randint(1, budget))
        if sat.is_satisfiable(And(phi, Not(psi))) and sat.is_satisfiable(And(Not(phi), psi)):
            return phi, psi


def random_assignment(rng, symbols, total: bool) -> PartialAssignment:
    if total:
        chosen = list(symbols)
    else:
        chosen = [sym for sym in symbols if rng.random() < 0.7]
        if not chosen:
            chosen = [rng.choice(symbols)]
    return PartialAssignment.of({sym: rng.random() < 0.5 for sym in chosen})


def random_counterfactual_instance(rng, symbols, total_s: bool, force_negation: bool = False):
    """(S literals, phi, psi) with S |= phi & !psi and !phi & psi satisfiable, or None."""
    from contrastix import sat

    s = random_assignment(rng, symbols, total=total_s)
    s_term = conjoin(lit.to_formula() for lit in s.literals())
    if rng.random() < 0.7:
        phi: Formula = Or(s_term, random_formula(rng, symbols, rng.randint(1, 4)))
    else:
        phi = s_term
    if force_negation or rng.random() < 0.25:
        psi: Formula = Not(phi)
    else:
        psi = random_formula(rng, symbols, rng.randint(1, 6))
    if not sat.entails([s_term], And(phi, Not(psi))):
        return None
    if not sat.is_satisfiable(And(Not(phi), psi)):
        return None
    return s, phi, psi


def random_ce_instance(rng, symbols, budget: int = 8):
    """(S, S', phi, psi) with satisfiable S, S' entailing the two sides, or None."""
    from contrastix import sat

    phi = random_formula(rng, symbols, rng.randint(1, budget))
    psi = random_formula(rng, symbols, rng.randint(1, budget))
    m1 = sat.find_model(And(phi, Not(psi)), complete_over=symbols)
    m2 = sat.find_model(And(Not(phi), psi), complete_over=symbols)
    if m1 is None or m2 is None:
        return None

    def as_set(model, shrink: bool):
        pa = PartialAssignment.of({sym: model[sym.id] for sym in symbols})
        lits = list(pa.literals())
        if shrink:
            rng.shuffle(lits)
            target = And(phi, Not(psi)) if model is m1 else And(Not(phi), psi)
            kept = list(lits)
            for lit in lits:
                trial = [l for l in kept if l != lit]
                if trial and sat.entails([conjoin(l.to_formula() for l in trial)], target):
                    kept = trial
        else:
            kept = lits
        return tuple(l.to_formula() for l in sorted(kept, key=lambda l: l.key))

    s = as_set(m1, shrink=rng.random() < 0.5)
    sp = as_set(m2, shrink=rng.random() < 0.5)
    return s, sp, phi, psi
