"""Walkthrough: the exhaustive oracle - enumeration, ground truth, flip sets.

The oracle decides everything by truth table over small vocabularies and
reports *all* optimal triples, which is what the production solver is
validated against.
"""

from contrastix import (
    PartialAssignment,
    ProblemInstance,
    Vocabulary,
    enumerate_cnf,
    oracle_min_flip,
    oracle_solve,
    parse_formula,
)

vocab = Vocabulary(["p", "q"])
p, q = vocab.symbols()

print("Every canonical CNF over {p} up to size 1:")
for f in enumerate_cnf((p,), 1):
    print("  ", f)

print("\nAll canonical CNFs over {p, q} with size <= 2:", len(list(enumerate_cnf((p, q), 2))))

print("\nOracle on a counterfactual-difference instance S={p,q}, phi=p, psi=!p:")
inst = ProblemInstance.cd(
    (parse_formula("p", vocab), parse_formula("q", vocab)),
    parse_formula("p", vocab),
    parse_formula("!p", vocab),
)
res = oracle_solve(inst)
print("  optimum total", res.total_size, "with shared chi size", res.chi_size)
for theta, theta_prime, chi in res.optima:
    print("  optimal triple:", theta, "|", theta_prime, "|", chi)

print("\nMinimal flip sets (cardinality-minimal counterfactual changes):")
s = PartialAssignment.of({p: True, q: True})
flip = oracle_min_flip(s, parse_formula("!p & q", vocab))
print("  from {p, q} to reach !p & q, flip:", [str(l) for l in flip.literals])
