"""Walkthrough: the five solvers on the sea-bird case.

A bird with a beak pouch was classified as a pelican (phi) and not as a
seagull (psi).  The counterfactual-difference answer rebuilds the whole
bird; the counterfactual-contrastive answer keeps only the load-bearing
facts.
"""

from contrastix import Vocabulary, parse_formula, SolveOptions
from contrastix.solver import solve_cce, solve_cd, solve_gce, solve_sep
from contrastix.cli import format_text

vocab = Vocabulary()
phi = parse_formula("beak_pouch", vocab)
psi = parse_formula("!beak_pouch & small & ((white_body & webbed_feet) | grey_wing)", vocab)
s = [
    parse_formula(t, vocab)
    for t in ("beak_pouch", "!small", "white_body", "webbed_feet", "!grey_wing")
]

print("counterfactual difference (what would the closest seagull look like?):")
cd = solve_cd(s, phi, psi)
print(format_text(cd))

print("\ncounterfactual contrastive explanation (which facts carry the decision?):")
cce = solve_cce(s, phi, psi)
print(format_text(cce))

print("\nglobal contrast between the two classifiers:")
gce = solve_gce(phi, psi)
print(format_text(gce))

print("\nminimal separator between pelican and seagull:")
sep = solve_sep(phi, psi)
print(format_text(sep))

print("\npartial-assignment (terms) shape for the difference problem:")
cd_terms = solve_cd(s, phi, psi, SolveOptions(shape="terms"))
print(format_text(cd_terms))
