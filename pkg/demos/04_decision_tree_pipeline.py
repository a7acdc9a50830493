"""Walkthrough: the decision-tree case-study pipeline, end to end in-process.

Loads the checked-in three-pivot tree, Booleanizes a flower, forms class
formulas, and runs the global and counterfactual problems - the same flow
as `contrastix pipeline`.
"""

from pathlib import Path

from contrastix import ProblemInstance, SolveOptions
from contrastix.solver import solve
from contrastix.trees import booleanize, class_formula, classify, load_instance, load_tree

data = Path(__file__).resolve().parent.parent / "tests" / "data"
model = load_tree((data / "fixture_tree.json").read_text())
features, label = load_instance((data / "fixture_instance.json").read_text())

instance = booleanize(model, features)
print("pivots:", ", ".join(f"{p.id}: {p.feature} <= {p.threshold}" for p in model.pivots))
print("instance", dict(features), "booleanizes to", instance.to_term())
print("tree predicts:", classify(model, instance), " (label:", label, ")")

phi = class_formula(model, "versicolor")
psi = class_formula(model, "virginica")
print("\nclass formula versicolor:", phi)
print("class formula virginica: ", psi)

s = tuple(lit.to_formula() for lit in instance.literals())
terms = SolveOptions(shape="terms", repair=True)

for name, inst, opts in (
    ("GCE", ProblemInstance.gce(phi, psi), SolveOptions(repair=True)),
    ("CCE", ProblemInstance.cce(s, phi, psi), terms),
    ("CD", ProblemInstance.cd(s, phi, psi), terms),
):
    sol = solve(inst, opts)
    theta, theta_prime, chi = sol.triple
    print(f"{name:4} theta: {theta} | theta': {theta_prime} | chi: {chi} (total {sol.total_size})")
