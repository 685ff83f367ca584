"""Pattern recognition with the branchwise similarity measure.

Intuitionistic fuzzy sets assign a value to every element of a finite
universe.  The pointwise distance compares accuracies when scores agree and
scores otherwise, so any score separation dominates.  Weighted sums give a
distance and similarity between sets, and classification picks the most
similar labeled pattern.

Run from the repository root; uses the building-materials fixture that the
test suite also exercises.
"""

import json
from pathlib import Path

from ifvkit import Ifs, WeightVector, classify, make_ifv, rho

# Pointwise behavior: equal scores compare by accuracy, a cheap refinement...
a, b = make_ifv(0.3, 0.1), make_ifv(0.4, 0.2)
print(f"rho({a}, {b}) = {rho(a, b):.4f}   (equal scores)")
# ...while any score gap jumps past 1/3.
c = make_ifv(0.5, 0.3)
print(f"rho({a}, {c}) = {rho(a, c):.4f}   (score gap)")
print()

request = json.loads(
    (Path(__file__).parent.parent / "tests" / "data" / "building_materials.json")
    .read_text()
)
universe = request["universe"]
patterns = [
    (label, Ifs.from_json({"universe": universe, "values": row}))
    for label, row in request["patterns"].items()
]
unknown = Ifs.from_json({"universe": universe, "values": request["unknown"]})
weights = WeightVector(tuple(request["weights"]))

result = classify(unknown, patterns, weights)
print("similarity of each known material class to the unknown specimen:")
for label, sim in result.ranking:
    print(f"  {label}: {sim:.4f}")
print(f"classified as: {result.winner}")
