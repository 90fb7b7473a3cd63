"""
The GIT-fan of a four-variable polynomial ring
===============================================

Grade K[T1..T4] by the weights (4,1), (2,1), (1,2), (1,3) in Z^2 and
compute its GIT-fan.
"""

from pathlib import Path

from gitfan import enumerate_gitfan, enumerate_orbit_cones, load_presentation, verify_fan

here = Path(__file__).resolve().parent
p = load_presentation(here / "paper-example.input")
print("weights:", p.weights)

# without relations every subset of variables is relevant, so the orbit
# cones are just the cones spanned by subsets of the weights
oc = enumerate_orbit_cones(p)
print(len(oc.cones), "distinct orbit cones")

# the fan: three chambers separated by the inner weights (2,1) and (1,2)
fan = enumerate_gitfan(oc)
for c in fan.maximal_cones:
    print("chamber spanned by", c.rays)
print("rays:", sorted(c.rays[0] for c in fan.rays))
print("fan axioms hold:", bool(verify_fan(fan)))

# each weight has a GIT-cone, the smallest fan member containing it
from gitfan import git_cone
for u in [(3, 2), (2, 1), (5, 4), (1, 1)]:
    print(u, "->", git_cone(u, oc).rays)
