"""
Orbit cones of a graded algebra with a relation
================================================

A = K[T1..T4] / <T1*T4 - T2*T3> with weights (1,0), (1,1), (0,1), (0,2).
A subset of variables only contributes an orbit cone when the product of
its variables survives in the radical of the relations restricted to it.
"""

from pathlib import Path

from gitfan import enumerate_gitfan, enumerate_orbit_cones, load_presentation, relevant_subset
from gitfan.polynomial import radical_membership
from gitfan.orbits import subset_monomial, substituted_ideal

here = Path(__file__).resolve().parent
p = load_presentation(here / "determinantal.input")
print(p.relation_strings())

# {T1, T4}: setting T2 = T3 = 0 leaves the relation T1*T4, which kills T1*T4
for subset in [(0, 3), (1, 2), (0, 1), (0, 1, 2, 3)]:
    names = [p.labels[i] for i in subset]
    ideal = substituted_ideal(p, subset)
    in_radical = radical_membership(subset_monomial(p.r, subset), ideal)
    print(names, "relevant" if relevant_subset(subset, p) else "irrelevant",
          "(product in radical)" if in_radical else "")

oc = enumerate_orbit_cones(p)
for c, w in zip(oc.cones, oc.witnesses):
    print("orbit cone", c.rays, "from", [[p.labels[i] for i in s] for s in w][:3])

fan = enumerate_gitfan(oc)
print("maximal cones:", [c.rays for c in fan.maximal_cones])
