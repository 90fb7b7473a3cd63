"""
Which weight pairs generate?
============================

The fan decides most pairs: if no fan member holds both weights the pair
does not generate; if one of them sits in the relative interior of the
common member it does.  Pairs on the boundary are left open and get an
exact lattice-point scan as supporting evidence.
"""

from pathlib import Path

from gitfan import enumerate_orbit_cones, full_report, load_presentation

here = Path(__file__).resolve().parent
p = load_presentation(here / "paper-example.input")
oc = enumerate_orbit_cones(p)

pairs = [((3, 2), (2, 1)), ((4, 1), (1, 3)), ((2, 1), (1, 2)), ((3, 1), (6, 2))]
for u, v in pairs:
    rep = full_report(u, v, p, oracle_bound=8, oc=oc)
    cls = rep.classification
    line = f"{u} {v}: {cls.verdict}"
    if cls.common_cone is not None:
        line += f"  common cone {cls.common_cone.rays}, interior flags {cls.interior_flags}"
    else:
        line += f"  {len(cls.failing_orbit_cones)} orbit cones hold u+v but not both weights"
    print(line)
    if rep.oracle is not None:
        print("    scan:", rep.oracle.annotation, "surjective at", rep.oracle.surjective_degrees)

# the boundary pair (2,1), (1,2) fails in every degree n >= 2; the missing
# monomial is T1 * T2^(n-2) * T3^(n-1) * T4
rep = full_report((2, 1), (1, 2), p, oracle_bound=6, oc=oc)
for n in range(2, 7):
    print(n, rep.oracle.outcome(n).witness)
