"""
Counting monomials in a degree
==============================

For a polynomial ring the monomials of degree u are the lattice points of
a fiber polytope.  Multiplication A_u x A_v -> A_{u+v} is onto exactly when
these lattice points add up to all of the target fiber.
"""

from gitfan import fiber_lattice_points, minkowski_sum, oracle_scan, surjectivity_check

Q = [[4, 2, 1, 1],
     [1, 1, 2, 3]]

# the monomials of degree (6,6)
print(fiber_lattice_points(Q, (6, 6)).points)

# sums of degree-(4,2) and degree-(2,4) monomials miss T1*T3*T4
a = fiber_lattice_points(Q, (4, 2))
b = fiber_lattice_points(Q, (2, 4))
print("sums:", minkowski_sum(a, b))
print(surjectivity_check((2, 1), (1, 2), 2, Q))

# table of a full scan
report = oracle_scan((3, 2), (2, 1), 12, Q)
print(" n  onto  |u|  |v|  |u+v|")
for o in report.degrees:
    print(f"{o.n:2d}  {'yes' if o.surjective else 'no ':3s}  {o.fiber_u:3d}  {o.fiber_v:3d}  {o.target:4d}")
print(report.annotation, "with m =", report.generating_pattern_m)
