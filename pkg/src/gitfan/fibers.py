"""Lattice points of fibers and degreewise surjectivity for polynomial rings.

For ``A = K[T_1..T_r]`` graded by ``Q``, the monomials of degree ``u`` are
the nonnegative integer solutions of ``Q a = u``.  Multiplication
``A_u (x) A_v -> A_{u+v}`` is onto exactly when every such solution for
``u + v`` is a sum of one for ``u`` and one for ``v``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Optional, Sequence

from .cone import Cone
from .exact import dot, rank, rref
from .presentation import GradedPresentation, fibers_bounded, weight_cone


class UnboundedFibersError(ValueError):
    pass


class RelationsPresentError(ValueError):
    pass


def _as_presentation(p) -> GradedPresentation:
    if isinstance(p, GradedPresentation):
        return p
    # a bare d x r matrix
    rows = [tuple(row) for row in p]
    return GradedPresentation(tuple(zip(*rows)))


def _require_polynomial_ring(p: GradedPresentation):
    if p.relations:
        raise RelationsPresentError(
            "the lattice-point criterion only holds for polynomial rings; "
            f"this presentation has {len(p.relations)} relation(s)"
        )


@lru_cache(maxsize=256)
def positive_functional(weights: tuple) -> tuple:
    """An integer vector ``c`` with ``c . w > 0`` for every weight ``w``.

    The sum of the facet normals of a pointed weight cone is strictly
    positive on every nonzero element of the cone.
    """
    p = GradedPresentation(weights)
    if not fibers_bounded(p):
        raise UnboundedFibersError(
            "some nonzero nonnegative exponent vector has degree 0; fibers are unbounded"
        )
    wc = weight_cone(p)
    c = tuple(sum(col) for col in zip(*wc.inequalities)) if wc.inequalities else (0,) * p.d
    assert all(dot(c, w) > 0 for w in weights)
    return c


@dataclass(frozen=True)
class FiberPoints:
    u: tuple
    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, a):
        return tuple(a) in set(self.points)


def fiber_lattice_points(Q, u: Sequence[int]) -> FiberPoints:
    """All ``a >= 0`` in Z^r with ``Q a = u``, sorted lexicographically.

    Depth-first search; every coordinate is bounded through a functional
    that is positive on all weights.
    """
    p = _as_presentation(Q)
    u = tuple(int(x) for x in u)
    if len(u) != p.d:
        raise ValueError(f"degree {u} has length {len(u)}, expected {p.d}")
    return FiberPoints(u, _fiber(p.weights, u))


def _basis_columns(weights) -> list[int]:
    """Indices of a maximal independent set of weights, picked from the back."""
    chosen = []
    for i in reversed(range(len(weights))):
        if rank([weights[j] for j in chosen + [i]]) > len(chosen):
            chosen.append(i)
    return sorted(chosen)


def _integer_inverse(rows):
    """``(adj, D)`` with ``adj / D`` the inverse of the square matrix ``rows``."""
    k = len(rows)
    red, _ = rref([list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(rows)])
    inv = [r[k:] for r in red]
    D = 1
    for x in (x for r in inv for x in r):
        D = D * x.denominator // gcd(D, x.denominator)
    return [[int(x * D) for x in r] for r in inv], D


@lru_cache(maxsize=256)
def _fiber_plan(weights: tuple):
    """Search order, suffix-cone inequalities and the closed-form solver."""
    d = len(weights[0])
    basis = _basis_columns(weights)
    free = [i for i in range(len(weights)) if i not in basis]
    cols = [weights[i] for i in basis]
    # rows of the d x k block that are independent
    block = [tuple(c[row] for c in cols) for row in range(d)]
    picked = []
    for row in range(d):
        if rank([block[j] for j in picked + [row]]) > len(picked):
            picked.append(row)
    adj, D = _integer_inverse([block[row] for row in picked])
    # cone(weights of positions >= level) in the search order, as inequalities
    order = free + basis
    suffix = []
    for level in range(len(free) + 1):
        c = Cone.from_generators(d, [weights[i] for i in order[level:]])
        suffix.append((c.inequalities, c.equations))
    return free, basis, cols, picked, adj, D, suffix


@lru_cache(maxsize=4096)
def _fiber(weights: tuple, u: tuple) -> tuple:
    c = positive_functional(weights)
    free, basis, cols, picked, adj, D, suffix = _fiber_plan(weights)
    cw = [dot(c, weights[i]) for i in free]
    r = len(weights)
    found = []
    exps = [0] * r

    def feasible(level, rest):
        ineqs, eqs = suffix[level]
        return all(dot(a, rest) >= 0 for a in ineqs) and all(dot(e, rest) == 0 for e in eqs)

    def solve(rest):
        sub = [rest[row] for row in picked]
        xs = []
        for arow in adj:
            num = dot(arow, sub)
            if num < 0 or num % D:
                return
            xs.append(num // D)
        if any(sum(x * col[j] for x, col in zip(xs, cols)) != rest[j] for j in range(len(rest))):
            return
        for i, x in zip(basis, xs):
            exps[i] = x
        found.append(tuple(exps))

    def search(level, rest):
        if not feasible(level, rest):
            return
        if level == len(free):
            solve(rest)
            return
        w = weights[free[level]]
        budget = dot(c, rest)
        for k in range(budget // cw[level] + 1):
            exps[free[level]] = k
            search(level + 1, tuple(x - k * y for x, y in zip(rest, w)))
        exps[free[level]] = 0

    search(0, u)
    return tuple(sorted(found))


def minkowski_sum(a, b) -> tuple:
    """``{p + q}`` over both point sets, deduplicated and sorted."""
    a, b = list(a), list(b)
    if a and b and len(a[0]) != len(b[0]):
        raise ValueError("point sets live in different dimensions")
    return tuple(sorted({tuple(x + y for x, y in zip(p, q)) for p, q in product(a, b)}))


@dataclass(frozen=True)
class DegreeOutcome:
    n: int
    surjective: bool
    witness: Optional[tuple]
    fiber_u: int
    fiber_v: int
    sumset: int
    target: int

    def to_dict(self):
        return {
            "n": self.n,
            "surjective": self.surjective,
            "witness": list(self.witness) if self.witness is not None else None,
            "fiber_u": self.fiber_u,
            "fiber_v": self.fiber_v,
            "sumset": self.sumset,
            "target": self.target,
        }


def surjectivity_check(u, v, n: int, Q) -> DegreeOutcome:
    """Whether ``A_{nu} (x) A_{nv} -> A_{n(u+v)}`` is onto.

    A failure carries the lexicographically smallest monomial exponent of
    degree ``n(u+v)`` that is not a product.
    """
    p = _as_presentation(Q)
    _require_polynomial_ring(p)
    nu = tuple(n * x for x in u)
    nv = tuple(n * x for x in v)
    a = fiber_lattice_points(p, nu)
    b = fiber_lattice_points(p, nv)
    target = fiber_lattice_points(p, tuple(x + y for x, y in zip(nu, nv)))
    sums = minkowski_sum(a, b)
    sum_set = set(sums)
    target_set = set(target.points)
    if not sum_set <= target_set:
        raise AssertionError(f"sumset escapes the target fiber at n={n}")
    missing = sorted(target_set - sum_set)
    witness = missing[0] if missing else None
    return DegreeOutcome(n, not missing, witness, len(a), len(b), len(sums), len(target))


GENERATING = "evidence: generating pattern"
NOT_GENERATING = "evidence: not generating up to bound"


@dataclass(frozen=True)
class OracleReport:
    u: tuple
    v: tuple
    bound: int
    degrees: tuple

    @property
    def surjective_degrees(self) -> list[int]:
        return [o.n for o in self.degrees if o.surjective]

    @property
    def generating_pattern_m(self) -> Optional[int]:
        """Smallest m whose every scanned multiple is surjective."""
        ok = {o.n for o in self.degrees if o.surjective}
        for m in range(1, self.bound + 1):
            if all(k * m in ok for k in range(1, self.bound // m + 1)):
                return m
        return None

    @property
    def annotation(self) -> str:
        return GENERATING if self.generating_pattern_m is not None else NOT_GENERATING

    def outcome(self, n: int) -> DegreeOutcome:
        return self.degrees[n - 1]

    def to_dict(self):
        return {
            "u": list(self.u),
            "v": list(self.v),
            "bound": self.bound,
            "degrees": [o.to_dict() for o in self.degrees],
            "surjective_degrees": self.surjective_degrees,
            "generating_pattern_m": self.generating_pattern_m,
            "annotation": self.annotation,
        }


def oracle_scan(u, v, N: int, Q) -> OracleReport:
    """Run :func:`surjectivity_check` for ``n = 1..N``.

    Each per-degree outcome is exact.  The annotation is only evidence: the
    generating property asks for all multiples of some m, which no finite
    scan can confirm.
    """
    if N < 1:
        raise ValueError("scan bound must be positive")
    p = _as_presentation(Q)
    u, v = tuple(u), tuple(v)
    return OracleReport(u, v, N, tuple(surjectivity_check(u, v, n, p) for n in range(1, N + 1)))
