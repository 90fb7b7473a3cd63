"""Exact rational and integer linear algebra.

Everything here works on plain Python ints and :class:`fractions.Fraction`,
so no intermediate value can overflow.  Vectors are tuples, matrices are
sequences of row sequences.
"""

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

IntVector = tuple
RatMatrix = list


class DimensionError(ValueError):
    """Raised when operand shapes do not fit together."""


def as_fraction_matrix(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in mat]
    if rows and any(len(row) != len(rows[0]) for row in rows):
        raise DimensionError("ragged matrix")
    return rows


def dot(a, b):
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def mat_vec(mat, v):
    return tuple(dot(row, v) for row in mat)


def transpose(mat, ncols: Optional[int] = None):
    if not mat:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*mat)]


def rref(mat: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns.

    Zero rows are dropped from the result.
    """
    rows = as_fraction_matrix(mat)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat: Sequence[Sequence]) -> int:
    return len(rref(mat)[1])


def kernel(mat: Sequence[Sequence], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of ``mat`` (a matrix with ``ncols`` columns)."""
    if mat and len(mat[0]) != ncols:
        raise DimensionError(f"expected {ncols} columns, got {len(mat[0])}")
    reduced, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve_linear(mat: Sequence[Sequence], rhs: Sequence):
    """Solve ``mat @ x = rhs`` exactly.

    Returns ``None`` for an inconsistent system, otherwise a pair
    ``(particular, kernel_basis)``.
    """
    rows = as_fraction_matrix(mat)
    if len(rhs) != len(rows):
        raise DimensionError(f"rhs has length {len(rhs)}, matrix has {len(rows)} rows")
    if not rows:
        return (), []
    ncols = len(rows[0])
    augmented = [row + [Fraction(b)] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x), kernel(rows, ncols)


def primitive(v: Sequence[int]) -> IntVector:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("primitive() of the zero vector")
    return tuple(int(x) // g for x in v)


def integral_direction(v: Sequence) -> IntVector:
    """Smallest integer vector pointing in the same direction as a rational ``v``."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive(tuple(int(Fraction(x) * den) for x in v))


def is_zero(v) -> bool:
    return all(x == 0 for x in v)


def project_out(v: Sequence, orthogonal_basis: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Remove from ``v`` its components along a pairwise orthogonal basis."""
    w = [Fraction(x) for x in v]
    for b in orthogonal_basis:
        bb = dot(b, b)
        c = dot(w, b) / bb
        w = [x - c * y for x, y in zip(w, b)]
    return tuple(w)


def orthogonal_basis(vectors: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Gram-Schmidt without normalisation; dependent vectors are skipped."""
    basis = []
    for v in vectors:
        w = project_out(v, basis)
        if not is_zero(w):
            basis.append(w)
    return basis


def canonical_row_basis(vectors: Sequence[Sequence]) -> tuple[IntVector, ...]:
    """Canonical integer basis of the row span: RREF rows scaled to primitive."""
    if not vectors:
        return ()
    reduced, _ = rref(vectors)
    return tuple(integral_direction(row) for row in reduced)
