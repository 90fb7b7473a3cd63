"""Rational polyhedral cones with both descriptions kept in sync.

A cone is stored as ``lineality + cone(rays)`` together with its irredundant
inequalities ``<a, x> >= 0`` and equations ``<e, x> = 0``.  All vectors are
primitive integer tuples in a canonical normal form, so two cones are equal
exactly when their keys are equal.

The conversion between the two descriptions is the incremental double
description method; it is meant for small ambient dimensions and a few dozen
generators, not for large polytopes.
"""

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact import (
    DimensionError,
    canonical_row_basis,
    dot,
    integral_direction,
    is_zero,
    kernel,
    orthogonal_basis,
    primitive,
    project_out,
)


def _neg(v):
    return tuple(-x for x in v)


def _combine(a, p, n):
    """Positive combination of ``p`` (a.p > 0) and ``n`` (a.n < 0) on the hyperplane a = 0."""
    ap, an = dot(a, p), dot(a, n)
    return primitive(tuple(ap * y - an * x for x, y in zip(p, n)))


def double_description(dim: int, inequalities: Sequence, equations: Sequence = ()):
    """Generators of ``{x : A x >= 0, E x = 0}``.

    Returns ``(lineality, rays)``: a basis of the lineality space and the
    extreme rays modulo lineality, both as primitive integer vectors (not yet
    in canonical form).
    """
    lineality = [integral_direction(v) for v in kernel(list(equations), dim)]
    rays: list[tuple] = []
    processed: list[tuple] = []

    for a in inequalities:
        a = tuple(a)
        if len(a) != dim:
            raise DimensionError(f"inequality {a} does not live in dimension {dim}")
        k = next((i for i, l in enumerate(lineality) if dot(a, l) != 0), None)
        if k is not None:
            pivot = lineality[k]
            if dot(a, pivot) < 0:
                pivot = _neg(pivot)
            ap = dot(a, pivot)
            new_lineality = []
            for i, l in enumerate(lineality):
                if i == k:
                    continue
                al = dot(a, l)
                w = tuple(ap * x - al * y for x, y in zip(l, pivot))
                new_lineality.append(primitive(w))
            new_rays = []
            for r in rays:
                ar = dot(a, r)
                w = tuple(ap * x - ar * y for x, y in zip(r, pivot))
                new_rays.append(primitive(w))
            lineality = new_lineality
            rays = list(dict.fromkeys(new_rays + [pivot]))
        else:
            values = [dot(a, r) for r in rays]
            pos = [r for r, s in zip(rays, values) if s > 0]
            neg = [r for r, s in zip(rays, values) if s < 0]
            zero = [r for r, s in zip(rays, values) if s == 0]
            new_rays = pos + zero
            if pos and neg:
                tight = {r: frozenset(i for i, b in enumerate(processed) if dot(b, r) == 0) for r in rays}
                for p in pos:
                    for n in neg:
                        common = tight[p] & tight[n]
                        if any(common <= tight[r] for r in rays if r != p and r != n):
                            continue
                        new_rays.append(_combine(a, p, n))
            rays = list(dict.fromkeys(new_rays))
        processed.append(a)
    return lineality, rays


class Cone:
    """A convex polyhedral cone in Q^d, possibly containing lines.

    Build instances with :meth:`from_generators` or :meth:`from_inequalities`;
    the constructor expects already canonical data.
    """

    __slots__ = ("ambient_dim", "rays", "lineality", "inequalities", "equations", "_key")

    def __init__(self, ambient_dim, rays, lineality, inequalities, equations):
        self.ambient_dim = ambient_dim
        self.rays = rays
        self.lineality = lineality
        self.inequalities = inequalities
        self.equations = equations
        self._key = (ambient_dim, lineality, rays)

    # -- construction -----------------------------------------------------

    @classmethod
    def _canonical(cls, dim, lineality, rays, equations, facets):
        lin = canonical_row_basis(lineality)
        lin_orth = orthogonal_basis(lin)
        canon_rays = set()
        for r in rays:
            w = project_out(r, lin_orth)
            if not is_zero(w):
                canon_rays.add(integral_direction(w))
        eqs = canonical_row_basis(equations)
        eq_orth = orthogonal_basis(eqs)
        canon_facets = set()
        for a in facets:
            w = project_out(a, eq_orth)
            if not is_zero(w):
                canon_facets.add(integral_direction(w))
        return cls(dim, tuple(sorted(canon_rays)), lin, tuple(sorted(canon_facets)), eqs)

    @classmethod
    def from_generators(cls, ambient_dim: int, generators: Iterable[Sequence[int]]) -> "Cone":
        gens = []
        for g in generators:
            g = tuple(Fraction(x) for x in g)
            if len(g) != ambient_dim:
                raise DimensionError(f"generator {g} does not live in dimension {ambient_dim}")
            if not is_zero(g):
                gens.append(integral_direction(g))
        gens = list(dict.fromkeys(gens))
        # the dual cone's lineality gives the equations, its rays the facets
        eqs, facets = double_description(ambient_dim, gens)
        lineality, rays = double_description(ambient_dim, facets, eqs)
        return cls._canonical(ambient_dim, lineality, rays, eqs, facets)

    @classmethod
    def from_inequalities(cls, ambient_dim: int, inequalities: Iterable[Sequence] = (),
                          equations: Iterable[Sequence] = ()) -> "Cone":
        ineqs = [integral_direction(a) for a in inequalities if not is_zero(a)]
        eqs = [integral_direction(e) for e in equations if not is_zero(e)]
        for v in ineqs + eqs:
            if len(v) != ambient_dim:
                raise DimensionError(f"{v} does not live in dimension {ambient_dim}")
        lineality, rays = double_description(ambient_dim, list(dict.fromkeys(ineqs)), eqs)
        gens = rays + lineality + [_neg(l) for l in lineality]
        dual_lin, dual_rays = double_description(ambient_dim, gens)
        return cls._canonical(ambient_dim, lineality, rays, dual_lin, dual_rays)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Cone":
        return cls.from_generators(ambient_dim, [])

    # -- basic data -------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def generators(self) -> tuple:
        """Rays followed by both orientations of the lineality basis."""
        return self.rays + self.lineality + tuple(_neg(l) for l in self.lineality)

    @property
    def key(self):
        return self._key

    def is_pointed(self) -> bool:
        return not self.lineality

    def interior_point(self) -> tuple:
        """An integer point of the relative interior (the sum of the rays)."""
        total = [0] * self.ambient_dim
        for r in self.rays:
            total = [x + y for x, y in zip(total, r)]
        return tuple(total)

    def __eq__(self, other):
        return isinstance(other, Cone) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __repr__(self):
        parts = [f"rays={list(self.rays)}"]
        if self.lineality:
            parts.append(f"lineality={list(self.lineality)}")
        return f"Cone({', '.join(parts)})"

    # -- predicates -------------------------------------------------------

    def _check(self, p):
        if len(p) != self.ambient_dim:
            raise DimensionError(f"point {tuple(p)} does not live in dimension {self.ambient_dim}")

    def contains(self, p: Sequence) -> bool:
        self._check(p)
        return (all(dot(e, p) == 0 for e in self.equations)
                and all(dot(a, p) >= 0 for a in self.inequalities))

    def relative_interior_contains(self, p: Sequence) -> bool:
        self._check(p)
        return (all(dot(e, p) == 0 for e in self.equations)
                and all(dot(a, p) > 0 for a in self.inequalities))

    def issubset(self, other: "Cone") -> bool:
        _same_space(self, other)
        return all(other.contains(g) for g in self.generators)

    def facet_hyperplanes(self) -> tuple:
        """Normals of all hyperplanes needed to cut this cone out."""
        return self.inequalities + self.equations


def sort_key(c: Cone):
    return (c.dim, c.key)


def _same_space(c1: Cone, c2: Cone):
    if c1.ambient_dim != c2.ambient_dim:
        raise DimensionError(f"cones live in dimensions {c1.ambient_dim} and {c2.ambient_dim}")


def cone_from_generators(ambient_dim: int, generators: Iterable[Sequence[int]]) -> Cone:
    return Cone.from_generators(ambient_dim, generators)


def contains(c: Cone, p: Sequence) -> bool:
    return c.contains(p)


def relative_interior_contains(c: Cone, p: Sequence) -> bool:
    return c.relative_interior_contains(p)


def cones_equal(c1: Cone, c2: Cone) -> bool:
    """Mutual containment."""
    return c1.issubset(c2) and c2.issubset(c1)


def intersect(c1: Cone, c2: Cone) -> Cone:
    _same_space(c1, c2)
    return Cone.from_inequalities(c1.ambient_dim, c1.inequalities + c2.inequalities,
                                  c1.equations + c2.equations)


def intersect_all(cones: Sequence[Cone]) -> Cone:
    if not cones:
        raise ValueError("intersection of an empty family")
    d = cones[0].ambient_dim
    ineqs, eqs = [], []
    for c in cones:
        _same_space(cones[0], c)
        ineqs.extend(c.inequalities)
        eqs.extend(c.equations)
    return Cone.from_inequalities(d, ineqs, eqs)


def _facet_faces(c: Cone) -> list[Cone]:
    out = []
    for a in c.inequalities:
        tight = [r for r in c.rays if dot(a, r) == 0]
        out.append(Cone.from_generators(c.ambient_dim, tight + list(c.generators[len(c.rays):])))
    return out


def faces(c: Cone) -> list[Cone]:
    """All faces of ``c``, from the lineality space up to ``c`` itself."""
    seen = {c.key: c}
    todo = [c]
    while todo:
        f = todo.pop()
        for g in _facet_faces(f):
            if g.key not in seen:
                seen[g.key] = g
                todo.append(g)
    return sorted(seen.values(), key=sort_key)


def minimal_face_containing(c: Cone, p: Sequence) -> Optional[Cone]:
    """Smallest face of ``c`` containing ``p``, or None when p is outside c."""
    if not c.contains(p):
        return None
    tight = [a for a in c.inequalities if dot(a, p) == 0]
    return Cone.from_inequalities(c.ambient_dim, c.inequalities, c.equations + tuple(tight))


def is_face(f: Cone, c: Cone) -> bool:
    _same_space(f, c)
    if not f.issubset(c):
        return False
    return minimal_face_containing(c, f.interior_point()) == f
