"""GIT-cones, the GIT-fan and the common-cone test for weight pairs.

The GIT-cone of a weight ``u`` is the intersection of all orbit cones that
contain ``u``.  To find every GIT-cone we cut the weight cone by all facet
hyperplanes of all orbit cones: on each relatively open cell of that
arrangement the set of orbit cones containing a point is constant, so one
sample point per cell suffices.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .cone import Cone, faces, intersect, intersect_all, is_face, sort_key
from .orbits import OrbitConeSet, cone_to_dict

MAX_FAN_DIM = 3


class OutsideWeightConeError(ValueError):
    def __init__(self, u, what="weight"):
        self.u = tuple(u)
        super().__init__(f"{what} {tuple(u)} is not in the weight cone")


class FanDimensionError(ValueError):
    pass


class FanAxiomError(RuntimeError):
    """The computed collection is not a fan; this indicates a bug."""

    def __init__(self, problems):
        self.problems = problems
        super().__init__("; ".join(problems))


def _check_weight(u, oc: OrbitConeSet, what="weight"):
    u = tuple(u)
    if not all(isinstance(x, int) for x in u):
        raise TypeError(f"{what} {u} must be an integer vector")
    if not oc.weight_cone.contains(u):
        raise OutsideWeightConeError(u, what)
    return u


def git_cone(u: Sequence[int], oc: OrbitConeSet) -> Cone:
    u = _check_weight(u, oc)
    containing = oc.containing(u)
    if not containing:
        raise OutsideWeightConeError(u, "weight (covered by no orbit cone)")
    return intersect_all(containing)


def orbit_cone_implication_failures(u, v, oc: OrbitConeSet) -> list[Cone]:
    """Orbit cones that contain ``u + v`` but miss ``u`` or ``v``."""
    w = tuple(a + b for a, b in zip(u, v))
    return [c for c in oc.cones if c.contains(w) and not (c.contains(u) and c.contains(v))]


def common_git_cone(u, v, oc: OrbitConeSet) -> Optional[Cone]:
    """The GIT-cone of ``u + v`` if it contains both weights, else None.

    Decided by the orbit cones: every orbit cone containing ``u + v`` must
    contain ``u`` and ``v``.
    """
    u = _check_weight(u, oc)
    v = _check_weight(v, oc)
    if orbit_cone_implication_failures(u, v, oc):
        return None
    return git_cone(tuple(a + b for a, b in zip(u, v)), oc)


@dataclass
class GITFan:
    cones: list
    weight_cone: Optional[Cone] = None
    source: Optional[OrbitConeSet] = field(default=None, repr=False)

    @property
    def maximal_cones(self) -> list[Cone]:
        return [c for c in self.cones
                if not any(c != d and c.issubset(d) for d in self.cones)]

    @property
    def rays(self) -> list[Cone]:
        return [c for c in self.cones if c.dim == len(c.lineality) + 1]

    def index(self, c: Cone) -> int:
        return self.cones.index(c)

    def members_containing(self, *points) -> list[Cone]:
        return [c for c in self.cones if all(c.contains(p) for p in points)]

    def to_dict(self) -> dict:
        keys = {c.key: i for i, c in enumerate(self.cones)}
        maximal = {c.key for c in self.maximal_cones}
        out = []
        for i, c in enumerate(self.cones):
            entry = cone_to_dict(c)
            entry["index"] = i
            entry["maximal"] = c.key in maximal
            entry["faces"] = sorted(keys[f.key] for f in faces(c) if f != c and f.key in keys)
            out.append(entry)
        doc = {"cones": out, "maximal": [keys[c.key] for c in self.maximal_cones]}
        if self.weight_cone is not None:
            doc["weight_cone"] = cone_to_dict(self.weight_cone)
        return doc


def arrangement_chambers(region: Cone, hyperplanes: Sequence) -> list[Cone]:
    """Closed full-dimensional chambers cut out of ``region`` by the hyperplanes."""
    chambers = [region]
    for h in dict.fromkeys(tuple(h) for h in hyperplanes):
        neg = tuple(-x for x in h)
        split = []
        for c in chambers:
            for side in (h, neg):
                piece = Cone.from_inequalities(c.ambient_dim, c.inequalities + (side,), c.equations)
                if piece.dim == region.dim:
                    split.append(piece)
        chambers = list({c.key: c for c in split}.values())
    return sorted(chambers, key=sort_key)


def cell_samples(region: Cone, hyperplanes: Sequence) -> list[tuple]:
    """One relative-interior integer point for every cell of the arrangement."""
    cells = {}
    for chamber in arrangement_chambers(region, hyperplanes):
        for f in faces(chamber):
            cells.setdefault(f.key, f)
    return [cells[k].interior_point() for k in sorted(cells, key=lambda k: sort_key(cells[k]))]


@dataclass
class FanCheck:
    ok: bool
    problems: list

    def __bool__(self):
        return self.ok


def verify_fan(fan: GITFan) -> FanCheck:
    """Check closure under faces, the intersection axiom and coverage."""
    problems = []
    members = {c.key for c in fan.cones}
    for c in fan.cones:
        for f in faces(c):
            if f.key not in members:
                problems.append(f"face {f} of {c} is not a member")
    for c1, c2 in combinations(fan.cones, 2):
        meet = intersect(c1, c2)
        if not (is_face(meet, c1) and is_face(meet, c2)):
            problems.append(f"{c1} and {c2} meet in {meet}, which is not a face of both")
    if fan.weight_cone is not None:
        for c in fan.cones:
            if not c.issubset(fan.weight_cone):
                problems.append(f"{c} leaves the weight cone")
        hyperplanes = [h for c in fan.cones for h in c.facet_hyperplanes()]
        for chamber in arrangement_chambers(fan.weight_cone, hyperplanes):
            s = chamber.interior_point()
            if not any(c.contains(s) for c in fan.cones):
                problems.append(f"point {s} of the weight cone is covered by no member")
    return FanCheck(not problems, problems)


def enumerate_gitfan(oc: OrbitConeSet, wc: Optional[Cone] = None, max_dim: int = MAX_FAN_DIM) -> GITFan:
    """All GIT-cones, closed under faces, sorted by (dimension, key)."""
    wc = wc if wc is not None else oc.weight_cone
    if wc.ambient_dim > max_dim:
        raise FanDimensionError(
            f"full fan enumeration is limited to lattice rank <= {max_dim}, got {wc.ambient_dim}"
        )
    hyperplanes = [h for c in oc.cones for h in c.facet_hyperplanes()]
    found = {}
    for s in cell_samples(wc, hyperplanes):
        if not oc.containing(s):
            continue
        lam = intersect_all(oc.containing(s))
        found.setdefault(lam.key, lam)
    for c in list(found.values()):
        for f in faces(c):
            found.setdefault(f.key, f)
    fan = GITFan(sorted(found.values(), key=sort_key), wc, oc)
    check = verify_fan(fan)
    if not check:
        raise FanAxiomError(check.problems)
    return fan
