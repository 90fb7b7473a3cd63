"""Orbit cones of the torus action from a graded presentation.

A subset ``I`` of the variables is relevant when the product of the
variables in ``I`` is not in the radical of the ideal obtained from the
relations by setting all variables outside ``I`` to zero.  The orbit cones
are exactly the cones spanned by the weights of relevant subsets.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .cone import Cone, sort_key
from .polynomial import Ideal, Polynomial, radical_membership, substitute_subset
from .presentation import GradedPresentation, weight_cone

DEFAULT_SUBSET_CAP = 2 ** 20


class SubsetCapError(RuntimeError):
    def __init__(self, r: int, cap: int):
        self.r, self.cap = r, cap
        super().__init__(
            f"{r} variables give 2^{r} = {2 ** r} subsets, above the cap of {cap}; "
            "raise the cap explicitly if the run is intended"
        )


def subset_monomial(nvars: int, I: Iterable[int]) -> Polynomial:
    exps = [0] * nvars
    for i in I:
        exps[i] = 1
    return Polynomial.monomial(exps)


def substituted_ideal(p: GradedPresentation, I: Iterable[int]) -> Ideal:
    I = set(I)
    gens = [substitute_subset(q, I) for q in p.relations]
    return Ideal(p.r, [g for g in gens if g])


def relevant_subset(I: Iterable[int], p: GradedPresentation, _cache: Optional[dict] = None) -> bool:
    """Whether ``prod_{i in I} T_i`` avoids the radical of the substituted relations.

    ``I`` holds 0-based variable indices; the empty set stands for the
    constant 1.
    """
    I = frozenset(I)
    if any(i < 0 or i >= p.r for i in I):
        raise ValueError(f"subset {sorted(I)} has indices outside 0..{p.r - 1}")
    ideal = substituted_ideal(p, I)
    if not ideal.generators:
        # radical of the zero ideal is zero; a monomial is never zero
        return True
    # variables absent from the ideal are nonzerodivisors modulo its radical,
    # so only the part of the monomial inside the ideal's support matters
    support = set().union(*(g.support() for g in ideal.generators))
    core = I & support
    key = (ideal.generators, core)
    if _cache is not None and key in _cache:
        return _cache[key]
    result = not radical_membership(subset_monomial(p.r, core), ideal)
    if _cache is not None:
        _cache[key] = result
    return result


@dataclass(frozen=True)
class OrbitConeSet:
    cones: tuple
    witnesses: tuple
    weight_cone: Cone
    labels: tuple = ()

    def __len__(self):
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    def containing(self, u) -> list[Cone]:
        return [c for c in self.cones if c.contains(u)]

    def to_dict(self):
        names = self.labels
        return {
            "weight_cone": cone_to_dict(self.weight_cone),
            "orbit_cones": [
                dict(cone_to_dict(c),
                     witnesses=[[names[i] if names else i + 1 for i in I] for I in wits])
                for c, wits in zip(self.cones, self.witnesses)
            ],
        }


def cone_to_dict(c: Cone) -> dict:
    out = {"dim": c.dim, "rays": [list(r) for r in c.rays]}
    if c.lineality:
        out["lineality"] = [list(l) for l in c.lineality]
    out["inequalities"] = [list(a) for a in c.inequalities]
    out["equations"] = [list(e) for e in c.equations]
    return out


def enumerate_orbit_cones(p: GradedPresentation, subset_cap: int = DEFAULT_SUBSET_CAP) -> OrbitConeSet:
    """Test all subsets of variables and collect the distinct orbit cones.

    Output is sorted by (dimension, canonical key); each cone carries the
    sorted list of relevant subsets producing it.
    """
    if 2 ** p.r > subset_cap:
        raise SubsetCapError(p.r, subset_cap)
    cache = {}
    by_key = {}
    witnesses = {}
    for size in range(p.r + 1):
        for I in combinations(range(p.r), size):
            if not relevant_subset(I, p, cache):
                continue
            c = Cone.from_generators(p.d, [p.weights[i] for i in I])
            by_key.setdefault(c.key, c)
            witnesses.setdefault(c.key, []).append(I)
    ordered = sorted(by_key.values(), key=sort_key)
    return OrbitConeSet(
        cones=tuple(ordered),
        witnesses=tuple(tuple(sorted(witnesses[c.key])) for c in ordered),
        weight_cone=weight_cone(p),
        labels=p.labels,
    )
