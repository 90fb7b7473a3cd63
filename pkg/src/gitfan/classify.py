"""Three-way classification of weight pairs, with optional oracle evidence.

* no common GIT-cone: the pair is not generating;
* a common GIT-cone with one of the weights in its relative interior: the
  pair is generating;
* both weights on the boundary of the common cone: the fan does not decide.
"""

import enum
from dataclasses import dataclass, field
from typing import Optional

from .cone import Cone
from .fan import _check_weight, git_cone, orbit_cone_implication_failures
from .fibers import OracleReport, oracle_scan
from .orbits import OrbitConeSet, cone_to_dict, enumerate_orbit_cones
from .presentation import GradedPresentation, INTEGRALITY_ASSUMPTION, fibers_bounded

DEFAULT_ORACLE_BOUND = 12


class Verdict(enum.Enum):
    NOT_GENERATING = "NotGenerating"
    GENERATING = "Generating"
    BOUNDARY_UNDETERMINED = "BoundaryUndetermined"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PairClassification:
    verdict: Verdict
    common_cone: Optional[Cone] = None
    interior_flags: Optional[tuple] = None
    failing_orbit_cones: tuple = ()

    def to_dict(self):
        out = {"verdict": self.verdict.value}
        if self.common_cone is not None:
            out["common_cone"] = cone_to_dict(self.common_cone)
            out["interior"] = {"u": self.interior_flags[0], "v": self.interior_flags[1]}
        else:
            out["common_cone"] = None
            out["failing_orbit_cones"] = [cone_to_dict(c) for c in self.failing_orbit_cones]
        return out


def classify_pair(u, v, oc: OrbitConeSet) -> PairClassification:
    u = _check_weight(u, oc, "u")
    v = _check_weight(v, oc, "v")
    failures = orbit_cone_implication_failures(u, v, oc)
    if failures:
        return PairClassification(Verdict.NOT_GENERATING, failing_orbit_cones=tuple(failures))
    lam = git_cone(tuple(a + b for a, b in zip(u, v)), oc)
    flags = (lam.relative_interior_contains(u), lam.relative_interior_contains(v))
    verdict = Verdict.GENERATING if any(flags) else Verdict.BOUNDARY_UNDETERMINED
    return PairClassification(verdict, lam, flags)


@dataclass(frozen=True)
class PairReport:
    u: tuple
    v: tuple
    digest: str
    classification: PairClassification
    oracle: Optional[OracleReport] = None
    oracle_note: Optional[str] = None
    assumptions: tuple = field(default=())

    @property
    def verdict(self) -> Verdict:
        return self.classification.verdict

    def to_dict(self):
        out = {
            "input": {"u": list(self.u), "v": list(self.v), "presentation": self.digest},
            "classification": self.classification.to_dict(),
            "assumptions": list(self.assumptions),
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle.to_dict()
        if self.oracle_note is not None:
            out["oracle_note"] = self.oracle_note
        return out


def oracle_unavailable_reason(p: GradedPresentation) -> Optional[str]:
    if p.relations:
        return "oracle unavailable: presentation has relations; the criterion holds for polynomial rings only"
    if not fibers_bounded(p):
        return "oracle unavailable: fibers are unbounded"
    return None


def full_report(u, v, p: GradedPresentation, oracle_bound: int = DEFAULT_ORACLE_BOUND,
                with_oracle: bool = False, oc: Optional[OrbitConeSet] = None) -> PairReport:
    """Classify ``(u, v)`` and attach an oracle scan where it applies.

    The oracle runs automatically for boundary pairs, or always with
    ``with_oracle``.  It never changes the verdict.
    """
    oc = oc or enumerate_orbit_cones(p)
    cls = classify_pair(u, v, oc)
    u, v = tuple(u), tuple(v)
    oracle = note = None
    if with_oracle or cls.verdict is Verdict.BOUNDARY_UNDETERMINED:
        note = oracle_unavailable_reason(p)
        if note is None:
            oracle = oracle_scan(u, v, oracle_bound, p)
    return PairReport(u, v, p.digest(), cls, oracle, note, (INTEGRALITY_ASSUMPTION,))
