"""Graded presentations: variables, weights and homogeneous relations.

Input documents are YAML (JSON is accepted as well, being a subset)::

    variables: [T1, T2, T3, T4]
    weights: [[4, 1], [2, 1], [1, 2], [1, 3]]
    relations: []
"""

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import yaml

from .cone import Cone
from .polynomial import Polynomial, PolynomialParseError, default_labels, parse_polynomial

INTEGRALITY_ASSUMPTION = (
    "the relation ideal is assumed to be prime (integral algebra); this is not checked"
)

_FIELDS = {"variables", "weights", "relations"}


class PresentationError(ValueError):
    """Malformed or invalid presentation."""


class InhomogeneousRelationError(PresentationError):
    def __init__(self, relation: str, first, second):
        self.relation = relation
        self.weights = (tuple(first), tuple(second))
        super().__init__(
            f"relation {relation!r} is not homogeneous: "
            f"terms of weight {tuple(first)} and {tuple(second)}"
        )


class ConstantRelationError(PresentationError):
    def __init__(self, relation: str):
        self.relation = relation
        super().__init__(f"relation {relation!r} is a nonzero constant; the ideal must be proper")


@dataclass(frozen=True)
class GradedPresentation:
    """Polynomial ring ``Q[T_1..T_r]`` graded by ``deg T_i = weights[i]``, modulo relations."""

    weights: tuple
    relations: tuple = ()
    labels: tuple = field(default=())

    def __post_init__(self):
        weights = tuple(tuple(int(x) for x in w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise PresentationError("at least one variable is required")
        d = len(weights[0])
        if d == 0:
            raise PresentationError("weights must have length at least 1")
        if any(len(w) != d for w in weights):
            raise PresentationError("all weights must have the same length")
        labels = tuple(self.labels) or tuple(default_labels(len(weights)))
        if len(labels) != len(weights):
            raise PresentationError(f"{len(labels)} variable names but {len(weights)} weights")
        if len(set(labels)) != len(labels):
            raise PresentationError("variable names must be distinct")
        object.__setattr__(self, "labels", labels)
        rels = tuple(self.relations)
        for q in rels:
            if q.nvars != len(weights):
                raise PresentationError(f"relation {q} has {q.nvars} variables, expected {len(weights)}")
        object.__setattr__(self, "relations", rels)

    @property
    def r(self) -> int:
        return len(self.weights)

    @property
    def d(self) -> int:
        return len(self.weights[0])

    @property
    def Q(self) -> tuple:
        """The d x r degree matrix; column i is the weight of T_i."""
        return tuple(tuple(w[k] for w in self.weights) for k in range(self.d))

    def degree(self, exps) -> tuple:
        return tuple(sum(e * w[k] for e, w in zip(exps, self.weights)) for k in range(self.d))

    def relation_strings(self) -> list[str]:
        return [q.to_string(self.labels) for q in self.relations]

    def to_document(self) -> dict:
        return {
            "variables": list(self.labels),
            "weights": [list(w) for w in self.weights],
            "relations": self.relation_strings(),
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_document(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def presentation_from_document(doc) -> GradedPresentation:
    if not isinstance(doc, dict):
        raise PresentationError("presentation document must be a mapping")
    unknown = set(doc) - _FIELDS
    if unknown:
        raise PresentationError(f"unknown field(s): {', '.join(sorted(map(str, unknown)))}")
    if "weights" not in doc:
        raise PresentationError("missing field 'weights'")
    weights = doc["weights"]
    if not isinstance(weights, list) or not all(isinstance(w, list) for w in weights):
        raise PresentationError("'weights' must be a list of integer vectors")
    for w in weights:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in w):
            raise PresentationError(f"weight {w} has non-integer entries")
    labels = doc.get("variables") or default_labels(len(weights))
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise PresentationError("'variables' must be a list of names")
    relations = doc.get("relations") or []
    if not isinstance(relations, list):
        raise PresentationError("'relations' must be a list of polynomial strings")
    polys = []
    for text in relations:
        try:
            polys.append(parse_polynomial(str(text), labels))
        except PolynomialParseError as exc:
            raise PresentationError(str(exc)) from exc
    return GradedPresentation(tuple(weights), tuple(polys), tuple(labels))


def parse_presentation(text: str) -> GradedPresentation:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise PresentationError(f"cannot parse document: {exc}") from exc
    return presentation_from_document(doc)


def load_presentation(path) -> GradedPresentation:
    return parse_presentation(Path(path).read_text())


@dataclass(frozen=True)
class ValidationReport:
    r: int
    d: int
    relation_degrees: tuple
    assumptions: tuple = (INTEGRALITY_ASSUMPTION,)

    def to_dict(self):
        return {
            "valid": True,
            "variables": self.r,
            "lattice_rank": self.d,
            "relation_degrees": [list(w) if w is not None else None for w in self.relation_degrees],
            "assumptions": list(self.assumptions),
        }


def validate(p: GradedPresentation) -> ValidationReport:
    """Check homogeneity and properness of every relation.

    Primality of the relation ideal is not decided; it is recorded as an
    assumption in the report.
    """
    degrees = []
    for q, text in zip(p.relations, p.relation_strings()):
        if not q:
            degrees.append(None)
            continue
        if q.is_constant():
            raise ConstantRelationError(text)
        first = None
        for m in sorted(q.terms):
            w = p.degree(m)
            if first is None:
                first = w
            elif w != first:
                raise InhomogeneousRelationError(text, first, w)
        degrees.append(first)
    return ValidationReport(p.r, p.d, tuple(degrees))


def weight_cone(p: GradedPresentation) -> Cone:
    return Cone.from_generators(p.d, p.weights)


def kernel_orthant_cone(p: GradedPresentation) -> Cone:
    """The cone ``{a >= 0 : Q a = 0}`` in Q^r."""
    r = p.r
    unit = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    return Cone.from_inequalities(r, unit, p.Q)


def fibers_bounded(p: GradedPresentation) -> bool:
    """True iff every ``{a >= 0 : Q a = u}`` is bounded."""
    return kernel_orthant_cone(p).dim == 0
