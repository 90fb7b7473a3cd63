import pytest
from hypothesis import given, strategies as st

from gitfan.cone import cone_from_generators
from gitfan.presentation import (
    ConstantRelationError,
    GradedPresentation,
    InhomogeneousRelationError,
    PresentationError,
    fibers_bounded,
    parse_presentation,
    validate,
    weight_cone,
)
from gitfan.polynomial import parse_polynomial

from conftest import DET_WEIGHTS, EXAMPLE_WEIGHTS

T4 = ("T1", "T2", "T3", "T4")


def test_example_fixture_is_valid(example):
    assert example.weights == EXAMPLE_WEIGHTS
    assert example.relations == ()
    report = validate(example)
    assert report.r == 4 and report.d == 2
    assert "prime" in report.assumptions[0]


def test_homogeneous_relation_is_valid(det):
    assert validate(det).relation_degrees == ((1, 2),)


def test_inhomogeneous_relation_is_rejected():
    p = GradedPresentation(DET_WEIGHTS, (parse_polynomial("T1 - T2", T4),), T4)
    with pytest.raises(InhomogeneousRelationError) as info:
        validate(p)
    assert info.value.relation == "T1 - T2"
    assert set(info.value.weights) == {(1, 0), (1, 1)}


def test_constant_relation_is_rejected():
    p = GradedPresentation(DET_WEIGHTS, (parse_polynomial("3", T4),), T4)
    with pytest.raises(ConstantRelationError):
        validate(p)


def test_document_parsing():
    p = parse_presentation("""
variables: [a, b]
weights: [[1], [2]]
relations: ["a^2 - b"]
""")
    assert p.labels == ("a", "b") and p.Q == ((1, 2),)
    assert validate(p).relation_degrees == ((2,),)
    # JSON is accepted too, and names default to T1..Tr
    q = parse_presentation('{"weights": [[1, 0], [0, 1]]}')
    assert q.labels == ("T1", "T2") and q.relations == ()


@pytest.mark.parametrize("doc", [
    "weights: [[1, 0]]\nextra: 1",
    "variables: [T1]",
    "weights: [[1, 0], [1]]",
    "weights: [[1.5, 0]]",
    "variables: [a, b]\nweights: [[1]]",
    "weights: [[1]]\nrelations: ['T2']",
    "- just a list",
    "weights: [[1]\n",
])
def test_bad_documents(doc):
    with pytest.raises(PresentationError):
        parse_presentation(doc)


def test_weight_cone_examples(example):
    assert weight_cone(example) == cone_from_generators(2, [(4, 1), (1, 3)])
    ray = weight_cone(GradedPresentation(((1,),)))
    assert ray.rays == ((1,),) and ray.dim == 1
    line = weight_cone(GradedPresentation(((1, 0), (-1, 0))))
    assert line.lineality == ((1, 0),)


def test_fibers_bounded_examples(example):
    assert fibers_bounded(example)
    assert not fibers_bounded(GradedPresentation(((1,), (-1,))))
    assert fibers_bounded(GradedPresentation(((1, 0), (0, 1))))
    assert not fibers_bounded(GradedPresentation(((1, 0), (0, 0))))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=5))
def test_weight_cone_contains_every_weight(weights):
    p = GradedPresentation(tuple(map(tuple, weights)))
    wc = weight_cone(p)
    assert all(wc.contains(w) for w in p.weights)


@given(st.integers(0, 3), st.integers(0, 1), st.integers(-1, 1).filter(bool))
def test_weight_perturbation_breaks_homogeneity(var, coord, delta):
    weights = [list(w) for w in DET_WEIGHTS]
    weights[var][coord] += delta
    p = GradedPresentation(tuple(map(tuple, weights)), (parse_polynomial("T1*T4 - T2*T3", T4),), T4)
    with pytest.raises(InhomogeneousRelationError):
        validate(p)
