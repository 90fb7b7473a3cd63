import random

import pytest
from hypothesis import given, settings, strategies as st

from gitfan.cone import cone_from_generators, faces
from gitfan.fan import (
    FanDimensionError,
    GITFan,
    OutsideWeightConeError,
    common_git_cone,
    enumerate_gitfan,
    git_cone,
    orbit_cone_implication_failures,
    verify_fan,
)
from gitfan.orbits import enumerate_orbit_cones
from gitfan.polynomial import parse_polynomial
from gitfan.presentation import GradedPresentation


def C(*gens, d=2):
    return cone_from_generators(d, gens)


ZERO = C()


@pytest.fixture(scope="module")
def example_fan(example_oc):
    return enumerate_gitfan(example_oc)


def test_example_fan(example_fan):
    assert set(example_fan.maximal_cones) == {C((4, 1), (2, 1)), C((2, 1), (1, 2)), C((1, 2), (1, 3))}
    assert {c for c in example_fan.cones if c.dim == 1} == {C((4, 1)), C((2, 1)), C((1, 2)), C((1, 3))}
    assert ZERO in example_fan.cones
    assert len(example_fan.cones) == 8
    assert verify_fan(example_fan)


def test_example_fan_serialisation(example_fan):
    doc = example_fan.to_dict()
    assert [c["rays"] for c in doc["cones"] if c["maximal"]] == [
        [[1, 2], [1, 3]], [[1, 2], [2, 1]], [[2, 1], [4, 1]]]
    middle = next(c for c in doc["cones"] if c["rays"] == [[1, 2], [2, 1]])
    face_rays = sorted(tuple(map(tuple, doc["cones"][i]["rays"])) for i in middle["faces"])
    assert face_rays == [(), ((1, 2),), ((2, 1),)]


def test_single_ray_fan():
    fan = enumerate_gitfan(enumerate_orbit_cones(GradedPresentation(((1,),))))
    assert fan.cones == [cone_from_generators(1, []), cone_from_generators(1, [(1,)])]


def test_quadrant_fan():
    fan = enumerate_gitfan(enumerate_orbit_cones(GradedPresentation(((1, 0), (0, 1)))))
    assert set(fan.cones) == set(faces(C((1, 0), (0, 1))))


def test_git_cone_examples(example_oc):
    assert git_cone((3, 2), example_oc) == C((2, 1), (1, 2))
    assert git_cone((2, 1), example_oc) == C((2, 1))
    assert git_cone((0, 0), example_oc) == ZERO
    with pytest.raises(OutsideWeightConeError):
        git_cone((1, 0), example_oc)


def test_git_cone_of_a_single_orbit_cone():
    labels = ("T1", "T2")
    p = GradedPresentation(((1,), (2,)), (parse_polynomial("T1^2 - T2", labels),), labels)
    oc = enumerate_orbit_cones(p)
    assert len(oc.containing((2,))) == 1
    assert git_cone((2,), oc) == oc.containing((2,))[0]


def test_fan_with_relation(det_oc):
    fan = enumerate_gitfan(det_oc)
    assert verify_fan(fan)
    assert set(fan.maximal_cones) == {C((1, 0), (1, 1)), C((1, 1), (0, 1))}


def test_fan_with_lines():
    p = GradedPresentation(((1, 0), (-1, 0), (0, 1)))
    fan = enumerate_gitfan(enumerate_orbit_cones(p))
    assert verify_fan(fan)
    # the y-axis ray is an orbit cone, so the upper half-plane splits in two
    assert set(fan.maximal_cones) == {C((1, 0), (0, 1)), C((-1, 0), (0, 1))}
    assert ZERO in fan.cones


def test_fan_with_a_line_as_minimal_cone():
    p = GradedPresentation(((1, 0), (-1, 0), (1, 1), (-1, 1)))
    fan = enumerate_gitfan(enumerate_orbit_cones(p))
    assert verify_fan(fan)
    assert fan.weight_cone == C((1, 0), (-1, 0), (0, 1))


def test_three_dimensional_fan():
    p = GradedPresentation(((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)))
    fan = enumerate_gitfan(enumerate_orbit_cones(p))
    assert verify_fan(fan)
    assert len(fan.maximal_cones) == 3
    assert all(c.dim == 3 for c in fan.maximal_cones)


def test_dimension_cap():
    p = GradedPresentation(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    oc = enumerate_orbit_cones(p)
    with pytest.raises(FanDimensionError):
        enumerate_gitfan(oc)
    # the pair pipeline still works in any dimension
    assert git_cone((1, 1, 0, 0), oc) == C((1, 0, 0, 0), (0, 1, 0, 0), d=4)


def test_verify_fan_rejects_broken_collections():
    # no faces and no origin
    missing_faces = verify_fan(GITFan([C((1, 0), (1, 1)), C((1, 2), (0, 1))]))
    assert not missing_faces and any("not a member" in p for p in missing_faces.problems)
    # overlapping cones: they meet in cone((1,1),(1,2)), a face of neither
    a, b = C((1, 0), (1, 2)), C((1, 1), (0, 1))
    overlap = verify_fan(GITFan(sorted(set(faces(a)) | set(faces(b)))))
    assert not overlap and any("not a face of both" in p for p in overlap.problems)


def test_verify_fan_coverage():
    c = C((1, 0), (0, 1))
    assert verify_fan(GITFan(faces(c), c))
    partial = faces(C((1, 0), (1, 1)))
    check = verify_fan(GITFan(partial, c))
    assert not check and any("covered by no member" in p for p in check.problems)


def test_common_git_cone_examples(example_oc):
    assert common_git_cone((2, 1), (1, 2), example_oc) == C((2, 1), (1, 2))
    assert common_git_cone((4, 1), (1, 3), example_oc) is None
    assert C((2, 1), (1, 2)) in orbit_cone_implication_failures((4, 1), (1, 3), example_oc)
    for u in [(2, 1), (3, 3), (4, 1), (5, 7)]:
        assert common_git_cone(u, u, example_oc) == git_cone(tuple(2 * x for x in u), example_oc)
    with pytest.raises(OutsideWeightConeError):
        common_git_cone((1, 0), (1, 1), example_oc)


def lattice_points(wc, box=8):
    return [(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1) if wc.contains((x, y))]


def test_git_cone_is_minimal_member(example_oc, example_fan):
    for u in lattice_points(example_oc.weight_cone):
        lam = git_cone(u, example_oc)
        assert lam in example_fan.cones
        assert lam.relative_interior_contains(u)
        for tau in example_fan.members_containing(u):
            assert lam.issubset(tau)


def test_members_are_git_cones_of_their_samples(example_oc, example_fan):
    for c in example_fan.cones:
        assert git_cone(c.interior_point(), example_oc) == c


def test_same_cell_criterion(example_oc):
    pts = lattice_points(example_oc.weight_cone, 6)
    for u in pts:
        for v in pts:
            same_cone = git_cone(u, example_oc) == git_cone(v, example_oc)
            same_sets = set(example_oc.containing(u)) == set(example_oc.containing(v))
            assert same_cone == same_sets


weight_lists = st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5)), min_size=1, max_size=4)


@settings(max_examples=25, deadline=None)
@given(weight_lists, st.randoms(use_true_random=False))
def test_triple_agreement(weights, rnd):
    p = GradedPresentation(tuple(weights))
    oc = enumerate_orbit_cones(p)
    fan = enumerate_gitfan(oc)
    def sample():
        coeffs = [rnd.randint(0, 2) for _ in weights]
        return tuple(sum(a * w[k] for a, w in zip(coeffs, weights)) for k in range(2))

    for _ in range(10):
        u, v = sample(), sample()
        implication = not orbit_cone_implication_failures(u, v, oc)
        shared = bool(fan.members_containing(u, v))
        common = common_git_cone(u, v, oc)
        assert implication == shared == (common is not None)
        if common is not None:
            assert common.contains(u) and common.contains(v)
