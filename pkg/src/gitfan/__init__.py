"""GIT-fans of multigraded algebras and surjectivity of the multiplication map."""

from .classify import PairClassification, PairReport, Verdict, classify_pair, full_report
from .cone import (
    Cone,
    cone_from_generators,
    cones_equal,
    contains,
    faces,
    intersect,
    is_face,
    relative_interior_contains,
)
from .exact import primitive, rank, solve_linear
from .fan import GITFan, common_git_cone, enumerate_gitfan, git_cone, verify_fan
from .fibers import fiber_lattice_points, minkowski_sum, oracle_scan, surjectivity_check
from .orbits import OrbitConeSet, enumerate_orbit_cones, relevant_subset
from .polynomial import (
    DEGREVLEX,
    LEX,
    Ideal,
    MonomialOrder,
    Polynomial,
    groebner_basis,
    ideal_membership,
    normal_form,
    parse_polynomial,
    radical_membership,
    substitute_subset,
)
from .presentation import (
    GradedPresentation,
    fibers_bounded,
    load_presentation,
    parse_presentation,
    validate,
    weight_cone,
)

__version__ = "0.1.0"
