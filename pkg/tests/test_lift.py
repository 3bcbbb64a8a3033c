##
## polygon lift test suite
##

import pytest

from orbisnake.fixtures import example_triangulation, gamma1
from orbisnake.fuzz import random_case
from orbisnake.lift import build_lift, phi_specialize, verify_lift
from orbisnake.orbifold import (ArcLabel, CrossingToken, CurveDescriptor,
                                ValidationError, make_triangulation)
from orbisnake.snake import cluster_expansion


@pytest.fixture
def t():
    return example_triangulation()


def pending_as_ordinary():
    """gamma1 relabeled as an ordinary arc (all windings are zero)."""
    d = gamma1()
    return CurveDescriptor("ordinary_arc", d.word, d.endpoints)


def test_lift_of_pending_double_crossing(t):
    d = pending_as_ordinary()
    lift = build_lift(d, t)
    # a double crossing lifts to two polygon diagonals and a pentagon
    assert len(lift.internal) == 2
    assert len(lift.triangulation.triangles) == 3
    assert len(lift.annotated) == 1
    assert all(lift.pi[s] == 1 for s in lift.internal)
    assert verify_lift(d, t)


def test_specialization_map(t):
    d = pending_as_ordinary()
    lift = build_lift(d, t)
    lifted = cluster_expansion(lift.descriptor, lift.triangulation)
    assert phi_specialize(lifted, lift) == cluster_expansion(d, t)


def test_quadrilateral_diagonal_lift():
    tq = make_triangulation(
        [ArcLabel(1, "standard"), ArcLabel(2, "boundary"),
         ArcLabel(3, "boundary"), ArcLabel(4, "boundary"),
         ArcLabel(5, "boundary")],
        [(1, 2, 3), (1, 4, 5)])
    d = CurveDescriptor("ordinary_arc", (CrossingToken(1, "right", 2),),
                        {"a": 2, "b": 3, "w": 4, "z": 5})
    assert verify_lift(d, tq)


def test_non_ordinary_kinds_rejected(t):
    with pytest.raises(ValidationError):
        build_lift(gamma1(), t)  # generalized_arc label
    with pytest.raises(ValidationError):
        build_lift(CurveDescriptor("contractible_loop"), t)


def test_arc_in_triangulation_is_trivially_verified(t):
    d = CurveDescriptor("ordinary_arc", (), {"a": 2})
    assert verify_lift(d, t)
    with pytest.raises(ValidationError):
        build_lift(d, t)  # nothing to lift


def test_nonzero_winding_rejected(t):
    d = CurveDescriptor("ordinary_arc",
                        (CrossingToken(1, "right", None, 1, 3, 2),),
                        {"a": 3, "b": 2, "w": 3, "z": 2})
    with pytest.raises(ValidationError):
        build_lift(d, t)


def test_fan_runs_never_break_at_hexagons(t):
    d = pending_as_ordinary()
    lift = build_lift(d, t)
    assert lift.s == (0, 0)


def test_lift_oracle_fuzz(rng):
    for _ in range(120):
        tt, d = random_case(rng, ordinary=True)
        assert verify_lift(d, tt)
