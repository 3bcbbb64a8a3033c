##
## descriptor validation and matrix mutation test suite
##

import pytest

from orbisnake.fixtures import (BMATRIX_INDEX, bmatrix_pair,
                                example_triangulation, gamma1)
from orbisnake.orbifold import (AdjacencyError, ArcLabel, CrossingToken,
                                CurveDescriptor, EndpointError,
                                UnknownLabelError, ValidationError,
                                WindingRangeError, bmatrix_from_json,
                                bmatrix_to_json, descriptor_from_json,
                                descriptor_to_json, expand_descriptor,
                                generalized_mutate, make_bmatrix,
                                make_triangulation, principal_extend,
                                triangulation_from_json,
                                triangulation_to_json, validate)


@pytest.fixture
def t():
    return example_triangulation()


def test_gamma1_chain_data(t):
    data = expand_descriptor(gamma1(), t)
    assert data.crossings == (1, 1)
    assert data.transitions == (("hex", 1, 5, 0),)
    assert data.endpoints == (3, 2, 3, 2)
    assert not data.closed


def test_winding_out_of_range(t):
    d = CurveDescriptor("generalized_arc",
                        (CrossingToken(1, "right", None, 4, 3, 2),),
                        {"a": 3, "b": 2, "w": 3, "z": 2})
    with pytest.raises(WindingRangeError):
        validate(d, t)


def test_unknown_arc(t):
    d = CurveDescriptor("generalized_arc",
                        (CrossingToken(9, "right", None, 0, 3, 2),),
                        {"a": 3, "b": 2, "w": 3, "z": 2})
    with pytest.raises(UnknownLabelError):
        validate(d, t)


def test_bad_bigon_sides():
    tt = make_triangulation(
        [ArcLabel(1, "pending", 5), ArcLabel(2, "boundary"),
         ArcLabel(3, "boundary"), ArcLabel(4, "boundary")],
        [(1, 2, 3)])
    d = CurveDescriptor("generalized_arc",
                        (CrossingToken(1, "right", None, 0, 2, 4),),
                        {"a": 2, "b": 3, "w": 2, "z": 3})
    with pytest.raises(AdjacencyError):
        validate(d, tt)


def test_missing_endpoints(t):
    d = CurveDescriptor("generalized_arc",
                        (CrossingToken(1, "right", None, 0, 3, 2),))
    with pytest.raises(EndpointError):
        validate(d, t)


def test_closed_curve_rejects_endpoints(t):
    d = CurveDescriptor("closed_curve",
                        (CrossingToken(1, "left", None, 0, 2, 3),
                         CrossingToken(2, "right", None, 0, 1, 3)),
                        {"a": 3, "b": 2, "w": 3, "z": 2})
    with pytest.raises(EndpointError):
        validate(d, t)


def test_boundary_arc_not_crossable():
    tt = make_triangulation(
        [ArcLabel(1, "standard"), ArcLabel(2, "boundary"),
         ArcLabel(3, "boundary")],
        [(1, 2, 3)])
    d = CurveDescriptor("ordinary_arc", (CrossingToken(2, "right", 1),),
                        {"a": 1, "b": 3, "w": 1, "z": 3})
    with pytest.raises(ValidationError):
        validate(d, tt)


def test_pending_arc_needs_order():
    with pytest.raises(ValidationError):
        ArcLabel(1, "pending")
    with pytest.raises(ValidationError):
        ArcLabel(1, "standard", 5)


def test_json_round_trip(t):
    assert triangulation_from_json(triangulation_to_json(t)) == t
    for d in (gamma1(),
              CurveDescriptor("contractible_loop"),
              CurveDescriptor("orbifold_loop", order=5, loops=2),
              CurveDescriptor("kinked", inner=gamma1(), kinks=3)):
        assert descriptor_from_json(descriptor_to_json(d)) == d
    b = make_bmatrix([[0, 1], [-1, 0], [1, 0]], [False, True])
    assert bmatrix_from_json(bmatrix_to_json(b)) == b


def test_schema_version_checked(t):
    data = triangulation_to_json(t)
    data["schema_version"] = 99
    with pytest.raises(ValidationError):
        triangulation_from_json(data)


def test_pending_flip_mutation_pair():
    left, right = bmatrix_pair()
    assert generalized_mutate(left, BMATRIX_INDEX) == right
    assert generalized_mutate(right, BMATRIX_INDEX) == left


def test_principal_extend():
    b = principal_extend([[0, 1], [-1, 0]], [False, True])
    assert b.rows[2:] == ((1, 0), (0, 1))
    assert b.pending == (False, True)
    with pytest.raises(ValidationError):
        principal_extend([[0, 1, 0], [-1, 0, 0]])


def test_mutation_is_involution(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-3, 3) for _ in range(n)]
                for _ in range(n + rng.randint(0, 3))]
        pending = [rng.random() < 0.4 for _ in range(n)]
        b = make_bmatrix(rows, pending)
        k = rng.randrange(n)
        assert generalized_mutate(generalized_mutate(b, k), k) == b


def test_mutation_preserves_skew_symmetry(rng):
    for _ in range(50):
        n = rng.randint(2, 4)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.randint(-2, 2)
                rows[i][j], rows[j][i] = v, -v
        b = make_bmatrix(rows)  # all columns standard
        k = rng.randrange(n)
        top = generalized_mutate(b, k).rows
        assert all(top[i][j] == -top[j][i]
                   for i in range(n) for j in range(n))


def test_mutation_index_range():
    b = make_bmatrix([[0, 1], [-1, 0]])
    with pytest.raises(IndexError):
        generalized_mutate(b, 2)
