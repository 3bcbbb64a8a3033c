"""Frozen reference data for the verification suites.

Everything here is literal data: descriptors, their expected Laurent
expansions, a before/after matrix mutation pair, and verified skein
identities.  The expected polynomials are written out term by term so that
the tests compare the engine against independent records rather than
against its own output.
"""

from __future__ import annotations

from .orbifold import (ArcLabel, CrossingToken, CurveDescriptor,
                       Triangulation, make_bmatrix, make_triangulation)
from .ring import CoefPoly, LaurentPoly
from .skein import SkeinFixture

# ---------------------------------------------------------------------------
# the running example: a disk with two orbifold points of orders 5 and 7,
# triangulated by two pending arcs sharing a bigon with one boundary side


def example_triangulation() -> Triangulation:
    return make_triangulation(
        [ArcLabel(1, "pending", 5), ArcLabel(2, "pending", 7),
         ArcLabel(3, "boundary")],
        [(3, 2, 1)])


def in_triangulation(arc_id: int) -> CurveDescriptor:
    """The arc itself: empty crossing word, expansion x_arc."""
    return CurveDescriptor("ordinary_arc", (), {"a": arc_id})


def gamma1() -> CurveDescriptor:
    """One double crossing of the order-5 pending arc."""
    return CurveDescriptor(
        "generalized_arc",
        (CrossingToken(1, "right", None, 0, 3, 2),),
        {"a": 3, "b": 2, "w": 3, "z": 2})


def gamma2() -> CurveDescriptor:
    """Around both orbifold points and back through the first."""
    return CurveDescriptor(
        "generalized_arc",
        (CrossingToken(1, "left", None, 0, 3, 2),
         CrossingToken(2, "left", None, 0, 1, 3),
         CrossingToken(1, "right", None, 0, 2, 3)),
        {"a": 2, "b": 3, "w": 2, "z": 3})


def gamma3() -> CurveDescriptor:
    """Once around each orbifold point, ending on the first pending arc."""
    return CurveDescriptor(
        "generalized_arc",
        (CrossingToken(1, "right", None, 0, 3, 2),
         CrossingToken(2, "right", None, 0, 1, 3)),
        {"a": 3, "b": 2, "w": 1, "z": 3})


def gamma4() -> CurveDescriptor:
    """The closed curve enclosing both orbifold points."""
    return CurveDescriptor(
        "closed_curve",
        (CrossingToken(1, "left", None, 0, 2, 3),
         CrossingToken(2, "right", None, 0, 1, 3)))


def _poly(*terms) -> LaurentPoly:
    """Sum of (coefficient, {"x1": e, "y2": e, ...}) literal terms."""
    out = LaurentPoly.zero()
    for coef, exps in terms:
        mono = {(name[0], int(name[1:])): e for name, e in exps.items()}
        out = out + LaurentPoly.monomial(mono, coef)
    return out


_L5 = CoefPoly.lam(5)
_L7 = CoefPoly.lam(7)


def gamma1_target() -> LaurentPoly:
    return _poly(
        (1, {"x1": -1, "x3": 2}),
        (_L5, {"x1": -1, "x2": 1, "x3": 1, "y1": 1}),
        (1, {"x1": -1, "x2": 2, "y1": 2}))


def gamma2_target() -> LaurentPoly:
    return _poly(
        (1, {"x2": -1, "x3": 2, "y1": 4, "y2": 2}),
        (_L7, {"x1": -1, "x2": -1, "x3": 3, "y1": 4, "y2": 1}),
        (_L5 * _L7, {"x1": -1, "x3": 2, "y1": 3, "y2": 1}),
        (1, {"x1": -2, "x2": -1, "x3": 4, "y1": 4}),
        (_L7, {"x1": -1, "x2": 1, "x3": 1, "y1": 2, "y2": 1}),
        (_L5.scale(2), {"x1": -2, "x3": 3, "y1": 3}),
        (_L5 * _L5 + CoefPoly.const(2), {"x1": -2, "x2": 1, "x3": 2, "y1": 2}),
        (_L5.scale(2), {"x1": -2, "x2": 2, "x3": 1, "y1": 1}),
        (1, {"x1": -2, "x2": 3}))


def gamma3_target() -> LaurentPoly:
    return _poly(
        (1, {"x1": -1, "x2": 1, "x3": 1, "y1": 2, "y2": 2}),
        (_L5, {"x1": -1, "x3": 2, "y1": 1, "y2": 2}),
        (1, {"x1": -1, "x2": -1, "x3": 3, "y2": 2}),
        (_L7, {"x2": -1, "x3": 2, "y2": 1}),
        (1, {"x1": 1, "x2": -1, "x3": 1}))


def gamma4_target() -> LaurentPoly:
    return _poly(
        (1, {"x1": -1, "x2": 1, "y1": 2, "y2": 2}),
        (_L5, {"x1": -1, "x3": 1, "y1": 1, "y2": 2}),
        (1, {"x1": -1, "x2": -1, "x3": 2, "y2": 2}),
        (_L7, {"x2": -1, "x3": 1, "y2": 1}),
        (1, {"x1": 1, "x2": -1}))


def arc_fixtures():
    """(name, descriptor, expected expansion) triples on the example."""
    return (
        ("gamma1", gamma1(), gamma1_target()),
        ("gamma2", gamma2(), gamma2_target()),
        ("gamma3", gamma3(), gamma3_target()),
        ("gamma4", gamma4(), gamma4_target()),
    )


# ---------------------------------------------------------------------------
# extended B-matrix mutation: flipping a pending arc, principal coefficients

BMATRIX_PENDING = (False, False, True)
BMATRIX_INDEX = 2  # the pending column

BMATRIX_LEFT = (
    (0, 1, -1),
    (-1, 0, 1),
    (1, -1, 0),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
)

BMATRIX_RIGHT = (
    (0, -1, 1),
    (1, 0, -1),
    (-1, 1, 0),
    (1, 0, 0),
    (0, 1, 0),
    (2, 0, -1),
)


def bmatrix_pair():
    return (make_bmatrix(BMATRIX_LEFT, BMATRIX_PENDING),
            make_bmatrix(BMATRIX_RIGHT, BMATRIX_PENDING))


# ---------------------------------------------------------------------------
# skein identities


def _ymono(**exps) -> LaurentPoly:
    return LaurentPoly.monomial(
        {("y", int(k[1:])): v for k, v in exps.items()}, 1)


def _quadrilateral() -> Triangulation:
    return make_triangulation(
        [ArcLabel(1, "standard"), ArcLabel(2, "boundary"),
         ArcLabel(3, "boundary"), ArcLabel(4, "boundary"),
         ArcLabel(5, "boundary")],
        [(1, 2, 3), (1, 4, 5)])


def _annulus() -> Triangulation:
    return make_triangulation(
        [ArcLabel(1, "standard"), ArcLabel(2, "standard"),
         ArcLabel(3, "boundary"), ArcLabel(4, "boundary")],
        [(1, 2, 3), (2, 1, 4)])


def skein_fixtures():
    t = example_triangulation()

    # flipping a pending arc: the three-term exchange relation at order 5
    flip5 = SkeinFixture(
        "flip-exchange-p5", "three_term", t,
        y=(LaurentPoly.one(), _ymono(y1=1), _ymono(y1=2)),
        order=5, g1=gamma1(), g2=in_triangulation(1),
        b1=in_triangulation(3), b2=in_triangulation(2))

    # same shape at order 2: lambda_2 = 0 kills the middle term
    t2 = make_triangulation(
        [ArcLabel(1, "pending", 2), ArcLabel(2, "boundary"),
         ArcLabel(3, "boundary")],
        [(3, 2, 1)])
    g1p2 = CurveDescriptor(
        "generalized_arc",
        (CrossingToken(1, "right", None, 0, 3, 2),),
        {"a": 3, "b": 2, "w": 3, "z": 2})
    flip2 = SkeinFixture(
        "flip-exchange-p2-degenerate", "three_term", t2,
        y=(LaurentPoly.one(), _ymono(y1=1), _ymono(y1=2)),
        order=2, g1=g1p2, g2=in_triangulation(1),
        b1=in_triangulation(3), b2=in_triangulation(2))

    # crossing diagonals of a quadrilateral resolve into the two side pairs
    tq = _quadrilateral()
    diag = CurveDescriptor("ordinary_arc", (CrossingToken(1, "right", 2),),
                           {"a": 2, "b": 3, "w": 4, "z": 5})
    ptolemy = SkeinFixture(
        "ptolemy-quadrilateral", "two_term", tq,
        c=(diag, in_triangulation(1)),
        c1=(in_triangulation(2), in_triangulation(4)),
        c2=(in_triangulation(3), in_triangulation(5)),
        y=(LaurentPoly.one(), _ymono(y1=1)))

    # resolving a kink: the smoothings are the curve itself and the curve
    # together with a contractible loop
    kinked = CurveDescriptor("kinked", inner=gamma1(), kinks=1)
    kink = SkeinFixture(
        "kink-removal", "two_term", t,
        c=(kinked,), c1=(gamma1(),),
        c2=(gamma1(), CurveDescriptor("contractible_loop")),
        y=(LaurentPoly.one(), LaurentPoly.one()))

    # annulus: core closed curve times a radial arc resolves into the
    # once-crossing arc and the other radial arc
    ta = _annulus()
    core = CurveDescriptor("closed_curve",
                           (CrossingToken(1, "right", 3),
                            CrossingToken(2, "left", 4)))
    spiral = CurveDescriptor("ordinary_arc", (CrossingToken(2, "right", 1),),
                             {"a": 1, "b": 3, "w": 1, "z": 4})
    annulus = SkeinFixture(
        "annulus-core-times-radial", "two_term", ta,
        c=(core, in_triangulation(1)),
        c1=(spiral,), c2=(in_triangulation(2),),
        y=(LaurentPoly.one(), _ymono(y1=1, y2=1)))

    return (flip5, flip2, ptolemy, kink, annulus)
