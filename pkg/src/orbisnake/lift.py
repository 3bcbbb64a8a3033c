"""Lift an ordinary arc to a triangulated polygon and cross-check expansions.

An ordinary arc crossing d arcs lifts to an arc gamma-tilde through a
triangulated (d+3)-gon whose internal arcs sigma_1..sigma_d project back onto
the crossed arcs.  Each pending double crossing contributes one boundary edge
whose variable specializes to lambda_p * x_rho instead of a plain projection.
The polygon expansion is computed with the same snake-graph engine (the
polygon has only square tiles) and pushed through the specialization map
phi; agreement with the direct generalized expansion is the lift oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbifold import (ArcLabel, CrossingToken, CurveDescriptor,
                       Triangulation, ValidationError, WindingRangeError,
                       expand_descriptor, make_triangulation)
from .ring import CoefPoly, LaurentPoly, fresh_var
from .snake import _hex_swaps, cluster_expansion


@dataclass(frozen=True)
class LiftedPolygon:
    """A triangulated (d+3)-gon lifting the neighbourhood of an ordinary arc.

    pi maps every sigma label to the arc id it projects to; labels in
    `annotated` instead specialize to lambda_p * x_rho for their pending arc.
    s groups the crossings into fan runs sharing a polygon vertex.
    """

    triangulation: Triangulation
    descriptor: CurveDescriptor          # gamma-tilde inside the polygon
    internal: tuple                      # sigma_1..sigma_d label ids
    boundary: tuple                      # remaining polygon sides
    pi: dict                             # sigma id -> projected arc id
    annotated: dict                      # sigma id -> (rho id, order p)
    s: tuple                             # fan-vertex group per crossing


def build_lift(d: CurveDescriptor, t: Triangulation) -> LiftedPolygon:
    if d.kind != "ordinary_arc":
        raise ValidationError("only ordinary arcs lift to a polygon")
    data = expand_descriptor(d, t)
    if not data.crossings:
        raise ValidationError("the arc is already in the triangulation")
    for tr in data.transitions:
        if tr[0] == "hex" and tr[3] != 0:
            raise WindingRangeError("ordinary arcs carry no winding")

    n = len(data.crossings)
    sigma = [fresh_var() for _ in range(n)]
    pi = {sigma[j]: data.crossings[j] for j in range(n)}
    annotated = {}

    arcs = [ArcLabel(s, "standard") for s in sigma]
    boundary = []

    def bdry(project_to):
        sid = fresh_var()
        boundary.append(sid)
        arcs.append(ArcLabel(sid, "boundary"))
        pi[sid] = project_to
        return sid

    triangles = []
    swaps = _hex_swaps(data.transitions, False)
    turns = []
    for ti, tr in enumerate(data.transitions):
        j = ti + 1
        if tr[0] == "hex":
            _, rho, p, _ell = tr
            glue = bdry(rho)
            annotated[glue] = (rho, p)
            # the degenerate hexagon becomes a square tile whose glue sits on
            # the same diagonal the lambda-weighted edge occupied: a right
            # turn when the hexagon is unmirrored, a left turn when mirrored
            turns.append("left" if swaps[ti] else "right")
        else:
            _, turn, glue_arc = tr
            glue = bdry(glue_arc)
            turns.append(turn)
        triangles.append((sigma[ti], sigma[ti + 1], glue))

    ea, eb, ew, ez = data.endpoints
    a_t, b_t = bdry(ea), bdry(eb)
    w_t, z_t = bdry(ew), bdry(ez)
    triangles.append((sigma[0], a_t, b_t))
    triangles.append((sigma[-1], w_t, z_t))

    # fan runs: consecutive crossings share a polygon vertex while the turn
    # direction persists; a pending double crossing never breaks its run
    s = [0]
    for ti in range(1, len(turns)):
        here, prev = turns[ti], turns[ti - 1]
        breaks = here != prev
        if data.transitions[ti][0] == "hex" or data.transitions[ti - 1][0] == "hex":
            breaks = False
        s.append(s[-1] + (1 if breaks else 0))
    if len(turns) == 0:
        s = [0]
    else:
        s = s + [s[-1]]
    lifted_tri = make_triangulation(arcs, triangles)

    word = []
    for j in range(n):
        turn = turns[j] if j < len(turns) else "right"
        glue = triangles[j][2] if j < n - 1 else w_t
        word.append(CrossingToken(sigma[j], turn, glue))
    lifted_desc = CurveDescriptor(
        "ordinary_arc", tuple(word),
        {"a": a_t, "b": b_t, "w": w_t, "z": z_t})

    return LiftedPolygon(lifted_tri, lifted_desc, tuple(sigma),
                         tuple(boundary), pi, annotated, tuple(s[:n]))


def phi_specialize(poly: LaurentPoly, lift: LiftedPolygon) -> LaurentPoly:
    """Apply the projection substitution to a polygon Laurent polynomial."""
    mapping = {}
    for var in poly.variables():
        kind, vid = var
        if vid not in lift.pi:
            raise ValidationError(f"variable {var} is not a lift label")
        if kind == "x":
            if vid in lift.annotated:
                rho, p = lift.annotated[vid]
                mapping[var] = LaurentPoly.xvar(rho).scale(CoefPoly.lam(p))
            else:
                mapping[var] = LaurentPoly.xvar(lift.pi[vid])
        else:
            mapping[var] = LaurentPoly.yvar(lift.pi[vid])
    return poly.subs(mapping)


def verify_lift(d: CurveDescriptor, t: Triangulation) -> bool:
    """Does the specialized polygon expansion match the direct one?"""
    data = expand_descriptor(d, t)
    if not data.crossings:
        return True
    lift = build_lift(d, t)
    lifted = cluster_expansion(lift.descriptor, lift.triangulation)
    return phi_specialize(lifted, lift) == cluster_expansion(d, t)
