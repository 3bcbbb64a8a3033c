"""M-paths: elementary-step matrices and the transfer-matrix value chi.

An M-path is a walk through the triangulated orbifold recorded as a list of
elementary steps, each carrying a 2x2 matrix over the Laurent ring.  The
ordered product M(kappa) recovers the cluster expansion: |ur| of the product
for open curves and |tr| for closed ones.  The assembly below mirrors the
chain normal form of the snake module transition by transition, so chi and
the matching enumeration are genuinely independent only in their bookkeeping,
not in the combinatorics they encode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .orbifold import CurveDescriptor, Triangulation, expand_descriptor
from .ring import (LP_ONE, LP_ZERO, CoefPoly, LaurentPoly, Mat2, cheb_t,
                   cheb_u)
from .snake import _hex_swaps


class SignUndecidableError(ArithmeticError):
    """Positive-point evaluation of ur/tr vanished; sign cannot be fixed."""


@dataclass(frozen=True)
class ElementaryStep:
    """One step of an M-path.

    variant: "type1" | "type2" | "type3" | "pending1" | "pending3"
    type1   crosses arc tau into the triangle with sides tau, tau2, sigma;
            positive sign when traveling from the plus to the minus vertex.
    type2   crosses tau; direction "up" maps the second coordinate by y_tau,
            "down" the first.
    type3   walks along tau; side is the side tau is seen on.
    pending1/pending3 are the analogues at a pending arc rho of order p,
    with lambda_p in place of the opposite-side ratio.
    """
    variant: str
    tau: Optional[int] = None
    tau2: Optional[int] = None
    sigma: Optional[int] = None
    sign: int = 1
    direction: str = "up"
    side: str = "right"
    order: Optional[int] = None


def step_matrix(s: ElementaryStep) -> Mat2:
    if s.variant == "type1":
        off = (LaurentPoly.xvar(s.sigma)
               * (LaurentPoly.xvar(s.tau) * LaurentPoly.xvar(s.tau2)).inv())
        if s.sign < 0:
            off = -off
        return Mat2(LP_ONE, LP_ZERO, off, LP_ONE)
    if s.variant == "type2":
        y = LaurentPoly.yvar(s.tau)
        if s.direction == "up":
            return Mat2(LP_ONE, LP_ZERO, LP_ZERO, y)
        return Mat2(y, LP_ZERO, LP_ZERO, LP_ONE)
    if s.variant == "type3":
        x = LaurentPoly.xvar(s.tau)
        if s.side == "right":
            return Mat2(LP_ZERO, x, -x.inv(), LP_ZERO)
        return Mat2(LP_ZERO, -x, x.inv(), LP_ZERO)
    if s.variant == "pending1":
        off = LaurentPoly.xvar(s.tau).inv().scale(CoefPoly.lam(s.order))
        if s.sign < 0:
            off = -off
        return Mat2(LP_ONE, LP_ZERO, off, LP_ONE)
    if s.variant == "pending3":
        x = LaurentPoly.xvar(s.tau)
        if s.side == "right":
            return Mat2(LP_ZERO, x, -x.inv(), LP_ZERO)
        return Mat2(LP_ZERO, -x, x.inv(), LP_ZERO)
    raise ValueError(f"unknown step variant {s.variant!r}")


def m_of(path) -> Mat2:
    """M(kappa): the right-to-left product of the step matrices."""
    out = Mat2.identity()
    for s in path:
        out = step_matrix(s) * out
    return out


# ---------------------------------------------------------------------------
# standard M-path assembly


def _compound_a(tau_j: int, tau_next: int, glue: int):
    """Right turn: a type-2 then a type-1 step."""
    return [ElementaryStep("type2", tau=tau_j, direction="up"),
            ElementaryStep("type1", tau=tau_j, tau2=tau_next, sigma=glue)]


def _compound_b(tau_j: int, tau_next: int, glue: int):
    """Left turn: type 2, then type 1 / type 3 / type 1 around the far corner."""
    return [ElementaryStep("type2", tau=tau_j, direction="up"),
            ElementaryStep("type1", tau=tau_j, tau2=glue, sigma=tau_next),
            ElementaryStep("type3", tau=glue, side="right"),
            ElementaryStep("type1", tau=tau_next, tau2=glue, sigma=tau_j)]


def _winding_block(rho: int, p: int, ell: int, swapped: bool):
    """The pending double-crossing steps.

    Right-based: one pending-1 step, then ell repetitions of pending-3 and
    pending-1.  Left-based (the mirrored hexagon): the rotation is written
    with ell+1 wraps, pending-3 first; its product is the mirrored transfer
    matrix up to a global sign, which chi normalizes away.
    """
    steps = [ElementaryStep("type2", tau=rho, direction="up")]
    if not swapped:
        steps.append(ElementaryStep("pending1", tau=rho, order=p))
        for _ in range(ell):
            steps.append(ElementaryStep("pending3", tau=rho, order=p))
            steps.append(ElementaryStep("pending1", tau=rho, order=p))
    else:
        steps.append(ElementaryStep("pending3", tau=rho, order=p))
        for _ in range(ell + 1):
            steps.append(ElementaryStep("pending1", tau=rho, order=p,
                                        sign=-1))
            steps.append(ElementaryStep("pending3", tau=rho, order=p))
    return steps


def standard_mpath(d: CurveDescriptor, t: Triangulation):
    """Assemble the standard M-path for an arc or closed-curve descriptor."""
    if d.kind in ("contractible_loop", "orbifold_loop", "kinked"):
        raise ValueError("special curve kinds have no standard M-path")
    data = expand_descriptor(d, t)
    if not data.crossings:
        return []
    crossings = data.crossings
    n = len(crossings)
    transitions = list(data.transitions)
    swaps = _hex_swaps(data.transitions, data.closed)
    closure = transitions.pop() if data.closed else None

    steps = []
    if not data.closed:
        a, b = data.endpoints[0], data.endpoints[1]
        steps.append(ElementaryStep("type3", tau=a, side="right"))
        steps.append(ElementaryStep("type1", tau=a, tau2=crossings[0], sigma=b))

    for ti, tr in enumerate(transitions):
        if tr[0] == "hex":
            _, rho, p, ell = tr
            steps.extend(_winding_block(rho, p, ell, swaps[ti]))
        else:
            _, turn, glue = tr
            j = ti  # transition ti joins crossings ti and ti+1
            pair = (crossings[j], crossings[j + 1], glue)
            steps.extend(_compound_a(*pair) if turn == "right"
                         else _compound_b(*pair))

    if data.closed:
        _, turn, glue = closure
        if turn == "left":
            steps.extend(_compound_b(crossings[-1], crossings[0], glue))
        else:
            # closing run along the gluing triangle; product is the band
            # closing matrix up to a global sign
            steps.extend([
                ElementaryStep("type2", tau=crossings[-1], direction="up"),
                ElementaryStep("type3", tau=crossings[-1], side="right"),
                ElementaryStep("type3", tau=crossings[0], side="right"),
                ElementaryStep("type1", tau=crossings[0], tau2=crossings[0],
                               sigma=glue),
            ])
    else:
        w, z = data.endpoints[2], data.endpoints[3]
        steps.append(ElementaryStep("type2", tau=crossings[-1], direction="up"))
        steps.append(ElementaryStep("type1", tau=z, tau2=crossings[-1], sigma=w))
        steps.append(ElementaryStep("type3", tau=z, side="right"))
    return steps


def chi(d: CurveDescriptor, t: Triangulation,
        tol: float = 1e-9) -> LaurentPoly:
    """|ur(M(kappa))| for open curves, |tr| for closed, sign-normalized."""
    if d.kind == "contractible_loop":
        return LaurentPoly.const(-2)
    if d.kind == "orbifold_loop":
        return LaurentPoly.const(cheb_t(d.loops + 1, d.order))
    if d.kind == "kinked":
        inner = chi(d.inner, t, tol)
        return inner if d.kinks % 2 == 0 else -inner
    data = expand_descriptor(d, t)
    if not data.crossings:
        return LaurentPoly.xvar(data.endpoints[0])
    m = m_of(standard_mpath(d, t))
    val = m.tr() if data.closed else m.ur()
    probe = val.eval_all_ones()
    if abs(probe) <= tol:
        raise SignUndecidableError(
            "positive-point evaluation vanished; cannot normalize sign")
    return -val if probe < 0 else val


# ---------------------------------------------------------------------------
# Chebyshev matrix identities


_RHO = 0  # formal pending-arc variable used by the matrix-power identities


def cheb_matrix_power(k: int, p: int, clockwise: bool = False) -> Mat2:
    """k-fold winding product around an order-p point, with its closed form.

    Counterclockwise generator [[0, x],[-1/x, lambda]] gives
    [[-U_{k-2}, U_{k-1} x], [-U_{k-1}/x, U_k]]; the clockwise generator
    [[lambda, x],[-1/x, 0]] gives [[U_k, U_{k-1} x], [-U_{k-1}/x, -U_{k-2}]].
    Both are asserted against the explicit product.
    """
    if k < 0:
        raise ValueError("need k >= 0")
    x = LaurentPoly.xvar(_RHO)
    lam = LaurentPoly.const(CoefPoly.lam(p))
    if clockwise:
        gen = Mat2(lam, x, -x.inv(), LP_ZERO)
        closed = Mat2(LaurentPoly.const(cheb_u(k, p)),
                      x.scale(cheb_u(k - 1, p)),
                      -x.inv().scale(cheb_u(k - 1, p)),
                      LaurentPoly.const(-cheb_u(k - 2, p)))
    else:
        gen = Mat2(LP_ZERO, x, -x.inv(), lam)
        closed = Mat2(LaurentPoly.const(-cheb_u(k - 2, p)),
                      x.scale(cheb_u(k - 1, p)),
                      -x.inv().scale(cheb_u(k - 1, p)),
                      LaurentPoly.const(cheb_u(k, p)))
    prod = Mat2.identity()
    for _ in range(k):
        prod = gen * prod
    assert prod == closed, "matrix power closed form failed"
    return closed


def winding_reduction_check(k: int, m: int, p: int,
                            tol: float = 1e-9) -> bool:
    """Do k and k+mp windings agree entrywise up to the sign (-1)^m?

    Numeric comparison at lambda_p = 2cos(pi/p) with x_rho = 1.
    """
    if k < 0 or k + m * p < 0:
        raise ValueError("winding counts must stay nonnegative")
    lam = 2.0 * math.cos(math.pi / p)

    def matpow(j):
        out = ((1.0, 0.0), (0.0, 1.0))
        gen = ((0.0, 1.0), (-1.0, lam))
        for _ in range(j):
            out = tuple(
                tuple(sum(gen[r][t] * out[t][c] for t in range(2))
                      for c in range(2))
                for r in range(2))
        return out

    m1, m2 = matpow(k), matpow(k + m * p)
    sign = -1.0 if m % 2 else 1.0
    return all(abs(m2[r][c] - sign * m1[r][c]) <= tol
               for r in range(2) for c in range(2))
