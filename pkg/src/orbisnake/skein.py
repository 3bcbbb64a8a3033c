"""Skein identities between expansion values of crossing curves.

A fixture stores both sides of a smoothing as crossing words together with
the coefficient y-monomials and signs; verification is exact symbolic
equality of Laurent polynomials.  The value of a multicurve is the product
of its components' values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .orbifold import CurveDescriptor, Triangulation
from .ring import CoefPoly, LaurentPoly
from .snake import cluster_expansion


def chi_multicurve(curves, t: Triangulation) -> LaurentPoly:
    """Product of the component expansions."""
    out = LaurentPoly.one()
    for d in curves:
        out = out * cluster_expansion(d, t)
    return out


@dataclass(frozen=True)
class SkeinFixture:
    """One verified smoothing identity.

    kind "two_term": chi(C) = s1*Y1*chi(C1) + s2*Y2*chi(C2).
    kind "three_term": chi(g1)*chi(g2) =
        Y0*chi(b1)^2 + Y1*lambda_p*chi(b1)*chi(b2) + Y2*chi(b2)^2.
    """

    name: str
    kind: str
    triangulation: Triangulation
    c: tuple = ()
    c1: tuple = ()
    c2: tuple = ()
    y: tuple = ()                 # y-monomial coefficients as LaurentPoly
    signs: tuple = (1, 1)
    order: Optional[int] = None   # three-term only
    g1: Optional[CurveDescriptor] = None
    g2: Optional[CurveDescriptor] = None
    b1: Optional[CurveDescriptor] = None
    b2: Optional[CurveDescriptor] = None


def verify_two_term(f: SkeinFixture) -> bool:
    if f.kind != "two_term":
        raise ValueError("fixture is not a two-term identity")
    t = f.triangulation
    lhs = chi_multicurve(f.c, t)
    rhs = (chi_multicurve(f.c1, t) * f.y[0]).scale(f.signs[0]) \
        + (chi_multicurve(f.c2, t) * f.y[1]).scale(f.signs[1])
    return lhs == rhs


def verify_three_term(f: SkeinFixture) -> bool:
    if f.kind != "three_term":
        raise ValueError("fixture is not a three-term identity")
    t = f.triangulation
    lam = LaurentPoly.const(CoefPoly.lam(f.order))
    xb1 = cluster_expansion(f.b1, t)
    xb2 = cluster_expansion(f.b2, t)
    lhs = cluster_expansion(f.g1, t) * cluster_expansion(f.g2, t)
    rhs = xb1 * xb1 * f.y[0] + lam * xb1 * xb2 * f.y[1] + xb2 * xb2 * f.y[2]
    return lhs == rhs


def _y_monomial_quotient(lead_lhs, lead_basis):
    """lhs-leading / basis-leading if the quotient is integer * y-monomial."""
    (mono_l, coef_l), (mono_b, coef_b) = lead_lhs, lead_basis
    exps = dict(mono_b)
    quot = {}
    for var, e in mono_l:
        q = e - exps.pop(var, 0)
        if q:
            quot[var] = q
    for var, e in exps.items():
        if e:
            quot[var] = -e
    if any(kind != "y" or e < 0 for (kind, _vid), e in quot.items()):
        return None
    try:
        c = coef_l.div_exact(coef_b).as_int()
    except ValueError:
        c = 1 if coef_l == coef_b else (-1 if coef_l == -coef_b else None)
    if c is None:
        return None
    return LaurentPoly.monomial(quot, c)


def solve_y_monomials(lhs: LaurentPoly, basis):
    """Coefficients Y_i with lhs = sum Y_i * basis_i, or None.

    Greedy leading-term elimination; each Y_i must be an integer multiple of
    a y-monomial.  Basis elements need distinct leading monomials.
    """
    remaining = lhs
    coeffs = [None] * len(basis)
    open_idx = {i for i in range(len(basis)) if not basis[i].is_zero()}
    while not remaining.is_zero():
        lead = remaining.leading()
        hit = None
        for i in sorted(open_idx):
            y = _y_monomial_quotient(lead, basis[i].leading())
            if y is not None:
                hit = (i, y)
                break
        if hit is None:
            return None
        i, y = hit
        coeffs[i] = y
        remaining = remaining - basis[i] * y
        open_idx.discard(i)
    for i in open_idx:
        coeffs[i] = LaurentPoly.zero()
    return coeffs
