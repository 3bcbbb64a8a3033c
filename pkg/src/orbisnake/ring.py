"""Exact arithmetic used everywhere else.

Three layers:

* CoefPoly: integer polynomials in formal symbols L{p}, one symbol per
  orbifold order p >= 4.  Orders 2 and 3 are special because 2cos(pi/2) = 0
  and 2cos(pi/3) = 1 are integers, so they never create a symbol.
* LaurentPoly: Laurent polynomials in x-variables (integer exponents) and
  y-variables (nonnegative exponents) with CoefPoly coefficients.
* Mat2: 2x2 matrices over LaurentPoly.

All values are immutable; every operation returns a new object.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, NamedTuple, Optional, Union


class LambdaSym(NamedTuple):
    """Formal symbol for 2cos(pi/p)."""

    order: int

    def numeric(self) -> float:
        return 2.0 * math.cos(math.pi / self.order)


def _order_of(sym) -> int:
    p = sym.order if isinstance(sym, LambdaSym) else int(sym)
    if p < 2:
        raise ValueError("orbifold order must be >= 2")
    return p


# ---------------------------------------------------------------------------
# coefficient polynomials in the L{p} symbols


class CoefPoly:
    """Integer polynomial in the lambda symbols.

    terms maps a sorted tuple of (order, exponent) pairs to a nonzero int.
    The empty tuple is the constant term.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int]):
        clean = {}
        for key, c in terms.items():
            if c == 0:
                continue
            key = tuple(sorted((p, e) for p, e in key if e != 0))
            clean[key] = clean.get(key, 0) + c
            if clean[key] == 0:
                del clean[key]
        self.terms = clean
        self._hash = None

    # -- constructors

    @staticmethod
    def const(c: int) -> "CoefPoly":
        return CoefPoly({(): int(c)})

    @staticmethod
    def lam(p) -> "CoefPoly":
        p = _order_of(p)
        if p == 2:
            return CoefPoly.const(0)  # 2cos(pi/2)
        if p == 3:
            return CoefPoly.const(1)  # 2cos(pi/3)
        return CoefPoly({((p, 1),): 1})

    # -- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def as_int(self) -> Optional[int]:
        """The constant value, or None if any symbol appears."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    # -- arithmetic

    def __add__(self, other: "CoefPoly") -> "CoefPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return CoefPoly(out)

    def __neg__(self) -> "CoefPoly":
        return CoefPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "CoefPoly") -> "CoefPoly":
        return self + (-other)

    def __mul__(self, other: "CoefPoly") -> "CoefPoly":
        out: dict = {}
        for k1, c1 in self.terms.items():
            d1 = dict(k1)
            for k2, c2 in other.terms.items():
                d = dict(d1)
                for p, e in k2:
                    d[p] = d.get(p, 0) + e
                key = tuple(sorted(d.items()))
                out[key] = out.get(key, 0) + c1 * c2
        return CoefPoly(out)

    def scale(self, c: int) -> "CoefPoly":
        return CoefPoly({k: v * c for k, v in self.terms.items()})

    def div_exact(self, other: "CoefPoly") -> "CoefPoly":
        """Division restricted to single-term divisors with unit coefficient."""
        if len(other.terms) != 1:
            raise ValueError("divisor must be a single term")
        (dk, dc), = other.terms.items()
        if dc not in (1, -1):
            raise ValueError("divisor coefficient must be a unit")
        dd = dict(dk)
        out = {}
        for k, c in self.terms.items():
            d = dict(k)
            for p, e in dd.items():
                d[p] = d.get(p, 0) - e
                if d[p] < 0:
                    raise ValueError("inexact symbol division")
            out[tuple(sorted(d.items()))] = c * dc
        return CoefPoly(out)

    # -- evaluation and printing

    def eval_numeric(self) -> float:
        total = 0.0
        for k, c in self.terms.items():
            v = float(c)
            for p, e in k:
                v *= LambdaSym(p).numeric() ** e
            total += v
        return total

    @staticmethod
    def _key_order(key: tuple):
        deg = sum(e for _, e in key)
        return (deg, key)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self._key_order(kv[0]), reverse=True)

    def lead_sign(self) -> int:
        if not self.terms:
            return 0
        _, c = self.sorted_terms()[0]
        return 1 if c > 0 else -1

    def canonical(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            factors = []
            for p, e in key:
                factors.append(f"L{p}" if e == 1 else f"L{p}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            factors = []
            for p, e in key:
                base = rf"\lambda_{{{p}}}"
                factors.append(base if e == 1 else base + f"^{{{e}}}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = " ".join(factors)
            else:
                body = " ".join([str(abs(c))] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"CoefPoly({self.canonical()})"


COEF_ZERO = CoefPoly.const(0)
COEF_ONE = CoefPoly.const(1)


# ---------------------------------------------------------------------------
# Chebyshev families


@lru_cache(maxsize=None)
def cheb_u(k: int, p: int) -> CoefPoly:
    """Normalized second-kind Chebyshev polynomial at the order-p symbol.

    The recurrence U_k = x U_{k-1} - U_{k-2} is seeded with U_{-1} = 0 and
    U_0 = 1; the index -2 is admitted with U_{-2} = -1 because the seed pair
    forces it.
    """
    p = _order_of(p)
    if k < -2:
        raise ValueError("index below -2")
    if k == -2:
        return CoefPoly.const(-1)
    if k == -1:
        return COEF_ZERO
    if k == 0:
        return COEF_ONE
    lam = CoefPoly.lam(p)
    return lam * cheb_u(k - 1, p) - cheb_u(k - 2, p)


@lru_cache(maxsize=None)
def cheb_t(k: int, p: int) -> CoefPoly:
    """Normalized first-kind Chebyshev polynomial, T_0 = 2, T_1 = x."""
    p = _order_of(p)
    if k < 0:
        raise ValueError("negative index")
    if k == 0:
        return CoefPoly.const(2)
    if k == 1:
        return CoefPoly.lam(p)
    return CoefPoly.lam(p) * cheb_t(k - 1, p) - cheb_t(k - 2, p)


class XYPoly:
    """Small helper ring Z[x, Y] for the coefficient Chebyshev polynomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, int]):
        self.terms = {k: c for k, c in terms.items() if c != 0}

    @staticmethod
    def const(c: int) -> "XYPoly":
        return XYPoly({(0, 0): c})

    @staticmethod
    def x() -> "XYPoly":
        return XYPoly({(1, 0): 1})

    @staticmethod
    def y() -> "XYPoly":
        return XYPoly({(0, 1): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return XYPoly(out)

    def __sub__(self, other):
        return self + XYPoly({k: -c for k, c in other.terms.items()})

    def __mul__(self, other):
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return XYPoly(out)

    def __pow__(self, n: int):
        out = XYPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def subs_x(self, val: "XYPoly") -> "XYPoly":
        out = XYPoly.const(0)
        for (a, b), c in self.terms.items():
            out = out + (val ** a) * XYPoly({(0, b): c})
        return out

    def subs_y(self, val: "XYPoly") -> "XYPoly":
        out = XYPoly.const(0)
        for (a, b), c in self.terms.items():
            out = out + (val ** b) * XYPoly({(a, 0): c})
        return out

    def __eq__(self, other):
        return isinstance(other, XYPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"XYPoly({self.terms!r})"


@lru_cache(maxsize=None)
def cheb_u_y(k: int) -> XYPoly:
    """Coefficient Chebyshev polynomial U_k^Y(x).

    Recurrence U_k^Y = x U_{k-1}^Y - Y U_{k-2}^Y with U_0^Y = 1, U_1^Y = x.
    Setting Y = 1 recovers cheb_u.
    """
    if k < -1:
        raise ValueError("index below -1")
    if k == -1:
        return XYPoly.const(0)
    if k == 0:
        return XYPoly.const(1)
    return XYPoly.x() * cheb_u_y(k - 1) - XYPoly.y() * cheb_u_y(k - 2)


# ---------------------------------------------------------------------------
# Laurent polynomials

# A variable is a pair (kind, id) with kind "x" or "y"; a monomial is a
# sorted tuple of ((kind, id), exponent) with nonzero exponents.

Var = tuple
Mono = tuple

MONO_ONE: Mono = ()


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    d = dict(m1)
    for v, e in m2:
        e2 = d.get(v, 0) + e
        if e2:
            d[v] = e2
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_div(m1: Mono, m2: Mono) -> Mono:
    return _mono_mul(m1, tuple((v, -e) for v, e in m2))


def _mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Mono):
    return (_mono_degree(m), m)


class LaurentPoly:
    """Laurent polynomial with CoefPoly coefficients.

    x-variables may carry negative exponents, y-variables may not.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Mono, CoefPoly]):
        clean = {}
        for m, c in terms.items():
            if c.is_zero():
                continue
            for (kind, _vid), e in m:
                if kind == "y" and e < 0:
                    raise ValueError("negative exponent on a y-variable")
            clean[m] = c
        self.terms = clean
        self._hash = None

    # -- constructors

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def const(c: Union[int, CoefPoly]) -> "LaurentPoly":
        if isinstance(c, int):
            c = CoefPoly.const(c)
        return LaurentPoly({MONO_ONE: c})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly.const(1)

    @staticmethod
    def var(kind: str, vid: int, exp: int = 1, coef: Union[int, CoefPoly] = 1) -> "LaurentPoly":
        if isinstance(coef, int):
            coef = CoefPoly.const(coef)
        if exp == 0:
            return LaurentPoly.const(coef)
        return LaurentPoly({(((kind, vid), exp),): coef})

    @staticmethod
    def xvar(vid: int, exp: int = 1) -> "LaurentPoly":
        return LaurentPoly.var("x", vid, exp)

    @staticmethod
    def yvar(vid: int, exp: int = 1) -> "LaurentPoly":
        return LaurentPoly.var("y", vid, exp)

    @staticmethod
    def monomial(exps: Mapping[Var, int], coef: Union[int, CoefPoly] = 1) -> "LaurentPoly":
        if isinstance(coef, int):
            coef = CoefPoly.const(coef)
        m = tuple(sorted((v, e) for v, e in exps.items() if e != 0))
        return LaurentPoly({m: coef})

    # -- predicates and views

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {MONO_ONE: COEF_ONE}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    def leading(self) -> tuple:
        """(monomial, coefficient) of the largest term in the canonical order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    # -- arithmetic

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                out[m] = out[m] + c
            else:
                out[m] = c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                if m in out:
                    out[m] = out[m] + c
                else:
                    out[m] = c
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.inv() ** (-n)
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Union[int, CoefPoly]) -> "LaurentPoly":
        if isinstance(c, int):
            c = CoefPoly.const(c)
        return LaurentPoly({m: v * c for m, v in self.terms.items()})

    def inv(self) -> "LaurentPoly":
        """Inverse of a single-term unit-coefficient polynomial."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        (m, c), = self.terms.items()
        ci = c.as_int()
        if ci not in (1, -1):
            raise ValueError("coefficient is not invertible")
        for (kind, _), _e in m:
            if kind == "y":
                raise ValueError("cannot invert a y-variable")
        return LaurentPoly({tuple((v, -e) for v, e in m): CoefPoly.const(ci)})

    def div_exact_monomial(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division by a one-term divisor."""
        if divisor.is_zero():
            raise ZeroDivisionError("zero divisor")
        if len(divisor.terms) != 1:
            raise ValueError("divisor must be a monomial")
        (dm, dc), = divisor.terms.items()
        out = {}
        for m, c in self.terms.items():
            out[_mono_div(m, dm)] = c.div_exact(dc)
        return LaurentPoly(out)

    def subs(self, mapping: Mapping[Var, "LaurentPoly"]) -> "LaurentPoly":
        """Substitute variables; targets of negatively-powered x's must be monomials."""
        out = LaurentPoly.zero()
        for m, c in self.terms.items():
            term = LaurentPoly.const(c)
            for v, e in m:
                target = mapping.get(v)
                if target is None:
                    target = LaurentPoly.var(v[0], v[1])
                term = term * (target ** e)
            out = out + term
        return out

    # -- evaluation

    def eval_numeric(self, xvals: Mapping[int, float], yvals: Mapping[int, float]) -> float:
        total = 0.0
        for m, c in self.terms.items():
            v = c.eval_numeric()
            for (kind, vid), e in m:
                table = xvals if kind == "x" else yvals
                if vid not in table:
                    raise KeyError(f"no value assigned to {kind}{vid}")
                v *= table[vid] ** e
            total += v
        return total

    def eval_all_ones(self) -> float:
        total = 0.0
        for _m, c in self.terms.items():
            total += c.eval_numeric()
        return total

    # -- printing

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)

    @staticmethod
    def _render_mono(m: Mono, latex: bool) -> str:
        factors = []
        for (kind, vid), e in m:
            if latex:
                base = f"{kind}_{{{vid}}}"
                factors.append(base if e == 1 else base + f"^{{{e}}}")
            else:
                base = f"{kind}{vid}"
                factors.append(base if e == 1 else base + f"^{e}")
        return ("*" if not latex else " ").join(factors)

    def canonical_string(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            sign = c.lead_sign()
            cc = c if sign >= 0 else -c
            cstr = cc.canonical()
            if len(cc.terms) > 1:
                cstr = f"({cstr})"
            mstr = self._render_mono(m, latex=False)
            if not mstr:
                body = cstr
            elif cstr == "1":
                body = mstr
            else:
                body = cstr + "*" + mstr
            if not parts:
                parts.append(body if sign >= 0 else "-" + body)
            else:
                parts.append((" + " if sign >= 0 else " - ") + body)
        return "".join(parts)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            sign = c.lead_sign()
            cc = c if sign >= 0 else -c
            cstr = cc.latex()
            if len(cc.terms) > 1:
                cstr = rf"\left({cstr}\right)"
            mstr = self._render_mono(m, latex=True)
            if not mstr:
                body = cstr
            elif cstr == "1":
                body = mstr
            else:
                body = cstr + " " + mstr
            if not parts:
                parts.append(body if sign >= 0 else "-" + body)
            else:
                parts.append((" + " if sign >= 0 else " - ") + body)
        return "".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((m, c) for m, c in self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.canonical_string()})"


LP_ZERO = LaurentPoly.zero()
LP_ONE = LaurentPoly.one()


# ---------------------------------------------------------------------------
# 2x2 matrices


@dataclass(frozen=True)
class Mat2:
    a11: LaurentPoly
    a12: LaurentPoly
    a21: LaurentPoly
    a22: LaurentPoly

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(LP_ONE, LP_ZERO, LP_ZERO, LP_ONE)

    @staticmethod
    def of(a11, a12, a21, a22) -> "Mat2":
        def lift(v):
            if isinstance(v, LaurentPoly):
                return v
            if isinstance(v, CoefPoly):
                return LaurentPoly.const(v)
            return LaurentPoly.const(int(v))
        return Mat2(lift(a11), lift(a12), lift(a21), lift(a22))

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self) -> LaurentPoly:
        return self.a11 * self.a22 - self.a12 * self.a21

    def tr(self) -> LaurentPoly:
        return self.a11 + self.a22

    def ur(self) -> LaurentPoly:
        return self.a12

    def scale(self, p: LaurentPoly) -> "Mat2":
        return Mat2(self.a11 * p, self.a12 * p, self.a21 * p, self.a22 * p)


# ---------------------------------------------------------------------------
# fresh variable ids for generic labels

_FRESH_BASE = 10_000_000
_fresh_counter = itertools.count(_FRESH_BASE)


def fresh_var() -> int:
    """A new variable id, disjoint from any sane arc numbering."""
    return next(_fresh_counter)


def reset_fresh() -> None:
    """Restart the fresh-id counter (tests and CLI determinism)."""
    global _fresh_counter
    _fresh_counter = itertools.count(_FRESH_BASE)
