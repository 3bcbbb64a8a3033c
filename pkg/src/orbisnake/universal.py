"""The universal parallelogram chain and its transfer-matrix formulas.

With fully generic labels the chain UG_n has 2^n perfect matchings and its
matching poset is the Boolean lattice.  The entries of the matrix product
MG_n = m_{n-1} ... m_1 are the four matching sums partitioned by which
boundary edges appear, and sandwiching MG_n between fixed boundary matrices
recovers the full weighted matching sum (upper-right entry for open chains,
trace for the two band gluings).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import LP_ONE, LP_ZERO, LaurentPoly, Mat2, fresh_var
from .snake import Chain, enumerate_matchings, minimal_maximal, weight_height


@dataclass(frozen=True)
class UniversalLabels:
    a: LaurentPoly
    b: LaurentPoly
    w: LaurentPoly
    z: LaurentPoly
    i: tuple
    y: tuple
    aj: tuple
    bj: tuple
    lj: tuple
    rj: tuple


def generic_labels(n: int, zero_a=(), zero_b=()) -> UniversalLabels:
    """Fresh generic labels for UG_n; positions in zero_a/zero_b are deleted."""
    if n < 1:
        raise ValueError("need n >= 1")
    xv = lambda: LaurentPoly.xvar(fresh_var())
    yv = lambda: LaurentPoly.yvar(fresh_var())
    return UniversalLabels(
        a=xv(), b=xv(), w=xv(), z=xv(),
        i=tuple(xv() for _ in range(n)),
        y=tuple(yv() for _ in range(n)),
        aj=tuple(LP_ZERO if j in zero_a else xv() for j in range(1, n)),
        bj=tuple(LP_ZERO if j in zero_b else xv() for j in range(1, n)),
        lj=tuple(xv() for _ in range(n - 1)),
        rj=tuple(xv() for _ in range(n - 1)),
    )


def build_ug(n: int, labels: UniversalLabels = None, band: str = None) -> Chain:
    """Universal chain; band in {"az", "bw"} applies the gluing identifications."""
    if labels is None:
        labels = generic_labels(n)
    a, b, w, z = labels.a, labels.b, labels.w, labels.z
    band_spec = None
    if band == "az":
        # glue a to z; b and w become the interior edges i_n and i_1
        band_spec = ("az", a)
        z, b, w = a, labels.i[-1], labels.i[0]
    elif band == "bw":
        band_spec = ("bw", b)
        w, a, z = b, labels.i[0], labels.i[-1]
    elif band is not None:
        raise ValueError("band must be 'az' or 'bw'")
    return Chain(n, labels.i, labels.y, a, b, w, z,
                 labels.aj, labels.bj, labels.lj, labels.rj, (), band_spec)


def _step_matrix(chain: Chain, j: int) -> Mat2:
    """m_j for 1 <= j <= n-1, odd and even forms."""
    i_j, i_next = chain.markers[j - 1], chain.markers[j]
    y_j = chain.yvars[j - 1]
    a_j, b_j = chain.aj[j - 1], chain.bj[j - 1]
    l_j, r_j = chain.lj[j - 1], chain.rj[j - 1]
    if j % 2 == 1:
        return Mat2(l_j * i_j.inv(), y_j * b_j,
                    a_j * (i_j * i_next).inv(), y_j * r_j * i_next.inv())
    return Mat2(r_j * i_j.inv(), y_j * a_j,
                b_j * (i_j * i_next).inv(), y_j * l_j * i_next.inv())


def mg_matrix(chain: Chain) -> Mat2:
    """MG_n = m_{n-1} ... m_1 (identity when n = 1)."""
    out = Mat2.identity()
    for j in range(1, chain.n):
        out = _step_matrix(chain, j) * out
    return out


def _classify(chain: Chain, matching) -> str:
    """Which boundary pair a chain matching uses: one of "A","B","C","D"."""
    edge_w = "w" if chain.n % 2 == 0 else "z"  # positional edge labeled w
    uses_a = "a" in matching
    uses_w = edge_w in matching
    if uses_a:
        return "A" if uses_w else "C"
    return "B" if uses_w else "D"


def partitioned_sums(chain: Chain) -> Mat2:
    """The four matching sums, normalized so they equal the MG_n entries."""
    if chain.band is not None:
        raise ValueError("partitioned sums are for open chains")
    sums = {"A": LP_ZERO, "B": LP_ZERO, "C": LP_ZERO, "D": LP_ZERO}
    for m in enumerate_matchings(chain):
        x, y = weight_height(chain, m)
        sums[_classify(chain, m)] = sums[_classify(chain, m)] + x * y

    def prod(labels):
        out = LP_ONE
        for v in labels:
            out = out * v
        return out

    i = chain.markers
    n = chain.n
    y_last = chain.yvars[-1]
    den_a = prod(i[:n - 1]) * chain.a * chain.w
    den_b = prod(i[1:n - 1]) * chain.b * chain.w
    den_c = prod(i[:n]) * chain.a * chain.z * y_last
    den_d = prod(i[1:n]) * chain.b * chain.z * y_last
    return Mat2(
        sums["A"].div_exact_monomial(den_a),
        sums["B"].div_exact_monomial(den_b),
        sums["C"].div_exact_monomial(den_c),
        sums["D"].div_exact_monomial(den_d),
    )


def weighted_sum_via_matrices(chain: Chain) -> LaurentPoly:
    """Total weighted matching sum from the boundary-matrix sandwich."""
    i1, i_n = chain.markers[0], chain.markers[-1]
    y_n = chain.yvars[-1]
    prefactor = chain.crossing_monomial()
    mg = mg_matrix(chain)
    if chain.band is None:
        suffix = Mat2(chain.w * i_n.inv(), chain.z * y_n,
                      -chain.z.inv(), LP_ZERO)
        prefix = Mat2(LP_ZERO, chain.a,
                      -chain.a.inv(), chain.b * i1.inv())
        return (suffix * mg * prefix).ur() * prefactor
    mode, glue = chain.band
    if mode == "az":
        closing = Mat2(i1 * i_n.inv(), glue * y_n,
                       LP_ZERO, y_n * i_n * i1.inv())
    else:
        closing = Mat2(i1 * i_n.inv(), LP_ZERO,
                       glue * (i1 * i_n).inv(), y_n * i_n * i1.inv())
    return (closing * mg).tr() * prefactor
