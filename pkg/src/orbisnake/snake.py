"""Snake and band graphs in chain normal form, matchings, and expansions.

Every graph is stored as a parallelogram chain: columns of vertices
L0..Ln (left) and R0..Rn (right), boundary edges a (L0-R0), b (L0-L1),
per-step edges l_j (Lj-Lj+1), r_j (Rj-1-Rj) and diagonals a_j (Lj-Rj),
b_j (Rj-1-Lj+1) for 1 <= j <= n-1, closing edges at column n, and dashed
tile markers i_j (Lj-Rj-1) that are never matched.  A square tile keeps one
of a_j/b_j (the other label is zero and the edge is dropped); a pending
double crossing keeps both, weighted by Chebyshev values, which is the
hexagonal tile.  Band graphs reuse the same chain with two boundary edges
identified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .orbifold import (ChainData, CurveDescriptor, Triangulation,
                       expand_descriptor)
from .ring import (COEF_ONE, LP_ONE, LP_ZERO, LaurentPoly, cheb_t,
                   cheb_u)


@dataclass(frozen=True)
class Tile:
    variant: str                 # "square" | "hexagon"
    position: int                # first chain index occupied (1-based)
    diagonal: LaurentPoly        # marker label
    rel: tuple                   # (+1,) for squares, (+1,-1)/(-1,+1) for hexagons
    order: Optional[int] = None
    winding: Optional[int] = None


@dataclass(frozen=True)
class Chain:
    """Chain normal form of a snake or band graph."""

    n: int
    markers: tuple               # i_1..i_n labels (LaurentPoly monomials)
    yvars: tuple                 # y_1..y_n labels
    a: LaurentPoly
    b: LaurentPoly
    w: LaurentPoly
    z: LaurentPoly
    aj: tuple                    # diagonals a_1..a_{n-1}, zero poly = absent
    bj: tuple
    lj: tuple
    rj: tuple
    tiles: tuple
    band: Optional[tuple] = None  # ("az" | "bw", glue label)
    # diagonal names kept even when their label reduces to the zero
    # polynomial (integer lambda orders); only identically-zero U_{-1}
    # edges are truly deleted
    alive: frozenset = frozenset()

    # positional labels at the right end: w' sits at R(n-1)-Rn, z' at Ln-Rn,
    # and they carry (w, z) when n is even, (z, w) when n is odd
    @property
    def wprime(self) -> LaurentPoly:
        return self.w if self.n % 2 == 0 else self.z

    @property
    def zprime(self) -> LaurentPoly:
        return self.z if self.n % 2 == 0 else self.w

    def edge_label(self, name) -> LaurentPoly:
        if name == "a":
            return self.a
        if name == "b":
            return self.b
        if name == "w":
            return self.wprime
        if name == "z":
            return self.zprime
        key, j = name
        return {"l": self.lj, "r": self.rj, "aj": self.aj, "bj": self.bj}[key][j - 1]

    def edges(self):
        """(name, endpoints, label) for every present edge."""
        n = self.n
        out = [("a", (("L", 0), ("R", 0)), self.a),
               ("b", (("L", 0), ("L", 1)), self.b)]
        for j in range(1, n):
            out.append((("l", j), (("L", j), ("L", j + 1)), self.lj[j - 1]))
            out.append((("r", j), (("R", j - 1), ("R", j)), self.rj[j - 1]))
            if not self.aj[j - 1].is_zero() or ("aj", j) in self.alive:
                out.append((("aj", j), (("L", j), ("R", j)), self.aj[j - 1]))
            if not self.bj[j - 1].is_zero() or ("bj", j) in self.alive:
                out.append((("bj", j), (("R", j - 1), ("L", j + 1)), self.bj[j - 1]))
        out.append(("w", (("R", n - 1), ("R", n)), self.wprime))
        out.append(("z", (("L", n), ("R", n)), self.zprime))
        return out

    def crossing_monomial(self) -> LaurentPoly:
        cross = LP_ONE
        for m in self.markers:
            cross = cross * m
        return cross


# positional element names used by the twist rules; index 0 and n fold onto
# the boundary edges
def _l_elem(j, n):
    return "b" if j == 0 else ("z" if j == n else ("l", j))


def _r_elem(j, n):
    return "a" if j == 0 else ("w" if j == n else ("r", j))


def _a_elem(j, n):
    return "a" if j == 0 else ("z" if j == n else ("aj", j))


def _b_elem(j, n):
    return "b" if j == 0 else ("w" if j == n else ("bj", j))


# ---------------------------------------------------------------------------
# construction from a curve descriptor


def _hex_labels(j: int, rho_x: LaurentPoly, p: int, ell: int, swap: bool = False):
    """(a_j, b_j, l_j, r_j) for the hexagon transition at chain position j.

    The swap flag mirrors the hexagon, exchanging which diagonal carries the
    U_{l+1} weight.  It is set when the chain turns left next to the hexagon.
    """
    side = rho_x.scale(cheb_u(ell, p))
    lo = rho_x.scale(cheb_u(ell - 1, p))
    hi = rho_x.scale(cheb_u(ell + 1, p))
    if (j % 2 == 1) != swap:
        return hi, lo, side, side
    return lo, hi, side, side


def _hex_swaps(transitions, closed: bool) -> dict:
    """Map transition index -> swap flag for every hexagon transition.

    A hexagon is mirrored when either neighbouring standard transition is a
    left turn.  For band chains the closing transition neighbours both ends.
    """
    k = len(transitions)
    swaps = {}
    for ti, tr in enumerate(transitions):
        if tr[0] != "hex":
            continue
        flag = False
        for nb in (ti - 1, ti + 1):
            if not closed and not 0 <= nb < k:
                continue
            t2 = transitions[nb % k]
            if t2[0] == "std" and t2[1] == "left":
                flag = True
        swaps[ti] = flag
    return swaps


def _std_labels(j: int, turn: str, glue_x: LaurentPoly,
                i_j: LaurentPoly, i_next: LaurentPoly):
    """(a_j, b_j, l_j, r_j) for a square-to-square transition."""
    north = (turn == "right") == (j % 2 == 1)
    if north:
        return glue_x, LP_ZERO, i_j, i_next
    return LP_ZERO, glue_x, i_next, i_j


def chain_from_data(data: ChainData, t: Triangulation) -> Chain:
    n = len(data.crossings)
    xs = [LaurentPoly.xvar(arc) for arc in data.crossings]
    ys = [LaurentPoly.yvar(arc) for arc in data.crossings]

    ajs, bjs, ljs, rjs = [], [], [], []
    tiles = []
    rel = 1
    pos = 1
    transitions = list(data.transitions)
    closure = None
    if data.closed:
        closure = transitions.pop()
        if closure[0] != "std":
            raise ValueError("closed curve must close along a standard transition")

    swaps = _hex_swaps(data.transitions, data.closed)
    alive = set()
    ti = 0
    for tr in transitions:
        j = ti + 1
        if tr[0] == "hex":
            _, rho, p, ell = tr
            a_, b_, l_, r_ = _hex_labels(j, LaurentPoly.xvar(rho), p, ell,
                                         swaps[ti])
            # both hexagon diagonals exist as edges; only the U_{-1} weight
            # marks a genuinely deleted edge
            hi_on_a = (j % 2 == 1) != swaps[ti]
            alive.add(("aj", j) if hi_on_a else ("bj", j))
            if ell >= 1:
                alive.add(("bj", j) if hi_on_a else ("aj", j))
            tiles.append(Tile("hexagon", j, LaurentPoly.xvar(rho),
                              (rel, -rel), order=p, winding=ell))
            rel = -rel
        else:
            _, turn, glue = tr
            a_, b_, l_, r_ = _std_labels(j, turn, LaurentPoly.xvar(glue),
                                         xs[j - 1], xs[j])
        ajs.append(a_)
        bjs.append(b_)
        ljs.append(l_)
        rjs.append(r_)
        ti += 1

    # square tile bookkeeping (hexagons were recorded above; each hexagon
    # spans two chain positions)
    hex_positions = set()
    for tl in tiles:
        hex_positions.update((tl.position, tl.position + 1))
    rel = 1
    square_tiles = []
    for j in range(1, n + 1):
        if j not in hex_positions:
            square_tiles.append(Tile("square", j, xs[j - 1], (rel,)))
        rel = -rel
    all_tiles = tuple(sorted(tiles + square_tiles, key=lambda tl: tl.position))

    if data.closed:
        _, turn, glue = closure
        glue_x = LaurentPoly.xvar(glue)
        if turn == "left":
            band = ("az", glue_x)
            a = z = glue_x
            b, w = xs[-1], xs[0]
        else:
            band = ("bw", glue_x)
            b = w = glue_x
            a, z = xs[0], xs[-1]
        return Chain(n, tuple(xs), tuple(ys), a, b, w, z,
                     tuple(ajs), tuple(bjs), tuple(ljs), tuple(rjs),
                     all_tiles, band, frozenset(alive))

    ea, eb, ew, ez = data.endpoints
    return Chain(n, tuple(xs), tuple(ys),
                 LaurentPoly.xvar(ea), LaurentPoly.xvar(eb),
                 LaurentPoly.xvar(ew), LaurentPoly.xvar(ez),
                 tuple(ajs), tuple(bjs), tuple(ljs), tuple(rjs),
                 all_tiles, None, frozenset(alive))


def build_snake_graph(d: CurveDescriptor, t: Triangulation) -> Chain:
    if d.kind in ("contractible_loop", "orbifold_loop", "kinked"):
        raise ValueError(f"{d.kind} has no snake graph")
    data = expand_descriptor(d, t)
    if not data.crossings:
        raise ValueError("arc lies in the triangulation; nothing to build")
    return chain_from_data(data, t)


# ---------------------------------------------------------------------------
# matching enumeration


def _enumerate_chain_order(chain: Chain):
    """All perfect matchings by a chain-ordered search.

    Vertices are processed column by column; the first uncovered vertex
    branches over its incident edges.  Deterministic order.
    """
    edges = chain.edges()
    incident = {}
    for name, (u, v), _lbl in edges:
        incident.setdefault(u, []).append((name, v))
        incident.setdefault(v, []).append((name, u))
    order = []
    for j in range(chain.n + 1):
        order.append(("L", j))
        order.append(("R", j))
    results = []

    def rec(idx, covered, chosen):
        while idx < len(order) and order[idx] in covered:
            idx += 1
        if idx == len(order):
            results.append(frozenset(chosen))
            return
        v = order[idx]
        for name, other in incident.get(v, ()):
            if other not in covered:
                covered.add(v)
                covered.add(other)
                chosen.append(name)
                rec(idx + 1, covered, chosen)
                chosen.pop()
                covered.discard(v)
                covered.discard(other)

    rec(0, set(), [])
    return results


def minimal_maximal(chain: Chain):
    """The two boundary-only matchings (positional names)."""
    n = chain.n
    pminus = {"a"}
    pplus = {"b"}
    for j in range(1, n):
        if j % 2 == 1:
            pminus.add(("l", j))
            pplus.add(("r", j))
        else:
            pminus.add(("r", j))
            pplus.add(("l", j))
    pminus.add("z" if n % 2 == 1 else "w")
    pplus.add("w" if n % 2 == 1 else "z")
    return frozenset(pminus), frozenset(pplus)


def _twist_moves(chain: Chain, matching):
    """All matchings one twist away."""
    n = chain.n
    present = set()
    for name, _ends, lbl in chain.edges():
        present.add(name)
    out = []
    for j in range(1, n + 1):
        pairs = [
            ((_l_elem(j - 1, n), _r_elem(j, n)), (_a_elem(j - 1, n), _a_elem(j, n)), j),
            ((_l_elem(j, n), _r_elem(j - 1, n)), (_b_elem(j - 1, n), _b_elem(j, n)), j),
            # mixed forms, seen when exactly one neighboring tile is twisted
            ((_b_elem(j - 1, n), _r_elem(j, n)), (_r_elem(j - 1, n), _a_elem(j, n)), j),
            ((_l_elem(j - 1, n), _b_elem(j, n)), (_a_elem(j - 1, n), _l_elem(j, n)), j),
        ]
        for (old, new, tile) in pairs:
            for src, dst in ((old, new), (new, old)):
                if src[0] in matching and src[1] in matching and src[0] != src[1]:
                    if dst[0] in present and dst[1] in present:
                        m2 = set(matching)
                        m2.discard(src[0])
                        m2.discard(src[1])
                        m2.add(dst[0])
                        m2.add(dst[1])
                        out.append((frozenset(m2), tile))
    return out


def _enumerate_twist_bfs(chain: Chain):
    """All perfect matchings by twist closure from the minimal matching."""
    pminus, _ = minimal_maximal(chain)
    seen = {pminus}
    queue = [pminus]
    while queue:
        cur = queue.pop()
        for nxt, _tile in _twist_moves(chain, cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


class InternalInconsistency(RuntimeError):
    """The two enumeration strategies disagreed."""


def _band_good(chain: Chain, matchings):
    """Filter chain matchings down to the good matchings of a band graph."""
    mode, _glue = chain.band
    # positional edges carrying the labels w and z
    edge_w = "w" if chain.n % 2 == 0 else "z"
    edge_z = "z" if chain.n % 2 == 0 else "w"
    drop_pair = ("b", edge_w) if mode == "az" else ("a", edge_z)
    return [m for m in matchings if not (drop_pair[0] in m and drop_pair[1] in m)]


def enumerate_matchings(chain: Chain):
    """Deterministically ordered matchings; two strategies must agree."""
    listed = _enumerate_chain_order(chain)
    via_twists = _enumerate_twist_bfs(chain)
    if set(listed) != via_twists:
        raise InternalInconsistency(
            f"chain search found {len(listed)} matchings, "
            f"twist closure found {len(via_twists)}")
    if chain.band is not None:
        listed = _band_good(chain, listed)
    return sorted(listed, key=lambda m: sorted(map(str, m)))


# ---------------------------------------------------------------------------
# weights and heights


def _crossing_height(name, n):
    """Height at which an edge crosses the vertical line x = 1/2, if any."""
    if name == "a":
        return 0
    if name == "z":
        return n
    if isinstance(name, tuple) and name[0] in ("aj", "bj"):
        return name[1]
    return None


def weight_height(chain: Chain, matching):
    """(x(P), y(P)): edge-label product and enclosed-tile height monomial."""
    xval = LP_ONE
    for name in sorted(matching, key=str):
        xval = xval * chain.edge_label(name)
    if chain.band is not None:
        xval = xval.div_exact_monomial(chain.band[1])

    pminus, _ = minimal_maximal(chain)
    diff = matching ^ pminus
    heights = [h for h in (_crossing_height(name, chain.n) for name in diff)
               if h is not None]
    yval = LP_ONE
    for j in range(1, chain.n + 1):
        # marker i_j sits at height j - 1/2; it is enclosed iff an odd number
        # of symmetric-difference edges cross the vertical ray above it
        count = sum(1 for h in heights if h >= j)
        if count % 2 == 1:
            yval = yval * chain.yvars[j - 1]
    return xval, yval


def matching_sum(chain: Chain) -> LaurentPoly:
    total = LP_ZERO
    for m in enumerate_matchings(chain):
        x, y = weight_height(chain, m)
        total = total + x * y
    return total


def cluster_expansion(d: CurveDescriptor, t: Triangulation) -> LaurentPoly:
    """Laurent expansion of the element attached to the curve."""
    if d.kind == "contractible_loop":
        return LaurentPoly.const(-2)
    if d.kind == "orbifold_loop":
        return LaurentPoly.const(cheb_t(d.loops + 1, d.order))
    if d.kind == "kinked":
        inner = cluster_expansion(d.inner, t)
        return inner if d.kinks % 2 == 0 else -inner
    data = expand_descriptor(d, t)
    if not data.crossings:
        return LaurentPoly.xvar(data.endpoints[0])
    chain = chain_from_data(data, t)
    return matching_sum(chain).div_exact_monomial(chain.crossing_monomial())


# ---------------------------------------------------------------------------
# matching poset


@dataclass(frozen=True)
class MatchingPoset:
    nodes: tuple          # matchings, enumeration order
    heights: dict         # matching -> height monomial
    covers: tuple         # (lower, upper, tile index)

    def rank(self, m) -> int:
        h = self.heights[m]
        (mono, _c), = h.terms.items() if h.terms else ((tuple(), COEF_ONE),)
        return sum(e for _v, e in mono)

    def minimum(self):
        return min(self.nodes, key=self.rank)


def matching_poset(chain: Chain) -> MatchingPoset:
    nodes = enumerate_matchings(chain)
    node_set = set(nodes)
    heights = {m: weight_height(chain, m)[1] for m in nodes}

    def ydeg(m):
        h = heights[m]
        if h.is_zero() or h.is_one():
            return 0
        (mono, _c), = h.terms.items()
        return sum(e for _v, e in mono)

    covers = []
    seen = set()
    for m in nodes:
        for m2, tile in _twist_moves(chain, m):
            if m2 not in node_set:
                continue
            if ydeg(m2) == ydeg(m) + 1:
                key = (m, m2, tile)
                if key not in seen:
                    seen.add(key)
                    covers.append(key)
    return MatchingPoset(tuple(nodes), heights, tuple(covers))


def poset_dot(chain: Chain) -> str:
    """DOT rendering: nodes show height monomials, edges show twist labels."""
    poset = matching_poset(chain)
    index = {m: i for i, m in enumerate(poset.nodes)}
    lines = ["digraph matchings {"]
    for m in poset.nodes:
        label = poset.heights[m].canonical_string()
        lines.append(f'  n{index[m]} [label="{label}"];')
    for lo, hi, tile in poset.covers:
        ylabel = chain.yvars[tile - 1].canonical_string()
        lines.append(f'  n{index[lo]} -> n{index[hi]} [label="{ylabel}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
