"""Triangulations, curve descriptors, validation, and B-matrix mutation.

Curves are given combinatorially: a word of crossing tokens, one per crossed
arc, where a pending arc's consecutive double crossing is a single token.
Geometry (turns, winding counts, which bigon side is entered first) is part
of the input, so no isotopy computations happen here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

SCHEMA_VERSION = 1


class ValidationError(ValueError):
    """Base class for descriptor/triangulation validation failures."""


class UnknownLabelError(ValidationError):
    pass


class WindingRangeError(ValidationError):
    pass


class AdjacencyError(ValidationError):
    pass


class EndpointError(ValidationError):
    pass


# ---------------------------------------------------------------------------
# triangulation


@dataclass(frozen=True)
class ArcLabel:
    id: int
    kind: str  # "standard" | "pending" | "boundary"
    order: Optional[int] = None  # orbifold order, pending arcs only

    def __post_init__(self):
        if self.kind not in ("standard", "pending", "boundary"):
            raise ValidationError(f"unknown arc kind {self.kind!r}")
        if self.kind == "pending":
            if self.order is None or self.order < 2:
                raise ValidationError("pending arc needs an order >= 2")
        elif self.order is not None:
            raise ValidationError("only pending arcs carry an order")


@dataclass(frozen=True)
class Triangulation:
    arcs: tuple
    triangles: tuple  # clockwise-ordered triples of arc ids

    def __post_init__(self):
        ids = [a.id for a in self.arcs]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate arc ids")
        by_id = {a.id: a for a in self.arcs}
        for tri in self.triangles:
            if len(tri) != 3:
                raise ValidationError("triangles must have three sides")
            for aid in tri:
                if aid not in by_id:
                    raise UnknownLabelError(f"triangle references unknown arc {aid}")

    def arc(self, aid: int) -> ArcLabel:
        for a in self.arcs:
            if a.id == aid:
                return a
        raise UnknownLabelError(f"unknown arc {aid}")

    def has_arc(self, aid: int) -> bool:
        return any(a.id == aid for a in self.arcs)

    def is_internal(self, aid: int) -> bool:
        return self.arc(aid).kind != "boundary"

    def triangles_containing(self, *aids: int):
        out = []
        for tri in self.triangles:
            if all(aid in tri for aid in aids):
                out.append(tri)
        return out

    def internal_arcs(self):
        return [a for a in self.arcs if a.kind != "boundary"]


def make_triangulation(arcs, triangles) -> Triangulation:
    return Triangulation(tuple(arcs), tuple(tuple(t) for t in triangles))


# ---------------------------------------------------------------------------
# curve descriptors


@dataclass(frozen=True)
class CrossingToken:
    """One crossing (standard arc) or one consecutive double crossing (pending).

    For a standard token, turn is the side on which this arc and the next
    crossed arc share a vertex, and glue is the third side of that triangle.
    For a pending token, turn is the side of the curve on which the pending
    arc is based, winding counts self-intersections inside the monogon, and
    alpha/beta are the enclosing bigon sides with alpha the side crossed
    immediately before the pending arc (for a curve starting inside the
    bigon, alpha is the side the curve leaves through last).
    """

    arc: int
    turn: Optional[str] = None  # "left" | "right"
    glue: Optional[int] = None
    winding: Optional[int] = None
    alpha: Optional[int] = None
    beta: Optional[int] = None


@dataclass(frozen=True)
class CurveDescriptor:
    kind: str
    word: tuple = ()
    endpoints: Optional[dict] = None  # {"a","b","w","z"} arc ids for open curves
    order: Optional[int] = None      # orbifold_loop only
    loops: Optional[int] = None      # orbifold_loop self-intersection count
    inner: Optional["CurveDescriptor"] = None  # kinked only
    kinks: int = 0

    KINDS = ("ordinary_arc", "generalized_arc", "closed_curve",
             "contractible_loop", "orbifold_loop", "kinked")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValidationError(f"unknown curve kind {self.kind!r}")
        object.__setattr__(self, "word", tuple(self.word))


def _flip(turn: str) -> str:
    return "left" if turn == "right" else "right"


@dataclass(frozen=True)
class ChainData:
    """Flattened crossing sequence of a descriptor.

    crossings: arc ids, one per crossing (pending tokens appear twice).
    transitions: for positions j = 1..n-1 (plus a closing transition for a
    closed curve), either ("std", turn, glue_arc) or ("hex", rho, order,
    winding).
    endpoints: (a, b, w, z) arc ids, None for closed curves.
    closed: whether the final transition wraps around.
    """

    crossings: tuple
    transitions: tuple
    endpoints: Optional[tuple]
    closed: bool


def expand_descriptor(d: CurveDescriptor, t: Triangulation) -> ChainData:
    """Validate a word-carrying descriptor and flatten it to chain form."""
    if d.kind in ("contractible_loop", "orbifold_loop"):
        raise ValidationError("loops have no crossing word to expand")
    if d.kind == "kinked":
        if d.inner is None or d.kinks < 1:
            raise ValidationError("kinked curve needs an inner curve and kinks >= 1")
        return expand_descriptor(d.inner, t)

    closed = d.kind == "closed_curve"
    if closed and d.endpoints is not None:
        raise EndpointError("closed curves carry no endpoints")

    word = list(d.word)
    if not word:
        # an arc of the triangulation itself: no crossings
        if closed:
            raise ValidationError("a closed curve must cross something")
        ep = d.endpoints or {}
        if "a" not in ep or not t.has_arc(ep["a"]):
            raise EndpointError("empty word needs endpoints naming the arc")
        return ChainData((), (), (ep["a"], None, None, None), False)

    # per-token sanity
    for tok in word:
        if not t.has_arc(tok.arc):
            raise UnknownLabelError(f"token references unknown arc {tok.arc}")
        arc = t.arc(tok.arc)
        if arc.kind == "boundary":
            raise ValidationError(f"cannot cross boundary arc {tok.arc}")
        if arc.kind == "pending":
            if tok.winding is None or tok.alpha is None or tok.beta is None:
                raise ValidationError("pending token needs winding, alpha, beta")
            if not (0 <= tok.winding <= arc.order - 2):
                raise WindingRangeError(
                    f"winding out of range [0, {arc.order - 2}] on arc {tok.arc}")
            if not t.triangles_containing(tok.arc, tok.alpha, tok.beta):
                raise AdjacencyError(
                    f"no triangle with sides {tok.arc}, {tok.alpha}, {tok.beta}")
            if tok.turn not in ("left", "right"):
                raise ValidationError("pending token needs a based side")
        else:
            if tok.turn not in ("left", "right"):
                raise ValidationError("standard token needs a turn")
            if tok.glue is None or not t.has_arc(tok.glue):
                raise UnknownLabelError(f"bad glue edge on token for arc {tok.arc}")

    def is_pending(tok):
        return t.arc(tok.arc).kind == "pending"

    crossings = []
    for tok in word:
        crossings.append(tok.arc)
        if is_pending(tok):
            crossings.append(tok.arc)

    # derive transitions between consecutive tokens (and the closure)
    transitions = []
    m = len(word)
    last = m if closed else m - 1
    for idx in range(m):
        tok = word[idx]
        if is_pending(tok):
            arc = t.arc(tok.arc)
            transitions.append(("hex", tok.arc, arc.order, tok.winding))
        if idx == last:
            break
        nxt = word[(idx + 1) % m]
        if is_pending(tok):
            # leaving the bigon through the next crossed arc
            if nxt.arc == tok.beta:
                turn, glue = tok.turn, tok.alpha
            elif nxt.arc == tok.alpha:
                turn, glue = _flip(tok.turn), tok.beta
            else:
                raise AdjacencyError(
                    f"arc {nxt.arc} is not a bigon side of pending arc {tok.arc}")
        else:
            turn, glue = tok.turn, tok.glue
            if not t.triangles_containing(tok.arc, nxt.arc, glue):
                raise AdjacencyError(
                    f"no triangle with sides {tok.arc}, {nxt.arc}, {glue}")
        if is_pending(nxt):
            # entering a bigon: the previous arc must be the alpha side and
            # the stated based side must agree with the approach turn
            if nxt.alpha != tok.arc:
                raise AdjacencyError(
                    f"pending token on {nxt.arc} expects alpha={tok.arc}")
            if nxt.turn != turn:
                raise AdjacencyError(
                    f"based side of pending arc {nxt.arc} conflicts with approach turn")
        transitions.append(("std", turn, glue))

    endpoints = None
    if not closed:
        ep = d.endpoints or {}
        for key in ("a", "b", "w", "z"):
            if key not in ep or not t.has_arc(ep[key]):
                raise EndpointError(f"missing or unknown endpoint label {key!r}")
        first, last_tok = word[0], word[-1]
        if not t.triangles_containing(first.arc, ep["a"], ep["b"]):
            raise EndpointError("first triangle (a, b) does not exist")
        if not t.triangles_containing(last_tok.arc, ep["w"], ep["z"]):
            raise EndpointError("last triangle (w, z) does not exist")
        endpoints = (ep["a"], ep["b"], ep["w"], ep["z"])

    return ChainData(tuple(crossings), tuple(transitions), endpoints, closed)


def validate(d: CurveDescriptor, t: Triangulation) -> None:
    """Raise a ValidationError subclass if the descriptor is malformed."""
    if d.kind == "contractible_loop":
        if d.word:
            raise ValidationError("contractible loops carry an empty word")
        return
    if d.kind == "orbifold_loop":
        if d.word:
            raise ValidationError("orbifold loops carry an empty word")
        if d.order is None or d.order < 2:
            raise ValidationError("orbifold loop needs an order >= 2")
        if d.loops is None or d.loops < 0:
            raise ValidationError("orbifold loop needs a self-intersection count")
        return
    expand_descriptor(d, t)


# ---------------------------------------------------------------------------
# extended B-matrices


@dataclass(frozen=True)
class ExtendedBMatrix:
    rows: tuple       # (n+m) rows, each a tuple of n ints
    pending: tuple    # n booleans

    @property
    def ncols(self) -> int:
        return len(self.pending)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValidationError("ragged matrix")


def make_bmatrix(rows, pending=None) -> ExtendedBMatrix:
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    n = len(rows[0]) if rows else 0
    if pending is None:
        pending = (False,) * n
    return ExtendedBMatrix(rows, tuple(bool(b) for b in pending))


def principal_extend(b_rows, pending=None) -> ExtendedBMatrix:
    """Stack an identity block (principal coefficients) under a square matrix."""
    rows = [tuple(int(v) for v in r) for r in b_rows]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValidationError("exchange matrix must be square")
    ident = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    if pending is None:
        pending = (False,) * n
    return ExtendedBMatrix(tuple(rows + ident), tuple(bool(b) for b in pending))


def generalized_mutate(B: ExtendedBMatrix, k: int) -> ExtendedBMatrix:
    """Matrix mutation at column k; cross terms scale by 2 at pending columns."""
    n = B.ncols
    if not (0 <= k < n):
        raise IndexError(f"mutation index {k} out of range")
    d_k = 2 if B.pending[k] else 1
    old = [list(r) for r in B.rows]
    new = [row[:] for row in old]
    for i in range(B.nrows):
        for j in range(n):
            if i == k or j == k:
                new[i][j] = -old[i][j]
            else:
                bik, bkj = old[i][k], old[k][j]
                if bik > 0 and bkj > 0:
                    new[i][j] = old[i][j] + d_k * bik * bkj
                elif bik < 0 and bkj < 0:
                    new[i][j] = old[i][j] - d_k * bik * bkj
    return ExtendedBMatrix(tuple(tuple(r) for r in new), B.pending)


# ---------------------------------------------------------------------------
# JSON serialization


def triangulation_to_json(t: Triangulation) -> dict:
    arcs = []
    for a in t.arcs:
        entry = {"id": a.id, "kind": a.kind}
        if a.order is not None:
            entry["order"] = a.order
        arcs.append(entry)
    return {
        "schema_version": SCHEMA_VERSION,
        "arcs": arcs,
        "triangles": [list(tri) for tri in t.triangles],
    }


def triangulation_from_json(data: dict) -> Triangulation:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValidationError("unsupported schema_version")
    arcs = [ArcLabel(a["id"], a["kind"], a.get("order")) for a in data["arcs"]]
    return make_triangulation(arcs, data["triangles"])


def descriptor_to_json(d: CurveDescriptor) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "kind": d.kind}
    if d.kind == "kinked":
        out["kinks"] = d.kinks
        out["inner"] = descriptor_to_json(d.inner)
        return out
    if d.kind == "orbifold_loop":
        out["order"] = d.order
        out["loops"] = d.loops
        return out
    if d.kind == "contractible_loop":
        return out
    word = []
    for tok in d.word:
        entry = {"arc": tok.arc, "turn": tok.turn}
        if tok.winding is not None:
            entry["winding"] = tok.winding
            entry["alpha"] = tok.alpha
            entry["beta"] = tok.beta
        else:
            entry["glue"] = tok.glue
        word.append(entry)
    out["word"] = word
    if d.endpoints is not None:
        out["endpoints"] = dict(d.endpoints)
    return out


def descriptor_from_json(data: dict) -> CurveDescriptor:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValidationError("unsupported schema_version")
    kind = data["kind"]
    if kind == "kinked":
        inner = descriptor_from_json(data["inner"])
        return CurveDescriptor("kinked", inner=inner, kinks=data["kinks"])
    if kind == "orbifold_loop":
        return CurveDescriptor("orbifold_loop", order=data["order"], loops=data["loops"])
    if kind == "contractible_loop":
        return CurveDescriptor("contractible_loop")
    word = []
    for entry in data.get("word", []):
        word.append(CrossingToken(
            arc=entry["arc"],
            turn=entry.get("turn"),
            glue=entry.get("glue"),
            winding=entry.get("winding"),
            alpha=entry.get("alpha"),
            beta=entry.get("beta"),
        ))
    return CurveDescriptor(kind, tuple(word), data.get("endpoints"))


def bmatrix_to_json(B: ExtendedBMatrix) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "rows": [list(r) for r in B.rows],
        "pending": list(B.pending),
    }


def bmatrix_from_json(data: dict) -> ExtendedBMatrix:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValidationError("unsupported schema_version")
    return make_bmatrix(data["rows"], data.get("pending"))


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
