"""Random descriptor generator for the cross-validation suites.

Builds a fresh triangulation tailored to a random crossing word, so every
generated descriptor validates by construction.  Used by the verify CLI and
the test suite; deterministic for a given seed.
"""

from __future__ import annotations

import random

from .orbifold import (ArcLabel, CrossingToken, CurveDescriptor,
                       Triangulation, make_triangulation)

ORDERS = (2, 3, 4, 5, 6)


class _Builder:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.next_id = 1
        self.arcs = []
        self.triangles = []

    def arc(self, kind: str, order=None) -> int:
        aid = self.next_id
        self.next_id += 1
        self.arcs.append(ArcLabel(aid, kind, order))
        return aid

    def triangle(self, a: int, b: int, c: int) -> None:
        if len({a, b, c}) == 3:
            self.triangles.append((a, b, c))

    def done(self) -> Triangulation:
        return make_triangulation(self.arcs, self.triangles)


def random_case(rng: random.Random, max_crossings: int = 8,
                closed: bool = False, ordinary: bool = False):
    """One (triangulation, descriptor) pair.

    ordinary=True keeps all pending windings at zero and labels the
    descriptor an ordinary arc (the precondition of the lift pipeline).
    """
    b = _Builder(rng)
    n_tokens = rng.randint(2 if closed else 1, 4)

    # crossing skeleton: per token an arc, pending tokens weigh two crossings
    kinds = []
    weight = 0
    for i in range(n_tokens):
        pending = rng.random() < 0.5
        cost = 2 if pending else 1
        if weight + cost > max_crossings:
            pending = False
            cost = 1
        kinds.append(pending)
        weight += cost
    if closed:
        kinds[0] = False  # anchor the turn propagation at a standard token
    arcs = []
    orders = []
    for pending in kinds:
        if pending:
            p = rng.choice(ORDERS)
            arcs.append(b.arc("pending", p))
            orders.append(p)
        else:
            arcs.append(b.arc("standard"))
            orders.append(None)

    m = n_tokens
    turns = [None] * m
    alphas = [None] * m
    betas = [None] * m
    glues = [None] * m

    def prev_arc(i):
        if i > 0:
            return arcs[i - 1]
        return arcs[-1] if closed else None

    def next_arc(i):
        if i < m - 1:
            return arcs[i + 1]
        return arcs[0] if closed else None

    # walk the word, fixing turns by the approach rule and inventing the
    # linking triangles as we go
    approach = None
    for i in range(m):
        if kinds[i]:
            turns[i] = approach if approach is not None else rng.choice(
                ("left", "right"))
            alphas[i] = prev_arc(i)
            if alphas[i] is None:
                alphas[i] = b.arc("boundary")
            nxt = next_arc(i)
            if nxt is not None and nxt == alphas[i]:
                # doubling back through the side we came in on
                betas[i] = b.arc("boundary")
                approach = "left" if turns[i] == "right" else "right"
            else:
                betas[i] = nxt if nxt is not None else b.arc("boundary")
                approach = turns[i]
            b.triangle(arcs[i], alphas[i], betas[i])
        else:
            turns[i] = rng.choice(("left", "right"))
            nxt = next_arc(i)
            glues[i] = b.arc("boundary")
            if nxt is not None:
                b.triangle(arcs[i], nxt, glues[i])
            approach = turns[i]

    endpoints = None
    if not closed:
        if kinds[0]:
            a_ep, b_ep = alphas[0], betas[0]
            if arcs[0] == next_arc(0):
                pass  # cannot happen: tokens use distinct fresh arcs
        else:
            a_ep, b_ep = b.arc("boundary"), b.arc("boundary")
            b.triangle(arcs[0], a_ep, b_ep)
        if kinds[-1]:
            w_ep, z_ep = betas[-1], alphas[-1]
        else:
            w_ep, z_ep = b.arc("boundary"), b.arc("boundary")
            b.triangle(arcs[-1], w_ep, z_ep)
        endpoints = {"a": a_ep, "b": b_ep, "w": w_ep, "z": z_ep}

    word = []
    for i in range(m):
        if kinds[i]:
            p = orders[i]
            winding = 0 if ordinary else rng.randint(0, p - 2)
            word.append(CrossingToken(arcs[i], turns[i], None, winding,
                                      alphas[i], betas[i]))
        else:
            word.append(CrossingToken(arcs[i], turns[i], glues[i]))

    if closed:
        kind = "closed_curve"
    elif ordinary:
        kind = "ordinary_arc"
    else:
        kind = "generalized_arc"
    return b.done(), CurveDescriptor(kind, tuple(word), endpoints)
