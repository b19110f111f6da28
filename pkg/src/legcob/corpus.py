"""Random fronts, applicable moves, and certificates for fuzzing.

Everything is driven by a caller-supplied ``random.Random`` so corpora are
reproducible.  Generated objects are always structurally valid; move
enumeration only returns moves whose preconditions hold on the given front.
"""

from __future__ import annotations

import random

from .errors import EngineError
from .front import (
    CROSSING,
    LEFT_CUSP,
    RIGHT_CUSP,
    FrontDiagram,
    L,
    R,
    SliceEvent,
    X,
    orient,
)
from .moves import (
    Birth,
    CuspPass,
    CuspPassExpand,
    Dodge,
    FishAdd,
    FishDel,
    FoldAdd,
    FoldDel,
    Move,
    R3,
    Saddle,
    Slide,
    StabilizeFront,
    apply_move,
    slide_result,
)


def random_front(rng: random.Random, max_events: int = 10, max_strands: int = 6,
                 orientations: bool = True) -> FrontDiagram:
    """A random valid closed front (nonempty)."""
    events: list[SliceEvent] = []
    n = 0
    budget = rng.randint(2, max_events)
    while len(events) < budget:
        choices = []
        if n < max_strands:
            choices.append(LEFT_CUSP)
        if n >= 2:
            choices += [CROSSING, RIGHT_CUSP, RIGHT_CUSP]
        kind = rng.choice(choices)
        if kind == LEFT_CUSP:
            events.append(L(rng.randint(1, n + 1)))
            n += 2
        elif kind == CROSSING:
            events.append(X(rng.randint(1, n - 1)))
        else:
            events.append(R(rng.randint(1, n - 1)))
            n -= 2
    while n > 0:
        events.append(R(rng.randint(1, n - 1)))
        n -= 2
    front = FrontDiagram.from_events(events)
    if orientations:
        bits = tuple(rng.randint(0, 1) for _ in range(front.component_count))
        front = FrontDiagram(front.events, bits)
    return front


def applicable_isotopy_moves(front: FrontDiagram, allow_growth: bool = True) -> list[Move]:
    """Every isotopy move whose pattern matches somewhere on the front."""
    events = front.events
    profile = front.profile
    out: list[Move] = []
    for k in range(len(events) - 1):
        if slide_result(events[k], events[k + 1]) is not None:
            out.append(Slide(k))
        a, b = events[k], events[k + 1]
        if a.kind == RIGHT_CUSP and b.kind == LEFT_CUSP and a.pos == b.pos:
            out.append(Dodge(k, True))
            out.append(Dodge(k, False))
    for k in range(len(events) - 2):
        e1, e2, e3 = events[k:k + 3]
        if e1.kind == e2.kind == e3.kind == CROSSING and e1.pos == e3.pos \
                and abs(e1.pos - e2.pos) == 1:
            out.append(R3(k))
        if e1.kind == LEFT_CUSP and e2.kind == CROSSING and e3.kind == CROSSING \
                and (e2.pos, e3.pos) in ((e1.pos - 1, e1.pos), (e1.pos + 1, e1.pos)):
            out.append(CuspPass(k))
        if e1.kind == CROSSING and e2.kind == CROSSING and e3.kind == RIGHT_CUSP \
                and (e1.pos, e2.pos) in ((e3.pos, e3.pos - 1), (e3.pos, e3.pos + 1)):
            out.append(CuspPass(k))
        if e1.kind == LEFT_CUSP and e2.kind == CROSSING and e3.kind == RIGHT_CUSP \
                and e3.pos == e1.pos and e2.pos in (e1.pos - 1, e1.pos + 1):
            out.append(FishDel(k))
    for k in range(len(events) - 6):
        e = events[k:k + 7]
        p = e[4].pos
        if e == (L(p + 2), L(p + 4), X(p + 3), X(p + 1), R(p), R(p), R(p)):
            out.append(FoldDel(k))
    if allow_growth:
        for k in range(len(events)):
            ev = events[k]
            n_in = profile[k]
            if ev.kind == LEFT_CUSP:
                if ev.pos >= 2:
                    out.append(CuspPassExpand(k, True))
                if ev.pos <= n_in:
                    out.append(CuspPassExpand(k, False))
            if ev.kind == RIGHT_CUSP:
                if ev.pos >= 2:
                    out.append(CuspPassExpand(k, True))
                if ev.pos + 2 <= n_in:
                    out.append(CuspPassExpand(k, False))
        for k in range(len(events) + 1):
            for p in range(1, profile[k] + 1):
                out.append(FishAdd(k, p, True))
                out.append(FishAdd(k, p, False))
        for k, ev in enumerate(events):
            if ev.kind == RIGHT_CUSP:
                out.append(FoldAdd(k, ev.pos))
    return out


def applicable_saddles(front: FrontDiagram) -> list[Saddle]:
    """Saddles whose pattern and orientation precondition both hold."""
    events = front.events
    sm = orient(front)
    out = []
    for k in range(len(events) - 1):
        a, b = events[k], events[k + 1]
        if a.kind == RIGHT_CUSP and b.kind == LEFT_CUSP and a.pos == b.pos:
            i = a.pos
            if all(sm.dir_of(k, p) == sm.dir_of(k + 2, p) for p in (i, i + 1)):
                out.append(Saddle(k))
    return out


def applicable_births(front: FrontDiagram) -> list[Birth]:
    out = []
    for k in range(len(front.events) + 1):
        for p in range(1, front.profile[k] + 2):
            out.append(Birth(k, p))
    return out


def random_isotopy_move(rng: random.Random, front: FrontDiagram,
                        allow_growth: bool = True) -> Move | None:
    moves = applicable_isotopy_moves(front, allow_growth)
    return rng.choice(moves) if moves else None


def random_stabilization(rng: random.Random, front: FrontDiagram) -> StabilizeFront | None:
    slices = [(s, p) for s in range(1, len(front.events))
              for p in range(1, front.profile[s] + 1)]
    if not slices:
        return None
    s, p = rng.choice(slices)
    return StabilizeFront(s, p, rng.choice((1, -1)))


def random_certificate(rng: random.Random, max_moves: int = 6,
                       front_kw: dict | None = None):
    """A random valid certificate: random bottom plus applicable cobordism
    and isotopy moves (growth-limited to keep replay cheap)."""
    from .cobordism import CobordismCertificate

    front = random_front(rng, **(front_kw or {}))
    bottom = front
    moves: list[Move] = []
    for _ in range(rng.randint(0, max_moves)):
        kind = rng.random()
        candidates: list[Move] = []
        if kind < 0.35:
            candidates = applicable_saddles(front)
        elif kind < 0.55:
            candidates = applicable_births(front)
        if not candidates:
            small = len(front.events) < 16
            candidates = applicable_isotopy_moves(front, allow_growth=small)
        if not candidates:
            break
        mv = rng.choice(candidates)
        try:
            front, _ = apply_move(front, mv)
        except EngineError:
            continue
        moves.append(mv)
    return CobordismCertificate(bottom, tuple(moves))
