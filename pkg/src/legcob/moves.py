"""Elementary rewrites on fronts and macro expansion.

Move inventory
--------------

Isotopy moves (tb, rotation, component count and smooth type all preserved;
enforced at every application):

* ``Slide(k)`` -- commute the adjacent events ``k``, ``k+1`` when their
  footprints are disjoint (far commutation).
* ``Dodge(k, tip_above)`` -- resolve the head-on pair ``[R(i), L(i)]`` by
  carrying the right cusp past the left cusp's tip, above or below it:
  ``[L(i+2), R(i)]`` resp. ``[L(i), R(i+2)]``.  The inverse direction is an
  ordinary Slide.
* ``R3(k)`` -- triple-point move ``[X(i), X(j), X(i)] <-> [X(j), X(i), X(j)]``
  for ``|i-j| = 1``.
* ``CuspPass(k)`` / ``CuspPassExpand(k, up)`` -- a cusp passes through a
  transverse strand; the strand trades crossings with BOTH branches (the
  two crossing signs cancel).  Contractions, matched at ``k``:
  ``[L(i+1), X(i), X(i+1)] -> [L(i)]``, ``[L(i), X(i+1), X(i)] -> [L(i+1)]``,
  ``[X(i+1), X(i), R(i+1)] -> [R(i)]``, ``[X(i), X(i+1), R(i)] -> [R(i+1)]``.
  ``CuspPassExpand`` inverts them: the cusp at ``k`` dives past the strand
  above (``up``) or below (``not up``).
* ``FishAdd(k, p, above)`` / ``FishDel(k)`` -- swallowtail: a plain strand
  grows/loses a kink made of one crossing and a cusp pair,
  ``[L(p), X(p+1), R(p)]`` (above) or ``[L(p+1), X(p), R(p+1)]`` (below).
* ``FoldAdd(k, p)`` / ``FoldDel(k)`` -- finger fold: the two strands closing
  at the right cusp ``R(p)`` at index ``k`` fold back jointly first, trading
  a full twist between them: ``[L(p+2), L(p+4), X(p+3), X(p+1), R(p), R(p)]``
  inserted before the cap.  Legal only against an immediate cap (the twist
  slides off a blind finger's end, so this is an isotopy there and only
  there); the cap partners are automatically anti-parallel and the two new
  crossings carry equal signs, preserving tb.

Cobordism moves:

* ``Birth(k, p)`` -- insert a split maximal-tb oval ``[L(p), R(p)]``.
* ``Saddle(k)`` -- delete an adjacent ``[R(i), L(i)]`` pair, opening the
  ")(" configuration into parallel strands.  Oriented: the strand directions
  on both sides of the window must agree.

Setup-only:

* ``StabilizeFront(k, p, sign)`` -- insert a stabilization zig-zag on the
  segment ``(k, p)``.  Lowers tb by one and shifts rotation by ``sign``;
  legal on fronts but never part of a verified cobordism ledger.

Macros (``GeneralizedPinch``, ``FixFraming``, ``TopStab``) expand to finite
move lists via :func:`expand_macro`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    BadLocus,
    InvalidResult,
    MissingZigZag,
    OrientationObstruction,
    PatternMismatch,
    RouteBlocked,
)
from .front import (
    CROSSING,
    LEFT_CUSP,
    RIGHT_CUSP,
    RIGHTWARD,
    FrontDiagram,
    L,
    R,
    SliceEvent,
    X,
    orient,
    strand_profile,
)
from .invariants import rotation, thurston_bennequin


# --- move types ---------------------------------------------------------------

@dataclass(frozen=True)
class Slide:
    k: int


@dataclass(frozen=True)
class Dodge:
    k: int
    tip_above: bool  # True: tip passes above the left cusp, pair lands below


@dataclass(frozen=True)
class R3:
    k: int


@dataclass(frozen=True)
class CuspPass:
    k: int


@dataclass(frozen=True)
class CuspPassExpand:
    k: int
    up: bool


@dataclass(frozen=True)
class FishAdd:
    k: int
    p: int
    above: bool


@dataclass(frozen=True)
class FishDel:
    k: int


@dataclass(frozen=True)
class FoldAdd:
    k: int
    p: int


@dataclass(frozen=True)
class FoldDel:
    k: int


@dataclass(frozen=True)
class Birth:
    k: int
    p: int = 1


@dataclass(frozen=True)
class Saddle:
    k: int


@dataclass(frozen=True)
class StabilizeFront:
    k: int
    p: int
    sign: int


Move = Union[Slide, Dodge, R3, CuspPass, CuspPassExpand, FishAdd, FishDel,
             FoldAdd, FoldDel, Birth, Saddle, StabilizeFront]

ISOTOPY_KINDS = (Slide, Dodge, R3, CuspPass, CuspPassExpand, FishAdd, FishDel,
                 FoldAdd, FoldDel)


@dataclass(frozen=True)
class GeneralizedPinch:
    rc: int                  # event index of the right cusp endpoint
    lc: int                  # event index of the left cusp endpoint
    route: tuple[int, ...]   # tip gap after each passed event (strictly between)


@dataclass(frozen=True)
class FixFraming:
    rc: int                  # cusp event index carrying an adjacent zig-zag


@dataclass(frozen=True)
class TopStab:
    component: int


Macro = Union[GeneralizedPinch, FixFraming, TopStab]


@dataclass(frozen=True)
class MoveDelta:
    dtb: int
    dr: int
    dchi: int
    dcomponents: int


EXPECTED_DELTAS = {
    "isotopy": (0, 0, 0),
    "birth": (-1, 0, 1),
    "saddle": (1, 0, -1),
}


def move_family(move: Move) -> str:
    if isinstance(move, ISOTOPY_KINDS):
        return "isotopy"
    if isinstance(move, Birth):
        return "birth"
    if isinstance(move, Saddle):
        return "saddle"
    if isinstance(move, StabilizeFront):
        return "stabilize"
    raise PatternMismatch(f"not an elementary move: {move!r}")


# --- footprints for commutation -----------------------------------------------

def _footprint_first(ev: SliceEvent) -> tuple[int, int]:
    """Middle-frame footprint of the earlier event, in doubled coordinates
    (strand q at 2q, gap between q and q+1 at 2q+1)."""
    if ev.kind == LEFT_CUSP:
        return (2 * ev.pos, 2 * ev.pos + 2)
    if ev.kind == RIGHT_CUSP:
        return (2 * ev.pos - 1, 2 * ev.pos - 1)
    return (2 * ev.pos, 2 * ev.pos + 2)


def _footprint_second(ev: SliceEvent) -> tuple[int, int]:
    if ev.kind == LEFT_CUSP:
        return (2 * ev.pos - 1, 2 * ev.pos - 1)
    return (2 * ev.pos, 2 * ev.pos + 2)


def _count_delta(kind: str) -> int:
    return 2 if kind == LEFT_CUSP else -2 if kind == RIGHT_CUSP else 0


def slide_result(a: SliceEvent, b: SliceEvent):
    """Commuted pair (b', a') or None when footprints are not disjoint."""
    fa, fb = _footprint_first(a), _footprint_second(b)
    if fa[1] < fb[0]:  # a above b
        b2 = SliceEvent(b.kind, b.pos - _count_delta(a.kind))
        return b2, a
    if fb[1] < fa[0]:  # b above a
        a2 = SliceEvent(a.kind, a.pos + _count_delta(b.kind))
        return b, a2
    return None


def slideable(front: FrontDiagram, k: int) -> bool:
    return 0 <= k < len(front.events) - 1 and slide_result(front.events[k], front.events[k + 1]) is not None


# --- the rewrite core -----------------------------------------------------------

def _rewrite(front: FrontDiagram, a: int, b: int, new_events, index_pairs,
             fresh_bits=None):
    """Replace events[a:b] by ``new_events`` and transport orientations.

    ``index_pairs`` lists (old_index, new_index) for surviving events (used
    by callers that track cusps); orientation bits of every new component are
    fixed by matching any segment outside the rewritten window against the
    old strand map, defaulting to 0 for components born inside the window.
    """
    old_events = front.events
    new_word = old_events[:a] + tuple(new_events) + old_events[b:]
    m = len(new_events)
    shift = m - (b - a)
    try:
        new_profile = strand_profile(new_word)
    except Exception as exc:
        raise InvalidResult(f"rewrite produced an invalid word: {exc}") from exc
    old_sm = orient(front)
    bare = FrontDiagram.from_events(new_word)
    canon = orient(bare)
    ncomp = bare.component_count
    bits: list[int | None] = [None] * ncomp
    for s in range(len(new_word) + 1):
        if a < s < a + m:
            continue
        old_s = s if s <= a else s - shift
        for p in range(1, new_profile[s] + 1):
            cid = canon.comp_of(s, p)
            want = old_sm.dir_of(old_s, p)
            bit = 0 if canon.dir_of(s, p) == want else 1
            if bits[cid] is None:
                bits[cid] = bit
            elif bits[cid] != bit:
                raise InvalidResult("orientation transport is inconsistent")
    final_bits = tuple(0 if x is None else x for x in bits)
    if fresh_bits:
        final_bits = tuple(
            fresh_bits.get(cid, bit) if bits[cid] is None else bit
            for cid, bit in enumerate(final_bits)
        )
    out = FrontDiagram(new_word, final_bits)
    index_map = {}
    for old_i in range(len(old_events)):
        if old_i < a:
            index_map[old_i] = old_i
        elif old_i >= b:
            index_map[old_i] = old_i + shift
    for old_i, new_i in index_pairs:
        index_map[old_i] = new_i
    return out, index_map


def _window(front: FrontDiagram, k: int, size: int) -> tuple[SliceEvent, ...]:
    if not (0 <= k and k + size <= len(front.events)):
        raise BadLocus(f"event window [{k}, {k + size}) out of range")
    return front.events[k:k + size]


def _apply_raw(front: FrontDiagram, move: Move):
    """Dispatch a single elementary move; returns (front, index_map)."""
    events = front.events
    if isinstance(move, Slide):
        a, b = _window(front, move.k, 2)
        res = slide_result(a, b)
        if res is None:
            raise PatternMismatch(f"events {a}@{move.k} and {b} do not commute")
        return _rewrite(front, move.k, move.k + 2, res,
                        [(move.k, move.k + 1), (move.k + 1, move.k)])

    if isinstance(move, Dodge):
        a, b = _window(front, move.k, 2)
        if not (a.kind == RIGHT_CUSP and b.kind == LEFT_CUSP and a.pos == b.pos):
            raise PatternMismatch(f"dodge needs [R(i), L(i)] at {move.k}")
        i = a.pos
        new = (L(i + 2), R(i)) if move.tip_above else (L(i), R(i + 2))
        return _rewrite(front, move.k, move.k + 2, new,
                        [(move.k, move.k + 1), (move.k + 1, move.k)])

    if isinstance(move, R3):
        e1, e2, e3 = _window(front, move.k, 3)
        if not (e1.kind == e2.kind == e3.kind == CROSSING and e1.pos == e3.pos
                and abs(e1.pos - e2.pos) == 1):
            raise PatternMismatch(f"no triple-point pattern at {move.k}")
        new = (X(e2.pos), X(e1.pos), X(e2.pos))
        return _rewrite(front, move.k, move.k + 3, new,
                        [(move.k, move.k + 2), (move.k + 1, move.k + 1), (move.k + 2, move.k)])

    if isinstance(move, CuspPass):
        e1, e2, e3 = _window(front, move.k, 3)
        new = None
        if e1.kind == LEFT_CUSP and e2.kind == CROSSING and e3.kind == CROSSING:
            if (e2.pos, e3.pos) == (e1.pos - 1, e1.pos):
                new = (L(e1.pos - 1),)       # [L(i+1), X(i), X(i+1)] -> [L(i)]
            elif (e2.pos, e3.pos) == (e1.pos + 1, e1.pos):
                new = (L(e1.pos + 1),)       # [L(i), X(i+1), X(i)] -> [L(i+1)]
        elif e1.kind == CROSSING and e2.kind == CROSSING and e3.kind == RIGHT_CUSP:
            if (e1.pos, e2.pos) == (e3.pos, e3.pos - 1):
                new = (R(e3.pos - 1),)       # [X(i+1), X(i), R(i+1)] -> [R(i)]
            elif (e1.pos, e2.pos) == (e3.pos, e3.pos + 1):
                new = (R(e3.pos + 1),)       # [X(i), X(i+1), R(i)] -> [R(i+1)]
        if new is None:
            raise PatternMismatch(f"no cusp-through-strand pattern at {move.k}")
        cusp_old = move.k if new[0].kind == LEFT_CUSP else move.k + 2
        return _rewrite(front, move.k, move.k + 3, new, [(cusp_old, move.k)])

    if isinstance(move, CuspPassExpand):
        (ev,) = _window(front, move.k, 1)
        n_in = front.profile[move.k]
        if ev.kind == LEFT_CUSP:
            if move.up:
                # [L(j)] -> [L(j-1), X(j), X(j-1)]; strand at j-1 required
                if ev.pos < 2:
                    raise BadLocus("no strand above the cusp to pass")
                new = (L(ev.pos - 1), X(ev.pos), X(ev.pos - 1))
            else:
                # [L(j)] -> [L(j+1), X(j), X(j+1)]; strand at j required
                if ev.pos > n_in:
                    raise BadLocus("no strand below the cusp to pass")
                new = (L(ev.pos + 1), X(ev.pos), X(ev.pos + 1))
        elif ev.kind == RIGHT_CUSP:
            if move.up:
                # [R(j)] -> [X(j-1), X(j), R(j-1)]; strand at j-1 required
                if ev.pos < 2:
                    raise BadLocus("no strand above the cusp to pass")
                new = (X(ev.pos - 1), X(ev.pos), R(ev.pos - 1))
            else:
                # [R(j)] -> [X(j+1), X(j), R(j+1)]; strand at j+2 required
                if ev.pos + 2 > n_in:
                    raise BadLocus("no strand below the cusp to pass")
                new = (X(ev.pos + 1), X(ev.pos), R(ev.pos + 1))
        else:
            raise PatternMismatch(f"event {move.k} is not a cusp")
        survivor = move.k if ev.kind == LEFT_CUSP else move.k + 2
        return _rewrite(front, move.k, move.k + 1, new, [(move.k, survivor)])

    if isinstance(move, FishAdd):
        n = front.profile[move.k] if move.k <= len(events) else -1
        if not (0 <= move.k <= len(events)):
            raise BadLocus(f"insertion index {move.k} out of range")
        if not (1 <= move.p <= n):
            raise BadLocus(f"no strand {move.p} at slice {move.k}")
        p = move.p
        new = (L(p), X(p + 1), R(p)) if move.above else (L(p + 1), X(p), R(p + 1))
        return _rewrite(front, move.k, move.k, new, [])

    if isinstance(move, FishDel):
        e1, e2, e3 = _window(front, move.k, 3)
        if e1.kind == LEFT_CUSP and e2.kind == CROSSING and e3.kind == RIGHT_CUSP \
                and e3.pos == e1.pos and e2.pos == e1.pos + 1:
            pass  # above-form
        elif e1.kind == LEFT_CUSP and e2.kind == CROSSING and e3.kind == RIGHT_CUSP \
                and e3.pos == e1.pos and e2.pos == e1.pos - 1:
            pass  # below-form
        else:
            raise PatternMismatch(f"no swallowtail pattern at {move.k}")
        return _rewrite(front, move.k, move.k + 3, (), [])

    if isinstance(move, FoldAdd):
        if not (0 <= move.k < len(events)):
            raise BadLocus(f"no event at index {move.k}")
        cap = events[move.k]
        p = move.p
        if cap.kind != RIGHT_CUSP or cap.pos != p:
            raise PatternMismatch(
                f"fold at {move.k} needs the capping cusp R({p}) there")
        new = (L(p + 2), L(p + 4), X(p + 3), X(p + 1), R(p), R(p))
        return _rewrite(front, move.k, move.k, new, [])

    if isinstance(move, FoldDel):
        e = _window(front, move.k, 7)
        p = e[4].pos
        want = (L(p + 2), L(p + 4), X(p + 3), X(p + 1), R(p), R(p), R(p))
        if e != want:
            raise PatternMismatch(f"no finger-fold pattern at {move.k}")
        return _rewrite(front, move.k, move.k + 6, (), [])

    if isinstance(move, Birth):
        if not (0 <= move.k <= len(events)):
            raise BadLocus(f"insertion index {move.k} out of range")
        n = front.profile[move.k]
        if not (1 <= move.p <= n + 1):
            raise BadLocus(f"birth position {move.p} illegal with {n} strands")
        return _rewrite(front, move.k, move.k, (L(move.p), R(move.p)), [])

    if isinstance(move, Saddle):
        a, b = _window(front, move.k, 2)
        if not (a.kind == RIGHT_CUSP and b.kind == LEFT_CUSP and a.pos == b.pos):
            raise PatternMismatch(f"saddle needs an adjacent [R(i), L(i)] pair at {move.k}")
        i = a.pos
        sm = orient(front)
        for p in (i, i + 1):
            if sm.dir_of(move.k, p) != sm.dir_of(move.k + 2, p):
                raise OrientationObstruction(
                    f"saddle at {move.k} reconnects strand {p} against its direction")
        return _rewrite(front, move.k, move.k + 2, (), [])

    if isinstance(move, StabilizeFront):
        if move.sign not in (1, -1):
            raise BadLocus("stabilization sign must be +1 or -1")
        if not (0 < move.k < len(events) + 1):
            raise BadLocus(f"no slice {move.k} to stabilize in")
        n = front.profile[move.k]
        if not (1 <= move.p <= n):
            raise BadLocus(f"no strand {move.p} at slice {move.k}")
        d = orient(front).dir_of(move.k, move.p)
        p = move.p
        going_right = d == RIGHTWARD
        if (move.sign == 1) == going_right:
            new = (L(p + 1), R(p))
        else:
            new = (L(p), R(p + 1))
        return _rewrite(front, move.k, move.k, new, [])

    raise PatternMismatch(f"unknown move {move!r}")


def apply_move_mapped(front: FrontDiagram, move: Move):
    """Apply one elementary move.

    Returns ``(front, delta, index_map)`` where ``index_map`` sends surviving
    old event indices to their new positions.  The move's invariant deltas
    are recomputed from scratch and checked against the move family's table;
    a mismatch is an engine bug surfaced as :class:`InvalidResult`.
    """
    tb0, r0, c0 = thurston_bennequin(front), rotation(front), front.component_count
    out, index_map = _apply_raw(front, move)
    delta = MoveDelta(
        dtb=thurston_bennequin(out) - tb0,
        dr=rotation(out) - r0,
        dchi=1 if isinstance(move, Birth) else -1 if isinstance(move, Saddle) else 0,
        dcomponents=out.component_count - c0,
    )
    family = move_family(move)
    if family in EXPECTED_DELTAS:
        want_tb, want_r, _ = EXPECTED_DELTAS[family]
        if (delta.dtb, delta.dr) != (want_tb, want_r):
            raise InvalidResult(
                f"{family} move produced deltas (dtb={delta.dtb}, dr={delta.dr})")
        if family == "isotopy" and delta.dcomponents != 0:
            raise InvalidResult("isotopy move changed the component count")
    else:  # front stabilization
        if (delta.dtb, delta.dr) != (-1, move.sign):
            raise InvalidResult(
                f"stabilization produced deltas (dtb={delta.dtb}, dr={delta.dr})")
    return out, delta, index_map


def apply_move(front: FrontDiagram, move: Move):
    """Apply one elementary move; returns ``(front, delta)``."""
    out, delta, _ = apply_move_mapped(front, move)
    return out, delta


def stabilize_front(front: FrontDiagram, locus: tuple[int, int], sign: int) -> FrontDiagram:
    """Insert a zig-zag on the strand segment ``locus = (slice, pos)``.

    tb drops by one; rotation changes by ``sign`` (S+ raises it).
    """
    s, p = locus
    out, _, _ = apply_move_mapped(front, StabilizeFront(s, p, sign))
    return out


def double_stabilize(front: FrontDiagram, locus: tuple[int, int]) -> FrontDiagram:
    """Insert an adjacent S+S- pair (one zig-zag of each sign, stacked)."""
    s, p = locus
    mid = stabilize_front(front, locus, -1)
    # the stabilized strand re-emerges at the same position two events later
    return stabilize_front(mid, (s + 2, p), +1)


# --- slide normalization --------------------------------------------------------

def slide_normalize(front: FrontDiagram):
    """Canonical event order: bubble commuting adjacent events so that the
    higher footprint comes first.  Idempotent; pure Slide moves."""
    moves = []
    cur = front
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(cur.events) - 1:
            a, b = cur.events[k], cur.events[k + 1]
            fa, fb = _footprint_first(a), _footprint_second(b)
            if fb[1] < fa[0]:  # second strictly above first: swap
                cur, _, _ = apply_move_mapped(cur, Slide(k))
                moves.append(Slide(k))
                changed = True
            k += 1
    return cur, moves


def normal_form(front: FrontDiagram) -> FrontDiagram:
    return slide_normalize(front)[0]


def fronts_equal_up_to_slides(f1: FrontDiagram, f2: FrontDiagram) -> bool:
    n1, n2 = normal_form(f1), normal_form(f2)
    return n1.events == n2.events and n1.orientations == n2.orientations


# --- route stepping -------------------------------------------------------------

def route_step(ev: SliceEvent, gap: int):
    """Legal tip gaps after carrying a right-cusp tip in ``gap`` past ``ev``.

    Returns a tuple of reachable gaps (empty when blocked).  The head-on
    left-cusp case returns both dodge outcomes.
    """
    p = ev.pos
    if ev.kind == CROSSING:
        return () if gap == p else (gap,)
    if ev.kind == LEFT_CUSP:
        if gap <= p - 2:
            return (gap,)
        if gap == p - 1:
            return (gap, gap + 2)
        return (gap + 2,)
    # right cusp
    if gap == p:
        return ()
    if gap <= p - 1:
        return (gap,)
    return (gap - 2,)


# --- macro expansion -------------------------------------------------------------

def _transport_tip(front: FrontDiagram, rc: int, lc: int, route,
                   skip_indices=frozenset()):
    """Plan the move sequence carrying the right cusp at ``rc`` up to the
    left cusp at ``lc`` along a staircase route.

    Route items: an ``int`` is a horizontal step (the tip gap after passing
    the next corridor event); the strings ``"u"``/``"d"`` are vertical steps
    (the tip dives through the strand above/below, trading two cancelling
    crossings with it).  Events whose ORIGINAL index is in ``skip_indices``
    (compiler-inserted material) are passed silently with the forced gap.
    Returns (moves, final front, tip index, lc index, full route).
    """
    if not (0 <= rc < len(front.events) and front.events[rc].kind == RIGHT_CUSP):
        raise PatternMismatch(f"event {rc} is not a right cusp")
    if not (0 <= lc < len(front.events) and front.events[lc].kind == LEFT_CUSP):
        raise PatternMismatch(f"event {lc} is not a left cusp")
    if rc >= lc:
        raise RouteBlocked("the right cusp must precede the left cusp")
    cur = front
    tip = rc
    lc_cur = lc
    moves: list[Move] = []
    full: list = []
    route = list(route)
    ri = 0
    # original index of each event currently after the tip, for skip lookups
    orig = list(range(len(front.events)))
    while True:
        vertical = ri < len(route) and route[ri] in ("u", "d")
        if tip + 1 >= lc_cur and not vertical:
            break
        if vertical:
            item = route[ri]
            ri += 1
            mv: Move = CuspPassExpand(tip, up=(item == "u"))
            try:
                cur, _, imap = apply_move_mapped(cur, mv)
            except (BadLocus, PatternMismatch) as exc:
                raise RouteBlocked(f"vertical step {item!r}: {exc}") from exc
            moves.append(mv)
            full.append(item)
            orig[tip:tip] = [None, None]
            tip = imap[tip]
            lc_cur += 2
            continue
        ev = cur.events[tip + 1]
        tip_ev = cur.events[tip]
        gap = tip_ev.pos - 1
        skipped = orig[tip + 1] is None or orig[tip + 1] in skip_indices
        options = route_step(ev, gap)
        if not options:
            raise RouteBlocked(
                f"tip in gap {gap} cannot pass {ev} (event {tip + 1})")
        if skipped:
            want = options[0]
        else:
            if ri >= len(route):
                raise RouteBlocked("route shorter than the corridor")
            want = route[ri]
            ri += 1
            if want not in options:
                raise RouteBlocked(
                    f"route gap {want} unreachable past {ev} (legal: {options})")
        head_on = ev.kind == LEFT_CUSP and gap == ev.pos - 1
        if head_on:
            mv = Dodge(tip, tip_above=(want == gap))
        else:
            mv = Slide(tip)
        cur, _, imap = apply_move_mapped(cur, mv)
        moves.append(mv)
        orig[tip], orig[tip + 1] = orig[tip + 1], orig[tip]
        new_gap = cur.events[tip + 1].pos - 1
        if new_gap != want:
            raise RouteBlocked(
                f"transport landed in gap {new_gap}, route says {want}")
        full.append(new_gap)
        tip += 1
    if not skip_indices and ri != len(route):
        raise RouteBlocked("route longer than the corridor")
    if cur.events[tip].pos != cur.events[lc_cur].pos:
        raise RouteBlocked(
            f"tip gap {cur.events[tip].pos - 1} does not meet the left cusp "
            f"gap {cur.events[lc_cur].pos - 1}")
    return moves, cur, tip, lc_cur, full


def _find_adjacent_zigzag(front: FrontDiagram, rc: int):
    """Zig-zag pair adjacent to (feeding) the cusp at ``rc``.

    When the cusp is itself a zig-zag's right cusp (a re-targeted pinch
    endpoint), its own birth partner directly before it is skipped.
    Returns the pair's (l_index, r_index) or None.
    """
    cusp = front.events[rc]
    if cusp.kind != RIGHT_CUSP:
        return None
    j = rc - 1
    if j >= 0 and front.events[j].kind == LEFT_CUSP \
            and abs(front.events[j].pos - cusp.pos) == 1:
        j -= 1  # the cusp's own zig-zag partner
    if j < 1:
        return None
    ez_l, ez_r = front.events[j - 1], front.events[j]
    if ez_l.kind != LEFT_CUSP or ez_r.kind != RIGHT_CUSP:
        return None
    if abs(ez_l.pos - ez_r.pos) != 1:
        return None
    strand = min(ez_l.pos, ez_r.pos)  # the zig-zag rides this strand
    if strand in (cusp.pos, cusp.pos + 1):
        return (j - 1, j)
    return None


def expand_macro(front: FrontDiagram, macro: Macro) -> list[Move]:
    """Expand a macro into elementary moves, valid for sequential replay."""
    if isinstance(macro, GeneralizedPinch):
        moves, cur, tip, _, _ = _transport_tip(front, macro.rc, macro.lc, macro.route)
        _probe_saddle(cur, tip)
        return moves + [Saddle(tip)]

    if isinstance(macro, FixFraming):
        if not (0 <= macro.rc < len(front.events)) or front.events[macro.rc].kind != RIGHT_CUSP:
            raise PatternMismatch(f"event {macro.rc} is not a right cusp")
        if _find_adjacent_zigzag(front, macro.rc) is None:
            raise MissingZigZag(f"cusp at {macro.rc} has no adjacent zig-zag")
        return []  # pure re-targeting; the enclosing pinch realizes the half twist

    if isinstance(macro, TopStab):
        loc = find_stacked_pair(front, macro.component)
        if loc is None:
            raise MissingZigZag(
                f"component {macro.component} carries no adjacent S+S- pair")
        k, p, mirrored = loc
        # First saddle splits off a small oval; the oval's cap then dives
        # through the strand, meets a fresh swallowtail cusp-to-cusp, and the
        # second saddle re-absorbs it.  Cusp-pass and fish cancel afterwards.
        return [
            Saddle(k + 1),
            CuspPassExpand(k + 1, up=mirrored),
            FishAdd(k + 4, p, above=mirrored),
            Saddle(k + 3),
            CuspPass(k),
            FishDel(k),
        ]

    raise PatternMismatch(f"unknown macro {macro!r}")


def _probe_saddle(front: FrontDiagram, k: int) -> None:
    """Raise the saddle's own error early if the pair at ``k`` cannot close."""
    a, b = front.events[k], front.events[k + 1]
    if not (a.kind == RIGHT_CUSP and b.kind == LEFT_CUSP and a.pos == b.pos):
        raise RouteBlocked(f"transport did not produce a saddle pattern at {k}")
    sm = orient(front)
    for p in (a.pos, a.pos + 1):
        if sm.dir_of(k, p) != sm.dir_of(k + 2, p):
            raise OrientationObstruction(
                f"pinch reconnects strand {p} against its direction")


def find_stacked_pair(front: FrontDiagram, component: int):
    """Locate an adjacent stacked S+S- zig-zag pair on the given component.

    Matches ``[L(p), R(p+1), L(p+1), R(p)]`` (zig-zags riding a strand from
    above; ``p`` is the strand's final position) or the vertical mirror
    ``[L(p+1), R(p), L(p), R(p+1)]`` (strand at ``p``, zig-zags below).
    Returns ``(event_index, p, mirrored)`` or None.
    """
    ev = front.events
    for k in range(len(ev) - 3):
        a, b, c, d = ev[k:k + 4]
        if (a.kind, b.kind, c.kind, d.kind) != (LEFT_CUSP, RIGHT_CUSP, LEFT_CUSP, RIGHT_CUSP):
            continue
        if (b.pos, c.pos, d.pos) == (a.pos + 1, a.pos + 1, a.pos):
            k_, p, mirrored = k, a.pos, False
        elif (b.pos, c.pos, d.pos) == (a.pos - 1, a.pos - 1, a.pos):
            k_, p, mirrored = k, a.pos - 1, True
        else:
            continue
        if front.component_of((k_ + 1, a.pos)) == component:
            return (k_, p, mirrored)
    return None
