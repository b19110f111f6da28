"""Slice-word fronts: events, validation, component tracing, orientation.

A front is a word of slice events read left to right.  Strand positions are
1-based and numbered from the top (position 1 is the topmost strand).  Event
indices are 0-based throughout the engine.  Between events, the front is a
stack of horizontal strand segments; a segment is addressed ``(slice, pos)``
where slice ``s`` is the gap after ``s`` events.

Event semantics on an incoming stack of ``n`` strands:

* ``L i`` -- left cusp, ``1 <= i <= n+1``: inserts a new strand pair at
  positions ``i`` (upper branch) and ``i+1`` (lower branch); old strands at
  positions ``>= i`` shift down by two.
* ``R i`` -- right cusp, ``1 <= i <= n-1``: the strands at ``i`` and ``i+1``
  turn around into each other; strands below shift up by two.
* ``X i`` -- crossing, ``1 <= i <= n-1``: strands ``i`` and ``i+1`` swap.
  Over/under is never stored: the strand descending from ``i`` to ``i+1``
  is in front by slope convention.

Orientation is one bit per component, measured against the canonical
traversal that starts at the component's least ``(slice, pos)`` segment and
moves rightward.  Bit 0 means the canonical traversal itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    FrontError,
    NegativeStrandCount,
    NonzeroFinalCount,
    PositionOutOfRange,
    UnknownComponent,
)

LEFT_CUSP = "L"
RIGHT_CUSP = "R"
CROSSING = "X"

RIGHTWARD = 1
LEFTWARD = -1


@dataclass(frozen=True)
class SliceEvent:
    kind: str  # one of "L", "R", "X"
    pos: int   # 1-based strand index

    def __post_init__(self):
        if self.kind not in (LEFT_CUSP, RIGHT_CUSP, CROSSING):
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.pos < 1:
            raise ValueError(f"position must be >= 1, got {self.pos}")

    def __repr__(self):
        return f"{self.kind}{self.pos}"


def L(i: int) -> SliceEvent:
    return SliceEvent(LEFT_CUSP, i)


def R(i: int) -> SliceEvent:
    return SliceEvent(RIGHT_CUSP, i)


def X(i: int) -> SliceEvent:
    return SliceEvent(CROSSING, i)


def _delta(kind: str) -> int:
    if kind == LEFT_CUSP:
        return 2
    if kind == RIGHT_CUSP:
        return -2
    return 0


def strand_profile(events: tuple[SliceEvent, ...]) -> tuple[int, ...]:
    """Strand count at every slice, raising on a structural violation."""
    counts = [0]
    n = 0
    for k, ev in enumerate(events):
        if ev.kind == LEFT_CUSP:
            if not (1 <= ev.pos <= n + 1):
                raise PositionOutOfRange(
                    f"left cusp at position {ev.pos} with {n} strands", k)
            n += 2
        else:
            if n < 2:
                raise NegativeStrandCount(
                    f"{ev.kind}{ev.pos} with only {n} strands", k)
            if not (1 <= ev.pos <= n - 1):
                raise PositionOutOfRange(
                    f"{ev.kind} at position {ev.pos} with {n} strands", k)
            if ev.kind == RIGHT_CUSP:
                n -= 2
        counts.append(n)
    if n != 0:
        raise NonzeroFinalCount(f"front ends with {n} strands", len(events))
    return tuple(counts)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    profile: tuple[int, ...]
    components: int
    error: FrontError | None = None

    def __str__(self):
        if self.ok:
            return f"OK profile={list(self.profile)} components={self.components}"
        loc = "" if self.error.event_index is None else f" at event {self.error.event_index}"
        return f"FAIL {type(self.error).__name__}{loc}: {self.error}"


def validate_front(events) -> ValidationReport:
    """Check the structural invariants of a slice word.

    Returns a report rather than raising; the first violated invariant is
    pinpointed with its event index.
    """
    events = tuple(events)
    try:
        profile = strand_profile(events)
    except FrontError as err:
        return ValidationReport(False, (), 0, err)
    loops, _, _ = _trace(events)
    return ValidationReport(True, profile, len(loops))


# --- component tracing --------------------------------------------------------

def _step_right(events, s, p):
    """Advance the traversal rightward from segment (s, p).

    Returns (segment, direction) after passing event ``s``.
    """
    ev = events[s]
    i = ev.pos
    if ev.kind == CROSSING:
        if p == i:
            return (s + 1, i + 1), RIGHTWARD
        if p == i + 1:
            return (s + 1, i), RIGHTWARD
        return (s + 1, p), RIGHTWARD
    if ev.kind == LEFT_CUSP:
        return (s + 1, p if p < i else p + 2), RIGHTWARD
    # right cusp: turn around at i/i+1
    if p == i:
        return (s, i + 1), LEFTWARD
    if p == i + 1:
        return (s, i), LEFTWARD
    return (s + 1, p if p < i else p - 2), RIGHTWARD


def _step_left(events, s, p):
    """Advance the traversal leftward from segment (s, p) past event ``s-1``."""
    ev = events[s - 1]
    i = ev.pos
    if ev.kind == CROSSING:
        if p == i:
            return (s - 1, i + 1), LEFTWARD
        if p == i + 1:
            return (s - 1, i), LEFTWARD
        return (s - 1, p), LEFTWARD
    if ev.kind == RIGHT_CUSP:
        return (s - 1, p if p < i else p + 2), LEFTWARD
    # left cusp: turn around at i/i+1
    if p == i:
        return (s, i + 1), RIGHTWARD
    if p == i + 1:
        return (s, i), RIGHTWARD
    return (s - 1, p if p < i else p - 2), LEFTWARD


@lru_cache(maxsize=4096)
def _trace(events: tuple[SliceEvent, ...]):
    """Partition segments into loops.

    Returns ``(loops, seg2comp, canon_dir)`` where ``loops`` is a tuple of
    segment tuples in canonical traversal order (components numbered by their
    least segment), ``seg2comp`` maps segment -> component id, and
    ``canon_dir`` maps segment -> direction under the bit-0 traversal.
    """
    profile = strand_profile(events)
    all_segments = [
        (s, p)
        for s in range(1, len(events))
        for p in range(1, profile[s] + 1)
    ]
    seen: set[tuple[int, int]] = set()
    raw_loops = []
    for seg0 in all_segments:
        if seg0 in seen:
            continue
        loop = []
        dirs = []
        seg, d = seg0, RIGHTWARD
        while True:
            loop.append(seg)
            dirs.append(d)
            seen.add(seg)
            s, p = seg
            seg, d = _step_right(events, s, p) if d == RIGHTWARD else _step_left(events, s, p)
            if seg == seg0:
                break
        raw_loops.append((loop, dirs))
    raw_loops.sort(key=lambda ld: min(ld[0]))
    loops = []
    seg2comp = {}
    canon_dir = {}
    for cid, (loop, dirs) in enumerate(raw_loops):
        # rotate so the canonical start (least segment) comes first, rightward
        start = loop.index(min(loop))
        loop = loop[start:] + loop[:start]
        dirs = dirs[start:] + dirs[:start]
        if dirs[0] != RIGHTWARD:
            # cannot happen: a fresh walk always starts rightward at the least
            # segment of its loop, and the least segment is visited first
            loop = [loop[0]] + loop[:0:-1]
            dirs = [RIGHTWARD] + [-d for d in dirs[:0:-1]]
        loops.append(tuple(loop))
        for seg, d in zip(loop, dirs):
            seg2comp[seg] = cid
            canon_dir[seg] = d
    return tuple(loops), seg2comp, canon_dir


@dataclass(frozen=True)
class FrontDiagram:
    """An oriented closed front: a slice word plus one orientation bit per
    component (bit against the canonical traversal)."""

    events: tuple[SliceEvent, ...]
    orientations: tuple[int, ...] = ()

    @staticmethod
    def from_events(events, orientations=None) -> "FrontDiagram":
        events = tuple(events)
        ncomp = len(_trace(events)[0])
        if orientations is None:
            orientations = (0,) * ncomp
        else:
            orientations = tuple(int(b) & 1 for b in orientations)
            if len(orientations) != ncomp:
                raise UnknownComponent(
                    f"{len(orientations)} orientation bits for {ncomp} components")
        return FrontDiagram(events, orientations)

    def __post_init__(self):
        strand_profile(self.events)

    @property
    def profile(self) -> tuple[int, ...]:
        return strand_profile(self.events)

    def strands_at(self, s: int) -> int:
        return self.profile[s]

    @property
    def component_count(self) -> int:
        return len(_trace(self.events)[0])

    def components(self):
        """Loops as tuples of segments in canonical traversal order."""
        return _trace(self.events)[0]

    def component_of(self, segment) -> int:
        seg2comp = _trace(self.events)[1]
        if segment not in seg2comp:
            raise UnknownComponent(f"no strand segment {segment}")
        return seg2comp[segment]

    def flipped(self, cid: int) -> "FrontDiagram":
        if not (0 <= cid < len(self.orientations)):
            raise UnknownComponent(f"component {cid} out of range")
        bits = list(self.orientations)
        bits[cid] ^= 1
        return FrontDiagram(self.events, tuple(bits))

    def reversed_all(self) -> "FrontDiagram":
        return FrontDiagram(self.events, tuple(b ^ 1 for b in self.orientations))


def trace_components(front: FrontDiagram):
    """Deterministic component partition (numbered by least touched segment)."""
    return front.components()


@dataclass(frozen=True)
class StrandMap:
    """Per-slice map strand position -> (component id, direction).

    ``dirs[s][p-1]`` and ``comps[s][p-1]`` describe segment ``(s, p)``;
    direction is +1 for rightward, -1 for leftward travel.
    """

    comps: tuple[tuple[int, ...], ...]
    dirs: tuple[tuple[int, ...], ...]

    def dir_of(self, s: int, p: int) -> int:
        return self.dirs[s][p - 1]

    def comp_of(self, s: int, p: int) -> int:
        return self.comps[s][p - 1]


def orient(front: FrontDiagram, choices=None) -> StrandMap:
    """Assign a direction to every strand segment.

    Flipping one component's choice bit flips exactly that loop's directions.
    """
    events = front.events
    bits = front.orientations if choices is None else tuple(int(b) & 1 for b in choices)
    loops, seg2comp, canon = _trace(events)
    if len(bits) != len(loops):
        raise UnknownComponent(
            f"{len(bits)} orientation bits for {len(loops)} components")
    profile = strand_profile(events)
    comps = []
    dirs = []
    for s in range(len(events) + 1):
        row_c = []
        row_d = []
        for p in range(1, profile[s] + 1):
            cid = seg2comp[(s, p)]
            d = canon[(s, p)]
            row_c.append(cid)
            row_d.append(d if bits[cid] == 0 else -d)
        comps.append(tuple(row_c))
        dirs.append(tuple(row_d))
    return StrandMap(tuple(comps), tuple(dirs))


def next_segment(events, seg, direction):
    """Follow a strand one step along its loop; returns (segment, direction)."""
    s, p = seg
    return _step_right(events, s, p) if direction == RIGHTWARD else _step_left(events, s, p)
