"""Smooth-topology oracle: fronts -> planar diagrams -> Kauffman bracket.

The oracle certifies that rewrites do not change the underlying smooth link:
cusps are smoothed away, crossings keep the slope-determined over-strand
(the strand descending from position ``i`` to ``i+1`` is in front), and the
bracket state sum is normalized by writhe.  All comparisons are between
polynomials produced by this same pipeline, so the global mirror convention
is internal and cannot cause false mismatches.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from ._kernels import backend_name, bracket_counts
from .errors import TooLarge
from .front import CROSSING, LEFTWARD, RIGHTWARD, FrontDiagram, next_segment, orient
from .invariants import writhe
from .laurent import LOOP_FACTOR, Laurent

DEFAULT_CROSSING_CAP = 16

# port tags within a crossing: the over-strand runs NW -> SE
_NW, _SW, _NE, _SE = 0, 1, 2, 3


@dataclass(frozen=True)
class SmoothDiagram:
    """Unoriented planar diagram data distilled from a front.

    ``match[p]`` pairs the 4*c crossing ports along the diagram's arcs;
    ``signs`` are the orientation-dependent crossing signs (used for the
    writhe correction); ``free_loops`` counts crossingless components.
    """

    crossings: int
    match: tuple[int, ...]
    signs: tuple[int, ...]
    free_loops: int
    components: int
    writhe: int


def front_to_smooth(front: FrontDiagram) -> SmoothDiagram:
    """Smooth the cusps and record the crossing structure of a valid front."""
    events = front.events
    sm = orient(front)
    crossing_index = {}
    signs = []
    for k, ev in enumerate(events):
        if ev.kind == CROSSING:
            crossing_index[k] = len(signs)
            d1, d2 = sm.dir_of(k, ev.pos), sm.dir_of(k, ev.pos + 1)
            signs.append(1 if d1 == d2 else -1)
    c = len(signs)
    match = np.full(4 * c, -1, dtype=np.int64)
    free_loops = 0
    for loop in front.components():
        # walk the loop once, collecting the port sequence it threads
        start = loop[0]
        seg, d = start, RIGHTWARD
        ports = []
        while True:
            s, p = seg
            if d == RIGHTWARD and s < len(events):
                ev = events[s]
                if ev.kind == CROSSING and p in (ev.pos, ev.pos + 1):
                    j = crossing_index[s]
                    if p == ev.pos:
                        ports.append((4 * j + _NW, 4 * j + _SE))
                    else:
                        ports.append((4 * j + _SW, 4 * j + _NE))
            elif d == LEFTWARD and s > 0:
                ev = events[s - 1]
                if ev.kind == CROSSING and p in (ev.pos, ev.pos + 1):
                    j = crossing_index[s - 1]
                    if p == ev.pos:
                        ports.append((4 * j + _NE, 4 * j + _SW))
                    else:
                        ports.append((4 * j + _SE, 4 * j + _NW))
            seg, d = next_segment(events, seg, d)
            if (seg, d) == (start, RIGHTWARD):
                break
        if not ports:
            free_loops += 1
            continue
        for (_, out_port), (in_port, _) in zip(ports, ports[1:] + ports[:1]):
            match[out_port] = in_port
            match[in_port] = out_port
    if c and (match < 0).any():
        raise AssertionError("arc matching incomplete")
    return SmoothDiagram(
        crossings=c,
        match=tuple(int(x) for x in match),
        signs=tuple(signs),
        free_loops=free_loops,
        components=front.component_count,
        writhe=writhe(front, sm),
    )


def _crossing_cap() -> int:
    return int(os.environ.get("LEGCOB_CROSSING_CAP", DEFAULT_CROSSING_CAP))


def kauffman_bracket(diagram: SmoothDiagram, cap: int | None = None,
                     backend: str | None = None) -> Laurent:
    """State-sum bracket of an unoriented diagram.

    Convention: ``<unknot> = 1`` (loop factor applied to loops-1), so the
    writhe correction in :func:`jones` normalizes the unknot to 1.
    """
    c = diagram.crossings
    cap = _crossing_cap() if cap is None else cap
    if c > cap:
        raise TooLarge(f"{c} crossings exceeds the state-sum cap {cap}")
    match = np.asarray(diagram.match, dtype=np.int64)
    counts, states = bracket_counts(match, c, backend=backend)
    if states != (1 << c):
        raise AssertionError(f"enumerated {states} states for {c} crossings")
    total = Laurent.zero()
    for na in range(counts.shape[0]):
        for nl in range(counts.shape[1]):
            m = int(counts[na, nl])
            if not m:
                continue
            loops = nl + diagram.free_loops
            term = LOOP_FACTOR ** (loops - 1)
            total = total + m * term.shift(2 * na - c)
    return total


def jones(front: FrontDiagram, cap: int | None = None, backend: str | None = None) -> Laurent:
    """Writhe-normalized bracket invariant of the front's smooth type.

    Returned in the bracket variable ``A`` (substitute ``t = A^-4`` for the
    usual normalization); invariant under every front isotopy move and under
    front stabilization.
    """
    d = front_to_smooth(front)
    bracket = kauffman_bracket(d, cap=cap, backend=backend)
    w = d.writhe
    corr = Laurent.monomial(-3 * w, 1 if w % 2 == 0 else -1)
    return corr * bracket


def active_backend() -> str:
    return backend_name()
