"""Classical invariants of oriented fronts.

Sign conventions, fixed once for the whole engine:

* Crossing sign: with over/under determined by slope (descending strand in
  front), a crossing is **positive iff its two strands travel the same
  horizontal direction**, negative otherwise.  This is the unique rule
  compatible with the over-strand convention; it gives writhe +3 for the
  rightward-oriented positive-braid trefoil.
* Cusp direction: a cusp is **down** when the traversal passes from its
  upper branch to its lower branch (left cusp: the arriving branch points
  leftward and is the upper one; right cusp: the arriving branch points
  rightward and is the upper one).  Otherwise it is **up**.
* ``tb = writhe - (number of right cusps)``.
* ``rotation = (down cusps - up cusps) / 2``; positive stabilization
  (``S+``) raises rotation by +1.
* Transverse push-off bookkeeping: ``sl(+) = tb - rotation`` and
  ``sl(-) = tb + rotation``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidResult
from .front import (
    CROSSING,
    LEFT_CUSP,
    LEFTWARD,
    RIGHT_CUSP,
    RIGHTWARD,
    FrontDiagram,
    StrandMap,
    orient,
)


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    rotation: int
    writhe: int
    right_cusps: int
    components: int

    @property
    def sl_plus(self) -> int:
        return self.tb - self.rotation

    @property
    def sl_minus(self) -> int:
        return self.tb + self.rotation


def crossing_sign(sm: StrandMap, slice_index: int, i: int) -> int:
    """Sign of the crossing whose incoming strands sit at (slice, i), (slice, i+1)."""
    return 1 if sm.dir_of(slice_index, i) == sm.dir_of(slice_index, i + 1) else -1


def writhe(front: FrontDiagram, sm: StrandMap | None = None) -> int:
    sm = sm or orient(front)
    w = 0
    for k, ev in enumerate(front.events):
        if ev.kind == CROSSING:
            w += crossing_sign(sm, k, ev.pos)
    return w


def cusp_is_down(front: FrontDiagram, sm: StrandMap, event_index: int) -> bool:
    ev = front.events[event_index]
    if ev.kind == LEFT_CUSP:
        return sm.dir_of(event_index + 1, ev.pos) == LEFTWARD
    if ev.kind == RIGHT_CUSP:
        return sm.dir_of(event_index, ev.pos) == RIGHTWARD
    raise InvalidResult("not a cusp event")


def thurston_bennequin(front: FrontDiagram) -> int:
    """tb computed with all crossing signs taken from the given orientations."""
    right = sum(1 for ev in front.events if ev.kind == RIGHT_CUSP)
    return writhe(front) - right


def rotation(front: FrontDiagram) -> int:
    sm = orient(front)
    down = up = 0
    for k, ev in enumerate(front.events):
        if ev.kind == CROSSING:
            continue
        if cusp_is_down(front, sm, k):
            down += 1
        else:
            up += 1
    if (down - up) % 2:
        raise InvalidResult("odd signed cusp count on a closed front")
    return (down - up) // 2


def self_linking_pushoff(front: FrontDiagram, sign: int) -> int:
    """Self-linking of the +/- transverse push-off: tb -/+ rotation."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return thurston_bennequin(front) - sign * rotation(front)


def classical_invariants(front: FrontDiagram) -> ClassicalInvariants:
    sm = orient(front)
    w = writhe(front, sm)
    right = sum(1 for ev in front.events if ev.kind == RIGHT_CUSP)
    down = up = 0
    for k, ev in enumerate(front.events):
        if ev.kind != CROSSING:
            if cusp_is_down(front, sm, k):
                down += 1
            else:
                up += 1
    return ClassicalInvariants(
        tb=w - right,
        rotation=(down - up) // 2,
        writhe=w,
        right_cusps=right,
        components=front.component_count,
    )
