"""Certificates for decomposable Lagrangian cobordisms.

A certificate is a bottom front plus an ordered list of moves and macros;
replaying it bottom-to-top yields the top front and a ledger.  ``verify``
re-derives every per-move invariant delta (isotopy: all zero; birth:
dtb=-1, dchi=+1; saddle: dtb=+1, dchi=-1) and the global relations
``dtb = -chi`` and ``dr = 0``, reporting rather than raising.

Front stabilization moves are deliberately rejected by ``verify``: they are
front setup, not cobordism steps, and would break the ledger relations.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import (
    BadMarker,
    BoundaryMismatch,
    EngineError,
    MacroExpansionError,
    MarkerConsumed,
)
from .front import FrontDiagram
from .moves import (
    Birth,
    CuspPass,
    CuspPassExpand,
    Dodge,
    FishAdd,
    FishDel,
    FoldAdd,
    FoldDel,
    FixFraming,
    GeneralizedPinch,
    Move,
    R3,
    Saddle,
    Slide,
    StabilizeFront,
    TopStab,
    apply_move_mapped,
    expand_macro,
    fronts_equal_up_to_slides,
    move_family,
    normal_form,
    slide_normalize,
    stabilize_front,
)

MACRO_TYPES = (GeneralizedPinch, FixFraming, TopStab)


@dataclass(frozen=True)
class Ledger:
    births: int = 0
    saddles: int = 0
    chi: int = 0
    dtb: int = 0
    dr: int = 0

    def bumped(self, family: str, dtb: int, dr: int) -> "Ledger":
        return Ledger(
            births=self.births + (family == "birth"),
            saddles=self.saddles + (family == "saddle"),
            chi=self.chi + (1 if family == "birth" else -1 if family == "saddle" else 0),
            dtb=self.dtb + dtb,
            dr=self.dr + dr,
        )

    def __add__(self, other: "Ledger") -> "Ledger":
        return Ledger(self.births + other.births, self.saddles + other.saddles,
                      self.chi + other.chi, self.dtb + other.dtb, self.dr + other.dr)


@dataclass(frozen=True)
class CobordismCertificate:
    bottom: FrontDiagram
    moves: tuple
    declared_top: FrontDiagram | None = None


@dataclass(frozen=True)
class ReplayStep:
    move: object
    family: str
    dtb: int
    dr: int
    components: int


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    ledger: Ledger
    steps: tuple[ReplayStep, ...]
    component_history: tuple[int, ...]
    top: FrontDiagram | None
    failure_index: int | None = None
    failure: str | None = None

    def __str__(self):
        if self.ok:
            return (f"PASS births={self.ledger.births} saddles={self.ledger.saddles} "
                    f"chi={self.ledger.chi} dtb={self.ledger.dtb} dr={self.ledger.dr}")
        where = "" if self.failure_index is None else f" at move {self.failure_index}"
        return f"FAIL{where}: {self.failure}"


def _expand_all(front: FrontDiagram, item) -> list[Move]:
    """One move stays itself; a macro expands against the current front."""
    if isinstance(item, MACRO_TYPES):
        return expand_macro(front, item)
    return [item]


def replay(cert: CobordismCertificate, collect=None):
    """Expand macros, apply moves in order, accumulate the ledger.

    Returns ``(top, ledger)``; errors carry the index of the offending item.
    """
    front = cert.bottom
    ledger = Ledger()
    for idx, item in enumerate(cert.moves):
        try:
            elementary = _expand_all(front, item)
        except EngineError as exc:
            raise MacroExpansionError(f"macro {item!r}: {exc}", idx) from exc
        for mv in elementary:
            try:
                front, delta, _ = apply_move_mapped(front, mv)
            except EngineError as exc:
                exc.move_index = idx
                raise
            family = move_family(mv)
            ledger = ledger.bumped(family, delta.dtb, delta.dr)
            if collect is not None:
                collect.append(ReplayStep(mv, family, delta.dtb, delta.dr,
                                          front.component_count))
    return front, ledger


def verify(cert: CobordismCertificate) -> VerificationReport:
    """Replay with per-move delta assertions and the global ledger relations."""
    from .moves import EXPECTED_DELTAS

    front = cert.bottom
    ledger = Ledger()
    steps: list[ReplayStep] = []
    history = [front.component_count]

    def fail(idx, msg):
        return VerificationReport(False, ledger, tuple(steps), tuple(history),
                                  None, idx, msg)

    for idx, item in enumerate(cert.moves):
        try:
            elementary = _expand_all(front, item)
        except EngineError as exc:
            return fail(idx, f"macro expansion failed: {type(exc).__name__}: {exc}")
        for mv in elementary:
            if isinstance(mv, StabilizeFront):
                return fail(idx, "front stabilization is not a cobordism move")
            try:
                front, delta, _ = apply_move_mapped(front, mv)
            except EngineError as exc:
                return fail(idx, f"{type(exc).__name__}: {exc}")
            family = move_family(mv)
            want_tb, want_r, _ = EXPECTED_DELTAS[family]
            if (delta.dtb, delta.dr) != (want_tb, want_r):
                return fail(idx, f"{family} move changed (tb, r) by "
                                 f"({delta.dtb}, {delta.dr})")
            ledger = ledger.bumped(family, delta.dtb, delta.dr)
            steps.append(ReplayStep(mv, family, delta.dtb, delta.dr,
                                    front.component_count))
            history.append(front.component_count)

    if ledger.chi != ledger.births - ledger.saddles:
        return fail(None, "chi does not equal births - saddles")
    if ledger.dtb != -ledger.chi:
        return fail(None, f"tb changed by {ledger.dtb}, expected {-ledger.chi}")
    if ledger.dr != 0:
        return fail(None, f"rotation changed by {ledger.dr}")
    if cert.declared_top is not None and not fronts_equal_up_to_slides(front, cert.declared_top):
        return fail(None, "replay result does not match the declared top")
    return VerificationReport(True, ledger, tuple(steps), tuple(history), front)


def concatenate(lower: CobordismCertificate, upper: CobordismCertificate) -> CobordismCertificate:
    """Stack two certificates; the interface must agree up to slides."""
    top, _ = replay(lower)
    if not fronts_equal_up_to_slides(top, upper.bottom):
        raise BoundaryMismatch("lower top and upper bottom differ beyond slides")
    _, to_norm_lower = slide_normalize(top)
    _, to_norm_upper = slide_normalize(upper.bottom)
    # slides are involutive on their new word: replay the upper's
    # normalization backwards to land on upper.bottom exactly
    bridge: list[Move] = list(to_norm_lower)
    undo = []
    probe = normal_form(upper.bottom)
    for mv in reversed(to_norm_upper):
        undo.append(Slide(mv.k))
    for mv in undo:
        probe, _, _ = apply_move_mapped(probe, mv)
    if probe.events != upper.bottom.events:
        raise BoundaryMismatch("slide bridge reconstruction failed")
    bridge.extend(undo)
    return CobordismCertificate(
        bottom=lower.bottom,
        moves=tuple(lower.moves) + tuple(bridge) + tuple(upper.moves),
        declared_top=upper.declared_top,
    )


# --- stabilization of certificates ---------------------------------------------

def _zigzag_events(front: FrontDiagram, k: int, p: int, sign: int):
    """Word inserted by stabilize_front at ``(k, p)`` (for bookkeeping)."""
    stabbed = stabilize_front(front, (k, p), sign)
    return stabbed.events[k:k + 2], stabbed


_SHIFTERS = {
    Slide: ("k",), Dodge: ("k",), R3: ("k",), CuspPass: ("k",),
    CuspPassExpand: ("k",), FishAdd: ("k",), FishDel: ("k",),
    Birth: ("k",), Saddle: ("k",), StabilizeFront: ("k",),
}


def _move_window(front: FrontDiagram, mv: Move) -> tuple[int, int]:
    """Event-index window [a, b) the elementary move reads or rewrites."""
    if isinstance(mv, (Slide, Dodge)):
        return mv.k, mv.k + 2
    if isinstance(mv, R3):
        return mv.k, mv.k + 3
    if isinstance(mv, CuspPass):
        return mv.k, mv.k + 3
    if isinstance(mv, CuspPassExpand):
        return mv.k, mv.k + 1
    if isinstance(mv, FishDel):
        return mv.k, mv.k + 3
    if isinstance(mv, FoldDel):
        return mv.k, mv.k + 6
    if isinstance(mv, (FishAdd, FoldAdd, Birth, StabilizeFront)):
        return mv.k, mv.k
    if isinstance(mv, Saddle):
        return mv.k, mv.k + 2
    raise BadMarker(f"unknown move {mv!r}")


def _shift_move(mv: Move, delta: int) -> Move:
    return replace(mv, k=mv.k + delta)


def stabilize_cobordism(cert: CobordismCertificate, marker: tuple[int, tuple[int, int]],
                        sign: int) -> CobordismCertificate:
    """Thread a stabilization zig-zag through a certificate.

    ``marker = (component, (slice, pos))`` names a strand segment of the
    bottom front.  The new certificate starts at the stabilized bottom; every
    original move re-indexes around the zig-zag, with Slide moves inserted to
    commute the zig-zag off any overlapping locus.  If the zig-zag cannot be
    commuted clear, the marker is unrealizable: :class:`MarkerConsumed`.
    """
    comp, (k0, p0) = marker
    bottom = cert.bottom
    if not (0 < k0 <= len(bottom.events) and 1 <= p0 <= bottom.profile[k0]):
        raise BadMarker(f"no strand segment at {(k0, p0)}")
    if bottom.component_of((k0, p0)) != comp:
        raise BadMarker(f"segment {(k0, p0)} is not on component {comp}")

    new_bottom = stabilize_front(bottom, (k0, p0), sign)
    out_moves: list[Move] = []
    front = new_bottom
    z = k0  # stripped-front index of the gap the zig-zag pair occupies

    for idx, item in enumerate(cert.moves):
        base_front = _strip_zigzag(front, z)
        try:
            elementary = _expand_all(base_front, item)
        except EngineError as exc:
            raise MacroExpansionError(f"macro {item!r}: {exc}", idx) from exc
        for mv in elementary:
            a, b = _move_window(base_front, mv)
            if a < z < b:  # the move's window straddles the zig-zag: commute clear
                front, z, slides = _slide_zigzag_below(front, z, a)
                out_moves.extend(slides)
            shifted = mv if b <= z else _shift_move(mv, 2)
            front, _, imap = apply_move_mapped(front, shifted)
            out_moves.append(shifted)
            z = imap[z] if b <= z else z
            base_front = _strip_zigzag(front, z)
    return CobordismCertificate(new_bottom, tuple(out_moves), None)


def _strip_zigzag(front: FrontDiagram, z: int) -> FrontDiagram:
    """The front with the threaded zig-zag (events z, z+1) removed."""
    from .moves import _rewrite

    stripped, _ = _rewrite(front, z, z + 2, (), [])
    return stripped


def _slide_zigzag_below(front: FrontDiagram, z: int, a: int):
    """Slide the zig-zag pair left until its stripped index is <= ``a``.

    Each step commutes the pair with the event before it (two Slides).
    Raises :class:`MarkerConsumed` when the pair cannot pass.
    """
    slides: list[Move] = []
    cur = front
    pos = z
    while pos > a:
        try:
            cur2, _, _ = apply_move_mapped(cur, Slide(pos - 1))
            cur3, _, _ = apply_move_mapped(cur2, Slide(pos))
        except EngineError as exc:
            raise MarkerConsumed(
                f"zig-zag cannot be commuted past event {pos - 1}") from exc
        slides.extend([Slide(pos - 1), Slide(pos)])
        cur = cur3
        pos -= 1
    return cur, pos, slides
