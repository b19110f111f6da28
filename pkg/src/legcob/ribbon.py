"""Ribbon cobordism presentations in births-then-bands normal form.

A presentation is a Legendrian base front (the chosen realization of the
bottom link), a list of birth loci, and an ordered list of framed band
specifications.  Bands attach at one right cusp and one left cusp of the
post-birth front; their routes are monotone staircase paths through the
strand-gap grid, disjoint from the front.  The band framing is a
half-integer measured relative to the canonical Legendrian approximation of
the route (0 means "pinch as routed").
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import (
    EmptyBottom,
    EngineError,
    InvalidPermutation,
    PatternMismatch,
    PreconditionViolated,
    RouteBlocked,
    TransportObstruction,
)
from .front import LEFT_CUSP, RIGHT_CUSP, FrontDiagram
from .moves import Birth, apply_move_mapped, move_family, route_step


@dataclass(frozen=True)
class BandSpec:
    rc: int                  # right-cusp event index on the post-birth front
    lc: int                  # left-cusp event index on the post-birth front
    route: tuple[int, ...]   # tip gap after each passed event between them
    framing: Fraction = Fraction(0)
    label: str = ""

    def __post_init__(self):
        f = Fraction(self.framing)
        if f.denominator not in (1, 2):
            raise PreconditionViolated(f"framing {f} is not a half-integer")
        object.__setattr__(self, "framing", f)


@dataclass(frozen=True)
class RibbonPresentation:
    base: FrontDiagram
    births: tuple[tuple[int, int], ...] = ()   # (event index, position) loci
    bands: tuple[BandSpec, ...] = ()


@dataclass(frozen=True)
class PresentationReport:
    ok: bool
    errors: tuple[str, ...] = ()

    def __str__(self):
        return "PASS" if self.ok else "FAIL: " + "; ".join(self.errors)


def start_front(p: RibbonPresentation) -> FrontDiagram:
    """Base with all births inserted (the front every band endpoint names).

    Birth loci are base-frame: ``k`` inserts just before base event ``k``
    (``k = len(base.events)`` appends); births sharing a locus stack in
    listed order.
    """
    front = p.base
    index_of_base_event = list(range(len(p.base.events)))
    for (k, pos) in p.births:
        k_cur = index_of_base_event[k] if k < len(index_of_base_event) else len(front.events)
        front, _, imap = apply_move_mapped(front, Birth(k_cur, pos))
        index_of_base_event = [imap[i] for i in index_of_base_event]
    return front


def validate_presentation_structure(p: RibbonPresentation) -> None:
    """Field-level checks; raises the first violation."""
    if len(p.base.events) == 0:
        raise EmptyBottom("the base front is empty")
    front = start_front(p)
    used: dict[int, int] = {}
    for j, band in enumerate(p.bands):
        tag = band.label or f"band {j}"
        ev = front.events
        if not (0 <= band.rc < len(ev)) or ev[band.rc].kind != RIGHT_CUSP:
            raise PreconditionViolated(f"{tag}: rc={band.rc} is not a right cusp")
        if not (0 <= band.lc < len(ev)) or ev[band.lc].kind != LEFT_CUSP:
            raise PreconditionViolated(f"{tag}: lc={band.lc} is not a left cusp")
        if band.rc >= band.lc:
            raise RouteBlocked(f"{tag}: the right cusp must precede the left cusp")
        for cusp in (band.rc, band.lc):
            if cusp in used:
                raise PreconditionViolated(
                    f"{tag}: endpoint cusp {cusp} already used by band {used[cusp]}")
            used[cusp] = j


def validate_presentation(p: RibbonPresentation) -> PresentationReport:
    """Full validation: fields, routes, and a dry compile.

    Routes are interpreted against the front at each band's execution; the
    static start-front check gives precise per-band messages, but a band
    whose corridor was reshaped by an earlier band is judged by the dry
    compile alone.
    """
    try:
        validate_presentation_structure(p)
    except EngineError as exc:
        return PresentationReport(False, (f"{type(exc).__name__}: {exc}",))
    front = start_front(p)
    static_errors = []
    for j, band in enumerate(p.bands):
        tag = band.label or f"band {j}"
        err = _check_route(front, band)
        if err:
            static_errors.append(f"{tag}: {err}")
    try:
        from .compiler import compile_presentation

        compile_presentation(p)
    except EngineError as exc:
        msgs = tuple(static_errors) + (f"{type(exc).__name__}: {exc}",)
        return PresentationReport(False, msgs)
    return PresentationReport(True)


def _check_route(front: FrontDiagram, band: BandSpec) -> str | None:
    """Static staircase check of the band's route on the given front.

    ``int`` items pass corridor events; ``"u"``/``"d"`` items step the route
    vertically through the strand above/below (the transported band dives
    through it, trading two cancelling crossings).
    """
    profile = front.profile
    gap = front.events[band.rc].pos - 1
    k = band.rc + 1
    for item in band.route:
        if item == "u":
            if gap < 1:
                return "RouteBlocked: vertical step above the whole front"
            gap -= 1
        elif item == "d":
            if gap >= profile[k]:
                return "RouteBlocked: vertical step below the whole front"
            gap += 1
        else:
            if k >= band.lc:
                return "route longer than the corridor"
            options = route_step(front.events[k], gap)
            if not options:
                return f"RouteBlocked: gap {gap} cannot pass event {k} ({front.events[k]})"
            if item not in options:
                return (f"RouteBlocked: gap {item} unreachable past event {k} "
                        f"(legal: {options})")
            gap = item
            k += 1
    if k != band.lc:
        return f"route covers {k - band.rc - 1} of {band.lc - band.rc - 1} corridor events"
    if gap != front.events[band.lc].pos - 1:
        return (f"RouteBlocked: route ends in gap {gap}, left cusp sits in gap "
                f"{front.events[band.lc].pos - 1}")
    return None


def reorder_bands(p: RibbonPresentation, permutation) -> RibbonPresentation:
    """Attach the bands in a new order; routes and endpoints are unchanged.

    Valid when every band endpoint lies on the base or a birth circle (true
    by construction here) and the reordered presentation still validates.
    """
    perm = tuple(permutation)
    if sorted(perm) != list(range(len(p.bands))):
        raise InvalidPermutation(f"{perm} is not a permutation of 0..{len(p.bands) - 1}")
    used = {}
    for j, band in enumerate(p.bands):
        for cusp in (band.rc, band.lc):
            if cusp in used:
                raise PreconditionViolated(
                    f"band {j} shares endpoint cusp {cusp} with band {used[cusp]}")
            used[cusp] = j
    out = replace(p, bands=tuple(p.bands[i] for i in perm))
    rep = validate_presentation(out)
    if not rep.ok:
        raise PreconditionViolated(f"reordered presentation invalid: {rep}")
    return out


# --- raw presentations with interleaved isotopies -------------------------------

@dataclass(frozen=True)
class RawPresentation:
    """A presentation whose item list may interleave isotopy moves between
    the births and bands."""

    base: FrontDiagram
    items: tuple  # of Birth | BandSpec | isotopy Move


def normalize(raw: RawPresentation) -> RibbonPresentation:
    """Absorb interleaved isotopy moves, yielding births-then-bands form.

    Every birth locus and band endpoint authored after an isotopy move is
    pulled back through it, which is well-defined exactly when the locus is
    disjoint from the move's window (a pure index shift).  Trailing or
    absorbed isotopies only adjust the top up to isotopy: the compiled
    ledger and smooth type are unchanged.  An entangled locus raises
    :class:`TransportObstruction`.
    """
    # Replay the raw items, naming every base and birth event; each band
    # endpoint resolves to its named event, which is then located again in
    # the normalized start front.
    front = raw.base
    tags: dict = {("base", i): i for i in range(len(raw.base.events))}

    def owner(idx: int):
        for name, at in tags.items():
            if at == idx:
                return name
        return None

    def retag(imap):
        return {name: imap.get(at, -1) for name, at in tags.items()}

    births: list[tuple[int, int]] = []
    bands: list[tuple[BandSpec, object, object]] = []
    for idx, item in enumerate(raw.items):
        if isinstance(item, Birth):
            # locus in base frame: the nearest surviving base event at/after it
            base_k = None
            for i in range(len(raw.base.events) + 1):
                if i == len(raw.base.events):
                    base_k = i
                    break
                at = tags[("base", i)]
                if at >= item.k:
                    base_k = i
                    break
            births.append((base_k, item.p))
            b = len(births) - 1
            front, _, imap = apply_move_mapped(front, item)
            tags = retag(imap)
            tags[("birth", b, 0)] = item.k
            tags[("birth", b, 1)] = item.k + 1
        elif isinstance(item, BandSpec):
            rc_id, lc_id = owner(item.rc), owner(item.lc)
            if rc_id is None or lc_id is None:
                raise TransportObstruction(
                    f"band {idx} endpoint is not a base or birth cusp")
            bands.append((item, rc_id, lc_id))
        elif move_family(item) == "isotopy":
            front, _, imap = apply_move_mapped(front, item)
            tags = retag(imap)
            if any(at < 0 for at in tags.values()):
                raise TransportObstruction(
                    f"isotopy {item!r} consumed a named cusp")
        else:
            raise PatternMismatch(
                f"item {idx}: {item!r} is not allowed in a raw presentation")

    draft = RibbonPresentation(raw.base, tuple(births), ())
    start = start_front(draft)
    # locate the named events on the normalized start front
    probe_tags: dict = {("base", i): i for i in range(len(raw.base.events))}
    probe = raw.base
    for b, (k, pos) in enumerate(births):
        k_cur = probe_tags[("base", k)] if k < len(raw.base.events) else len(probe.events)
        probe, _, imap = apply_move_mapped(probe, Birth(k_cur, pos))
        probe_tags = {name: imap[at] for name, at in probe_tags.items()}
        probe_tags[("birth", b, 0)] = k_cur
        probe_tags[("birth", b, 1)] = k_cur + 1
    out_bands = []
    for band, rc_id, lc_id in bands:
        if rc_id not in probe_tags or lc_id not in probe_tags:
            raise TransportObstruction(f"band endpoint {rc_id!r} lost in normal form")
        out_bands.append(replace(band, rc=probe_tags[rc_id], lc=probe_tags[lc_id]))
    out = RibbonPresentation(raw.base, tuple(births), tuple(out_bands))
    rep = validate_presentation(out)
    if not rep.ok:
        raise TransportObstruction(f"normalization produced an invalid "
                                   f"presentation: {rep}")
    return out
