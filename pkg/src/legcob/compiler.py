"""Ribbon presentation -> decomposable cobordism certificate.

Two passes.  Pass 1 budgets the framing correction per band: for requested
half-integer framing ``d``, the band gets ``a = max(0, ceil(-d))`` arc
stabilizations (finger folds, one full twist each, credited -1) and
``k = 2(d + a)`` half-twist corrections (one budget zig-zag consumed each,
credited +1/2), so the realized framing is exactly ``-a + k/2 = d``.

Pass 2 stabilizes the base (the budget zig-zags become part of the bottom
front, not cobordism moves), then emits: all births, and per band the
fix-framing macros, the folds at the (re-targeted) cusp, and one
self-contained generalized pinch whose recorded route covers every event
the transported cusp passes.  The emitted certificate is verified before
being returned, and every band's realized-framing counter must equal its
request exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cobordism import CobordismCertificate, Ledger, verify
from .errors import PreconditionViolated, WitnessInvalid
from .front import FrontDiagram
from .invariants import rotation, thurston_bennequin
from .moves import (
    Birth,
    FixFraming,
    FoldAdd,
    GeneralizedPinch,
    Move,
    Saddle,
    StabilizeFront,
    TopStab,
    _transport_tip,
    apply_move_mapped,
    find_stacked_pair,
    fronts_equal_up_to_slides,
    move_family,
)
from .ribbon import RibbonPresentation, validate_presentation_structure


@dataclass(frozen=True)
class BandReport:
    label: str
    requested: Fraction
    realized: Fraction
    arc_stabilizations: int
    fixframing_uses: int
    zigzags_consumed: int


@dataclass(frozen=True)
class CompileReport:
    stabilizations_added: tuple[tuple[int, int, int], ...]  # (component, sign, count)
    fixframing_uses: int
    arc_stabilizations: tuple[int, ...]
    bands: tuple[BandReport, ...]
    final: FrontDiagram
    ledger: Ledger


def _budget(framing: Fraction) -> tuple[int, int]:
    """(arc stabilizations, fix-framing uses) realizing the framing."""
    framing = Fraction(framing)
    a = max(0, math.ceil(-framing))
    k2 = 2 * (framing + a)
    if k2.denominator != 1 or k2 < 0:
        raise PreconditionViolated(f"framing {framing} is not a half-integer")
    return a, int(k2)


class _Tracker:
    """A front with named events; tags follow every rewrite's index map."""

    def __init__(self, front: FrontDiagram):
        self.front = front
        self.tags: dict = {}

    def tag(self, name, index: int) -> None:
        self.tags[name] = index

    def has(self, name) -> bool:
        return self.tags.get(name, -1) >= 0

    def index(self, name) -> int:
        idx = self.tags.get(name, -1)
        if idx < 0:
            raise PreconditionViolated(f"event {name!r} was consumed earlier")
        return idx

    def owner_of(self, index: int):
        for name, idx in self.tags.items():
            if idx == index:
                return name
        return None

    def apply(self, move: Move, new_tags=()) -> None:
        self.front, _, imap = apply_move_mapped(self.front, move)
        self.tags = {name: imap.get(idx, -1) if idx >= 0 else -1
                     for name, idx in self.tags.items()}
        for name, idx in new_tags:
            self.tags[name] = idx


def compile_presentation(p: RibbonPresentation):
    """Compile a validated normal-form presentation; returns
    ``(certificate, report)``."""
    validate_presentation_structure(p)
    budgets = [_budget(b.framing) for b in p.bands]

    # resolve each band endpoint to its authorial identity on the start front
    probe = _Tracker(p.base)
    for i in range(len(p.base.events)):
        probe.tag(("base", i), i)
    for b, (k, pos) in enumerate(p.births):
        k_cur = probe.index(("base", k)) if k < len(p.base.events) \
            else len(probe.front.events)
        probe.apply(Birth(k_cur, pos),
                    new_tags=((("birth", b, 0), k_cur), (("birth", b, 1), k_cur + 1)))
    idents = []
    for j, band in enumerate(p.bands):
        rc_id = probe.owner_of(band.rc)
        lc_id = probe.owner_of(band.lc)
        if rc_id is None or lc_id is None:
            raise PreconditionViolated(f"band {j} endpoints are unresolvable")
        idents.append((rc_id, lc_id))

    # pass 2a: stabilize the base; the zig-zags belong to the bottom front
    run = _Tracker(p.base)
    for i in range(len(p.base.events)):
        run.tag(("base", i), i)
    stab_counts: dict[tuple[int, int], int] = {}
    for j, band in enumerate(p.bands):
        a_j, k_j = budgets[j]
        rc_id, _ = idents[j]
        if k_j == 0:
            continue
        if rc_id[0] != "base":
            raise PreconditionViolated(
                f"band {j} needs {k_j} framing zig-zags but attaches to a "
                f"birth circle; attach it to a base cusp instead")
        for t in range(k_j):
            idx = run.index(rc_id)
            cusp = run.front.events[idx]
            comp = run.front.component_of((idx, cusp.pos))
            stab_counts[(comp, +1)] = stab_counts.get((comp, +1), 0) + 1
            run.apply(StabilizeFront(idx, cusp.pos, +1),
                      new_tags=((("zz", j, t, 0), idx), (("zz", j, t, 1), idx + 1)))
    bottom = run.front

    # pass 2b: emit and simulate
    moves: list = []
    for b, (k, pos) in enumerate(p.births):
        k_cur = run.index(("base", k)) if k < len(p.base.events) else len(run.front.events)
        mv = Birth(k_cur, pos)
        moves.append(mv)
        run.apply(mv, new_tags=((("birth", b, 0), k_cur), (("birth", b, 1), k_cur + 1)))

    band_reports = []
    for j, band in enumerate(p.bands):
        a_j, k_j = budgets[j]
        rc_id, lc_id = idents[j]
        lc_cur = run.index(lc_id)
        # fix-framings re-target the pinch cusp outward through the zig-zags
        cusp_chain = [rc_id] + [("zz", j, t, 1) for t in range(k_j - 1, -1, -1)]
        for t in range(k_j):
            moves.append(FixFraming(run.index(cusp_chain[t])))
        tip_id = cusp_chain[-1]
        for _ in range(a_j):
            tip = run.index(tip_id)
            cusp = run.front.events[tip]
            mv = FoldAdd(tip, cusp.pos)
            moves.append(mv)
            run.apply(mv)
        tip = run.index(tip_id)
        lc_cur = run.index(lc_id)
        skip = {idx for name, idx in run.tags.items()
                if tip < idx < lc_cur and not _is_start_event(name)}
        if k_j:
            skip.add(run.index(rc_id))
        trans_moves, _probe, tip_end, _, gaps = _transport_tip(
            run.front, tip, lc_cur, band.route, skip_indices=skip)
        moves.append(GeneralizedPinch(tip, lc_cur, tuple(gaps)))
        for mv in trans_moves:
            run.apply(mv)
        run.apply(Saddle(tip_end))
        realized = Fraction(-a_j) + Fraction(k_j, 2)
        if realized != Fraction(band.framing):
            raise AssertionError(
                f"band {j}: realized framing {realized} != requested {band.framing}")
        band_reports.append(BandReport(
            label=band.label or f"band {j}",
            requested=Fraction(band.framing),
            realized=realized,
            arc_stabilizations=a_j,
            fixframing_uses=k_j,
            zigzags_consumed=k_j,
        ))

    cert = CobordismCertificate(bottom, tuple(moves), declared_top=run.front)
    rep = verify(cert)
    if not rep.ok:
        raise AssertionError(f"compiled certificate does not verify: {rep}")
    if rep.ledger.chi != len(p.births) - len(p.bands):
        raise AssertionError("compiled chi does not equal births - bands")
    report = CompileReport(
        stabilizations_added=tuple(
            (comp, sign, count) for (comp, sign), count in sorted(stab_counts.items())),
        fixframing_uses=sum(k for (_, k) in budgets),
        arc_stabilizations=tuple(a for (a, _) in budgets),
        bands=tuple(band_reports),
        final=run.front,
        ledger=rep.ledger,
    )
    return cert, report


def _is_start_event(name) -> bool:
    return isinstance(name, tuple) and name[0] in ("base", "birth")


# --- fixed-top pipeline ----------------------------------------------------------

def compile_with_fixed_top(p: RibbonPresentation, target: FrontDiagram, n: int,
                           witness=()):
    """Fix the top Legendrian at the cost of genus.

    Compiles ``p``, stabilizes the whole cobordism until the top can be the
    n-fold two-sign stabilization of ``target``, replays the supplied
    isotopy witness to land exactly on stacked zig-zag pairs, and cancels
    them with ``n`` genus-one macros.  The witness is verified, never
    searched for.
    """
    from .cobordism import replay, stabilize_cobordism

    cert, report = compile_presentation(p)
    top = report.final
    d_tb = thurston_bennequin(top) - thurston_bennequin(target)
    d_r = rotation(target) - rotation(top)
    m_plus2 = (d_tb + 2 * n) + d_r
    m_minus2 = (d_tb + 2 * n) - d_r
    if m_plus2 < 0 or m_minus2 < 0 or m_plus2 % 2 or m_minus2 % 2:
        raise WitnessInvalid(
            f"no stabilization budget reaches the target: tb gap {d_tb}, "
            f"r gap {d_r}, n={n}")
    m_plus, m_minus = m_plus2 // 2, m_minus2 // 2

    signs = [1] * m_plus + [-1] * m_minus
    for sign in signs:
        marker = _first_viable_marker(cert)
        if marker is None:
            raise WitnessInvalid("no strand marker can thread the certificate")
        cert = stabilize_cobordism(cert, marker, sign)

    extended = list(cert.moves)
    front, _ = replay(CobordismCertificate(cert.bottom, cert.moves))
    for idx, mv in enumerate(witness):
        if move_family(mv) != "isotopy":
            raise WitnessInvalid(f"witness move {idx} is not an isotopy move")
        try:
            front, _, _ = apply_move_mapped(front, mv)
        except Exception as exc:
            raise WitnessInvalid(f"witness move {idx} does not apply: {exc}") from exc
        extended.append(mv)
    for t in range(n):
        loc = None
        for comp in range(front.component_count):
            loc = find_stacked_pair(front, comp)
            if loc is not None:
                extended.append(TopStab(comp))
                break
        if loc is None:
            raise WitnessInvalid(
                f"round {t}: no adjacent stacked zig-zag pair on any component")
        from .moves import expand_macro

        for mv in expand_macro(front, TopStab(comp)):
            front, _, _ = apply_move_mapped(front, mv)
    if not fronts_equal_up_to_slides(front, target):
        raise WitnessInvalid("final front does not match the target up to slides")
    return CobordismCertificate(cert.bottom, tuple(extended), declared_top=target)


def _first_viable_marker(cert: CobordismCertificate):
    from .cobordism import stabilize_cobordism
    from .errors import EngineError

    bottom = cert.bottom
    for s in range(1, len(bottom.events)):
        for pos in range(1, bottom.profile[s] + 1):
            comp = bottom.component_of((s, pos))
            try:
                stabilize_cobordism(cert, (comp, (s, pos)), 1)
            except EngineError:
                continue
            return (comp, (s, pos))
    return None
