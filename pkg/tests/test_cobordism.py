import pytest

from legcob.cobordism import (
    CobordismCertificate,
    Ledger,
    concatenate,
    replay,
    stabilize_cobordism,
    verify,
)
from legcob.corpus import random_certificate
from legcob.errors import BadMarker, BoundaryMismatch, MacroExpansionError
from legcob.front import FrontDiagram, L, R
from legcob.moves import (
    Birth,
    Saddle,
    StabilizeFront,
    TopStab,
    double_stabilize,
    expand_macro,
    fronts_equal_up_to_slides,
)


def test_birth_certificate(oval):
    cert = CobordismCertificate(oval, (Birth(2, 1),))
    top, ledger = replay(cert)
    assert top.component_count == 2
    assert ledger == Ledger(births=1, saddles=0, chi=1, dtb=-1, dr=0)


def test_pair_of_pants(two_ovals, oval):
    cert = CobordismCertificate(two_ovals, (Saddle(1),))
    top, ledger = replay(cert)
    assert top.events == oval.events
    assert (ledger.chi, ledger.dtb) == (-1, 1)


def test_topstab_certificate(oval):
    dd = double_stabilize(oval, (1, 1))
    cert = CobordismCertificate(dd, (TopStab(0),), declared_top=oval)
    rep = verify(cert)
    assert rep.ok
    assert (rep.ledger.chi, rep.ledger.dtb, rep.ledger.dr) == (-2, 2, 0)


def test_verify_rejects_front_stabilization(oval):
    rep = verify(CobordismCertificate(oval, (StabilizeFront(1, 1, 1),)))
    assert not rep.ok and "stabilization" in rep.failure


def test_verify_reports_orientation_obstruction(two_ovals):
    bad = CobordismCertificate(two_ovals.flipped(1), (Saddle(1),))
    rep = verify(bad)
    assert not rep.ok
    assert rep.failure_index == 0
    assert "OrientationObstruction" in rep.failure


def test_verify_declared_top_mismatch(oval):
    cert = CobordismCertificate(oval, (Birth(2, 1),), declared_top=oval)
    rep = verify(cert)
    assert not rep.ok and "declared top" in rep.failure


def test_verify_component_history(two_ovals):
    cert = CobordismCertificate(two_ovals, (Saddle(1), Birth(1, 1)))
    rep = verify(cert)
    assert rep.ok
    assert rep.component_history == (2, 1, 2)


def test_replay_macro_error_carries_index(oval):
    cert = CobordismCertificate(oval, (TopStab(0),))
    with pytest.raises(MacroExpansionError) as err:
        replay(cert)
    assert err.value.move_index == 0


def test_concatenate_identity(oval):
    ident = CobordismCertificate(oval, ())
    cat = concatenate(ident, ident)
    assert verify(cat).ok
    assert replay(cat)[1] == Ledger()


def test_concatenate_birth_then_saddle(oval):
    birth = CobordismCertificate(oval, (Birth(2, 1),))
    top, _ = replay(birth)
    saddle = CobordismCertificate(top, (Saddle(1),))
    cat = concatenate(birth, saddle)
    rep = verify(cat)
    assert rep.ok and rep.ledger.chi == 0


def test_concatenate_accepts_slide_equivalent_interface():
    stacked = FrontDiagram.from_events([L(1), L(3), R(1), R(1)])
    split = FrontDiagram.from_events([L(1), R(1), L(1), R(1)])
    assert fronts_equal_up_to_slides(stacked, split)
    lower = CobordismCertificate(stacked, ())
    upper = CobordismCertificate(split, (Saddle(1),))
    cat = concatenate(lower, upper)
    assert verify(cat).ok


def test_concatenate_mismatch(oval, trefoil):
    with pytest.raises(BoundaryMismatch):
        concatenate(CobordismCertificate(oval, ()), CobordismCertificate(trefoil, ()))


def test_stabilize_identity_certificate(oval):
    ident = CobordismCertificate(oval, ())
    st = stabilize_cobordism(ident, (0, (1, 1)), +1)
    from legcob.invariants import thurston_bennequin

    assert thurston_bennequin(st.bottom) == -2
    top, _ = replay(st)
    assert top.events == st.bottom.events


def test_stabilize_bad_marker(oval):
    ident = CobordismCertificate(oval, ())
    with pytest.raises(BadMarker):
        stabilize_cobordism(ident, (0, (1, 9)), +1)
    with pytest.raises(BadMarker):
        stabilize_cobordism(ident, (5, (1, 1)), +1)


def test_stabilize_threads_moves(oval):
    cert = CobordismCertificate(oval, (Birth(2, 1), Saddle(1)))
    st = stabilize_cobordism(cert, (0, (1, 1)), +1)
    rep = verify(st)
    assert rep.ok
    assert rep.ledger.chi == 0
    # the top is the stabilized oval
    top, _ = replay(st)
    assert fronts_equal_up_to_slides(
        top, FrontDiagram.from_events([L(1), L(2), R(1), R(1)]))


def test_stabilize_then_topstab_returns_to_top(oval):
    """Stabilize twice with opposite signs, then cancel with the genus trick."""
    ident = CobordismCertificate(oval, ())
    st1 = stabilize_cobordism(ident, (0, (1, 1)), +1)
    st2 = stabilize_cobordism(st1, (0, (1, 1)), -1)
    top, _ = replay(st2)
    comp = top.component_of((1, 1))
    extended = CobordismCertificate(
        st2.bottom, st2.moves + (TopStab(comp),), declared_top=oval)
    rep = verify(extended)
    assert rep.ok
    assert rep.ledger.chi == -2


def make_marked_certificate(rng):
    """A random certificate whose bottom ends in a quiet tail oval: the two
    marker segments on the tail's upper strand are isotopic (the zig-zag
    slides across the inner birth) and no move touches the tail."""
    from legcob.errors import EngineError

    while True:
        cert = random_certificate(rng, max_moves=4,
                                  front_kw=dict(max_events=8, max_strands=5))
        tail = (L(1), L(3), R(3), R(1))
        try:
            bottom = FrontDiagram.from_events(cert.bottom.events + tail)
        except EngineError:
            continue
        marked = CobordismCertificate(bottom, cert.moves)
        if not verify(marked).ok:
            continue
        base = len(cert.bottom.events)
        comp = bottom.component_of((base + 1, 1))
        return marked, comp, (base + 1, 1), (base + 2, 1)


def test_isotopic_markers_give_equal_certificates(rng):
    """Markers joined by sliding along the strand produce slide-equal results."""
    for _ in range(12):
        cert, comp, m1, m2 = make_marked_certificate(rng)
        out1 = stabilize_cobordism(cert, (comp, m1), +1)
        out2 = stabilize_cobordism(cert, (comp, m2), +1)
        t1, l1 = replay(out1)
        t2, l2 = replay(out2)
        assert l1 == l2
        assert fronts_equal_up_to_slides(out1.bottom, out2.bottom)
        assert fronts_equal_up_to_slides(t1, t2)


def test_random_certificates_verify(rng):
    for _ in range(120):
        cert = random_certificate(rng, max_moves=6,
                                  front_kw=dict(max_events=8, max_strands=5))
        rep = verify(cert)
        assert rep.ok, rep
        assert rep.ledger.dtb == -rep.ledger.chi
        assert rep.ledger.dr == 0


def test_macro_vs_expanded_replay_agree(oval):
    dd = double_stabilize(oval, (1, 1))
    macro_cert = CobordismCertificate(dd, (TopStab(0),))
    flat_cert = CobordismCertificate(dd, tuple(expand_macro(dd, TopStab(0))))
    t1, l1 = replay(macro_cert)
    t2, l2 = replay(flat_cert)
    assert t1.events == t2.events and l1 == l2


def test_stabilize_commutes_with_concatenate(oval):
    """Stabilizing a stacked certificate equals stacking the stabilized
    pieces when the marker transports through the interface."""
    from legcob.cobordism import concatenate

    lower = CobordismCertificate(oval, (Birth(2, 1),))
    mid, _ = replay(lower)
    upper = CobordismCertificate(mid, (Saddle(1),))
    whole = concatenate(lower, upper)
    marker = (0, (1, 1))

    st_whole = stabilize_cobordism(whole, marker, +1)
    st_lower = stabilize_cobordism(lower, marker, +1)
    mid_st, _ = replay(st_lower)
    # the marker's zig-zag lands at the same segment of the interface
    st_upper = stabilize_cobordism(upper, (0, (1, 1)), +1)
    st_stacked = concatenate(st_lower, st_upper)

    t1, l1 = replay(st_whole)
    t2, l2 = replay(st_stacked)
    assert l1 == l2
    assert fronts_equal_up_to_slides(st_whole.bottom, st_stacked.bottom)
    assert fronts_equal_up_to_slides(t1, t2)
