import pytest
from fractions import Fraction

from legcob.errors import (
    InvalidPermutation,
    PreconditionViolated,
    TransportObstruction,
)
from legcob.front import FrontDiagram, L, R, X
from legcob.moves import Birth, double_stabilize
from legcob.ribbon import (
    BandSpec,
    RawPresentation,
    RibbonPresentation,
    normalize,
    reorder_bands,
    start_front,
    validate_presentation,
)


@pytest.fixture
def two_oval_band(oval):
    """Oval base, one birth next to it, one degenerate band joining them."""
    return RibbonPresentation(
        base=oval, births=((2, 1),),
        bands=(BandSpec(rc=1, lc=2, route=(), framing=Fraction(0)),))


def test_valid_presentation_passes(two_oval_band):
    assert validate_presentation(two_oval_band).ok


def test_empty_bottom_fails():
    p = RibbonPresentation(FrontDiagram.from_events(()), (), ())
    rep = validate_presentation(p)
    assert not rep.ok and "EmptyBottom" in rep.errors[0]


def test_blocked_route_fails(oval):
    # route through the crossing's own gap is blocked
    base = FrontDiagram.from_events([L(1), L(2), R(2), X(1), L(2), R(2), R(1)])
    p = RibbonPresentation(base, (), (BandSpec(2, 4, (1,)),))
    rep = validate_presentation(p)
    assert not rep.ok and "RouteBlocked" in rep.errors[0]


def test_endpoint_kind_checks(oval):
    p = RibbonPresentation(oval, ((2, 1),), (BandSpec(rc=0, lc=2, route=()),))
    assert not validate_presentation(p).ok
    p2 = RibbonPresentation(oval, ((2, 1),), (BandSpec(rc=1, lc=3, route=()),))
    assert not validate_presentation(p2).ok


def test_framing_must_be_half_integer(oval):
    with pytest.raises(PreconditionViolated):
        BandSpec(1, 2, (), framing=Fraction(1, 3))


def test_start_front_inserts_births(two_oval_band, two_ovals):
    assert start_front(two_oval_band).events == two_ovals.events


@pytest.fixture
def two_band_presentation(oval):
    """Stacked double zig-zag base plus two trailing ovals; one band fuses
    the ovals, the other pinches the base's own zig-zag pair."""
    base = double_stabilize(oval, (1, 1))   # [L1, L1, R2, L2, R1, R1]
    births = ((6, 1), (6, 1))               # two ovals appended at the end
    p = RibbonPresentation(
        base, births,
        bands=(BandSpec(rc=7, lc=8, route=(), framing=Fraction(0),
                        label="first"),
               BandSpec(rc=2, lc=3, route=(), framing=Fraction(0),
                        label="second")))
    return p


def test_two_band_presentation_valid(two_band_presentation):
    rep = validate_presentation(two_band_presentation)
    assert rep.ok, rep


def test_reorder_identity(two_band_presentation):
    assert reorder_bands(two_band_presentation, (0, 1)) == two_band_presentation


def test_reorder_swap_and_group_action(two_band_presentation):
    swapped = reorder_bands(two_band_presentation, (1, 0))
    assert swapped.bands[0].label == "second"
    back = reorder_bands(swapped, (1, 0))
    assert back == two_band_presentation


def test_reorder_invalid_permutation(two_band_presentation):
    with pytest.raises(InvalidPermutation):
        reorder_bands(two_band_presentation, (0, 0))


def test_reorder_shared_endpoint_rejected(oval):
    base = double_stabilize(oval, (1, 1))
    p = RibbonPresentation(
        base, ((2, 1), (4, 1)),
        bands=(BandSpec(2, 4, ()), BandSpec(2, 6, ())))
    with pytest.raises(PreconditionViolated):
        reorder_bands(p, (1, 0))


def test_normalize_no_isotopies_is_identity(two_oval_band):
    raw = RawPresentation(two_oval_band.base,
                          (Birth(2, 1), two_oval_band.bands[0]))
    assert normalize(raw) == two_oval_band


def test_normalize_isotopy_before_band(oval):
    """An isotopy before a band is absorbed; endpoints re-index through it
    and the compiled top differs only by that isotopy."""
    from legcob.moves import FishAdd

    base = double_stabilize(oval, (1, 1))  # [L1, L1, R2, L2, R1, R1]
    raw = RawPresentation(base, (
        Birth(6, 1),
        FishAdd(1, 1, True),   # decorate the strand; shifts later indices by 3
        BandSpec(rc=5, lc=6, route=(), framing=Fraction(0)),
    ))
    p = normalize(raw)
    assert p.births == ((6, 1),)
    assert (p.bands[0].rc, p.bands[0].lc) == (2, 3)
    assert validate_presentation(p).ok


def test_normalize_band_on_isotopy_cusp_obstructs(oval):
    from legcob.moves import FishAdd

    base = double_stabilize(oval, (1, 1))
    raw = RawPresentation(base, (
        FishAdd(1, 1, True),   # fish cusps are not base or birth cusps
        Birth(9, 1),
        BandSpec(rc=3, lc=9, route=(0, 0, 0, 0, 0), framing=Fraction(0)),
    ))
    with pytest.raises(TransportObstruction):
        normalize(raw)


def test_normalize_drops_trailing_isotopy(two_oval_band):
    """An isotopy after the last band only adjusts the top: it is absorbed."""
    from legcob.moves import FishAdd

    raw = RawPresentation(two_oval_band.base,
                          (Birth(2, 1), two_oval_band.bands[0], FishAdd(1, 1, True)))
    assert normalize(raw) == two_oval_band


def test_normalize_is_idempotent(two_oval_band):
    raw = RawPresentation(two_oval_band.base,
                          (Birth(2, 1), two_oval_band.bands[0]))
    p1 = normalize(raw)
    p2 = normalize(RawPresentation(p1.base,
                                   tuple(Birth(*b) for b in p1.births) + p1.bands))
    assert p1 == p2
