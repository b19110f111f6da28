"""Exception hierarchy for the front/cobordism engine.

Every structural failure raises a subclass of :class:`EngineError` carrying
enough locus data (event index, strand position) to pinpoint the offence.
Validation entry points catch these and convert them into report objects;
everything else lets them propagate.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""


# --- front structure ---------------------------------------------------------

class FrontError(EngineError):
    """A slice word violates a structural invariant."""

    def __init__(self, message: str, event_index: int | None = None):
        super().__init__(message)
        self.event_index = event_index


class NegativeStrandCount(FrontError):
    pass


class NonzeroFinalCount(FrontError):
    pass


class PositionOutOfRange(FrontError):
    pass


class UnknownComponent(EngineError):
    pass


# --- moves -------------------------------------------------------------------

class MoveError(EngineError):
    pass


class PatternMismatch(MoveError):
    """The move's local pattern does not match the word at the locus."""


class OrientationObstruction(MoveError):
    """Saddle attempted on strands whose directions do not reconnect."""


class BadLocus(MoveError):
    pass


class InvalidResult(MoveError):
    """Internal consistency failure; should be unreachable."""


class RouteBlocked(MoveError):
    """A pinch route intersects the front or takes an illegal grid step."""


class MissingZigZag(MoveError):
    pass


# --- certificates ------------------------------------------------------------

class CertificateError(EngineError):
    pass


class MarkerConsumed(CertificateError):
    """The threaded zig-zag cannot be commuted off a move locus."""


class BadMarker(CertificateError):
    pass


class BoundaryMismatch(CertificateError):
    pass


class WitnessInvalid(CertificateError):
    pass


class MacroExpansionError(CertificateError):
    def __init__(self, message: str, move_index: int | None = None):
        super().__init__(message)
        self.move_index = move_index


# --- ribbon presentations ----------------------------------------------------

class PresentationError(EngineError):
    pass


class EmptyBottom(PresentationError):
    pass


class InvalidPermutation(PresentationError):
    pass


class PreconditionViolated(PresentationError):
    pass


class TransportObstruction(PresentationError):
    pass


# --- oracle / io -------------------------------------------------------------

class TooLarge(EngineError):
    """Crossing count exceeds the configured state-sum cap."""


class ParseError(EngineError):
    def __init__(self, message: str, token_index: int | None = None):
        super().__init__(message)
        self.token_index = token_index
