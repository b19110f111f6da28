"""Deterministic SVG rendering of fronts and certificate movies.

Strands are horizontal polyline runs; cusps are quadratic arcs meeting at a
tip (marked with class ``cusp``); the under-strand at a crossing is drawn
with a gap.  Certificates render as a strip of frames, one per move, each
frame the front after that move.  Output is byte-stable for a fixed spec.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cobordism import CobordismCertificate, _expand_all
from .front import LEFT_CUSP, RIGHT_CUSP, FrontDiagram
from .moves import apply_move


@dataclass(frozen=True)
class RenderSpec:
    slice_width: float = 40.0
    strand_spacing: float = 24.0
    cusp_radius: float = 14.0
    margin: float = 20.0
    stroke: str = "#1a1a66"
    stroke_width: float = 2.0
    show_labels: bool = False

    def __post_init__(self):
        if min(self.slice_width, self.strand_spacing, self.cusp_radius,
               self.margin, self.stroke_width) <= 0:
            raise ValueError("render dimensions must be positive")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _y(spec: RenderSpec, pos: int) -> float:
    return spec.margin + pos * spec.strand_spacing


def _render_front_body(front: FrontDiagram, spec: RenderSpec, x0: float) -> tuple[list[str], float]:
    """SVG path elements for one front, starting at x offset ``x0``."""
    parts: list[str] = []
    profile = front.profile
    w, r = spec.slice_width, spec.cusp_radius
    sw = f'stroke="{spec.stroke}" stroke-width="{_fmt(spec.stroke_width)}" fill="none"'
    for s in range(1, len(front.events)):
        xa = x0 + s * w
        xb = xa + w
        for p in range(1, profile[s] + 1):
            y = _y(spec, p)
            parts.append(f'<line class="strand" x1="{_fmt(xa + r)}" y1="{_fmt(y)}" '
                         f'x2="{_fmt(xb - r)}" y2="{_fmt(y)}" {sw}/>')
    for k, ev in enumerate(front.events):
        xc = x0 + (k + 1) * w
        i = ev.pos
        if ev.kind == LEFT_CUSP:
            yu, yl = _y(spec, i), _y(spec, i + 1)
            tip = (yu + yl) / 2
            parts.append(f'<path class="cusp" d="M {_fmt(xc + r)} {_fmt(yu)} '
                         f'Q {_fmt(xc - r)} {_fmt(tip)} {_fmt(xc + r)} {_fmt(yl)}" {sw}/>')
        elif ev.kind == RIGHT_CUSP:
            yu, yl = _y(spec, i), _y(spec, i + 1)
            tip = (yu + yl) / 2
            parts.append(f'<path class="cusp" d="M {_fmt(xc - r)} {_fmt(yu)} '
                         f'Q {_fmt(xc + r)} {_fmt(tip)} {_fmt(xc - r)} {_fmt(yl)}" {sw}/>')
        else:
            yu, yl = _y(spec, i), _y(spec, i + 1)
            # over strand descends; the under strand is drawn with a gap
            parts.append(f'<path class="over" d="M {_fmt(xc - r)} {_fmt(yu)} '
                         f'L {_fmt(xc + r)} {_fmt(yl)}" {sw}/>')
            dx, dy = 2 * r, yl - yu
            gx, gy = 0.30 * dx, 0.30 * dy
            parts.append(f'<path class="under" d="M {_fmt(xc - r)} {_fmt(yl)} '
                         f'L {_fmt(xc - r + gx)} {_fmt(yl - gy)}" {sw}/>')
            parts.append(f'<path class="under" d="M {_fmt(xc + r - gx)} {_fmt(yu + gy)} '
                         f'L {_fmt(xc + r)} {_fmt(yu)}" {sw}/>')
    width = (len(front.events) + 1) * w
    return parts, width


def render_front(front: FrontDiagram, spec: RenderSpec = RenderSpec()) -> str:
    body, width = _render_front_body(front, spec, 0.0)
    height = (max(front.profile) + 1) * spec.strand_spacing + 2 * spec.margin
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width + 2 * spec.margin)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width + 2 * spec.margin)} {_fmt(height)}">',
        '<g class="front">',
        *body,
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def render_certificate(cert: CobordismCertificate,
                       spec: RenderSpec = RenderSpec()) -> str:
    """Movie strip: the bottom front, then the front after each move."""
    frames = [cert.bottom]
    front = cert.bottom
    for item in cert.moves:
        for mv in _expand_all(front, item):
            front, _ = apply_move(front, mv)
        frames.append(front)
    x0 = 0.0
    parts: list[str] = []
    max_strands = 1
    for fi, frame in enumerate(frames):
        body, width = _render_front_body(frame, spec, x0)
        parts.append(f'<g class="frame" data-index="{fi}">')
        parts.extend(body)
        parts.append("</g>")
        x0 += width + spec.slice_width
        if fi < len(frames) - 1:
            parts.append(f'<line class="separator" x1="{_fmt(x0 - spec.slice_width / 2)}" '
                         f'y1="{_fmt(spec.margin)}" x2="{_fmt(x0 - spec.slice_width / 2)}" '
                         f'y2="{_fmt(spec.margin + 6 * spec.strand_spacing)}" '
                         f'stroke="#bbbbbb" stroke-width="1.00" stroke-dasharray="4,4"/>')
        max_strands = max(max_strands, max(frame.profile, default=1))
    height = (max_strands + 1) * spec.strand_spacing + 2 * spec.margin
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(x0 + 2 * spec.margin)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(x0 + 2 * spec.margin)} {_fmt(height)}">',
        *parts,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
