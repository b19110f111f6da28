"""Textual formats: fronts, moves, certificates, presentations.

Fronts are whitespace-separated tokens ``L<i>``/``R<i>``/``X<i>`` with an
optional trailing orientation block ``@ c0=+ c1=-``.  Moves and macros are
single tokens (grammar below); certificates and presentations are JSON
documents whose leaves use the token grammars.  Event indices in tokens are
0-based; strand positions are 1-based, numbered from the top.

Move tokens::

    slide@k        dodge_u@k      dodge_d@k      r3@k        cpass@k
    cpassx_u@k     cpassx_d@k     fish_a@k:p     fish_b@k:p  unfish@k
    fold@k:p       unfold@k       birth@k:p      saddle@k
    stab+@k:p      stab-@k:p

Macro tokens::

    gpinch@rc-lc/g0,g1,u,d,...     fixframe@rc     topstab@c<id>

Every parse/print pair is bit-exact on canonical output.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cobordism import CobordismCertificate
from .errors import ParseError
from .front import FrontDiagram, SliceEvent
from .moves import (
    Birth,
    CuspPass,
    CuspPassExpand,
    Dodge,
    FishAdd,
    FishDel,
    FixFraming,
    FoldAdd,
    FoldDel,
    GeneralizedPinch,
    R3,
    Saddle,
    Slide,
    StabilizeFront,
    TopStab,
)
from .ribbon import BandSpec, RibbonPresentation

_FRONT_TOKEN = re.compile(r"^([LRX])([0-9]+)$")
_ORIENT_TOKEN = re.compile(r"^c([0-9]+)=([+-])$")


def parse_front(text: str) -> FrontDiagram:
    tokens = text.split()
    events = []
    bits: dict[int, int] = {}
    in_orient = False
    for idx, tok in enumerate(tokens):
        if tok == "@":
            if in_orient:
                raise ParseError("duplicate orientation block", idx)
            in_orient = True
            continue
        if in_orient:
            m = _ORIENT_TOKEN.match(tok)
            if not m:
                raise ParseError(f"bad orientation token {tok!r}", idx)
            bits[int(m.group(1))] = 0 if m.group(2) == "+" else 1
            continue
        m = _FRONT_TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad event token {tok!r}", idx)
        events.append(SliceEvent(m.group(1), int(m.group(2))))
    try:
        front = FrontDiagram.from_events(events)
    except Exception as exc:
        raise ParseError(f"invalid front: {exc}") from exc
    if bits:
        n = front.component_count
        if sorted(bits) != list(range(n)):
            raise ParseError(
                f"orientation block names components {sorted(bits)}, front has {n}")
        front = FrontDiagram(front.events, tuple(bits[i] for i in range(n)))
    return front


def print_front(front: FrontDiagram) -> str:
    word = " ".join(f"{e.kind}{e.pos}" for e in front.events)
    if any(front.orientations):
        orient = " ".join(f"c{i}={'-' if b else '+'}"
                          for i, b in enumerate(front.orientations))
        return f"{word} @ {orient}"
    return word


# --- moves -------------------------------------------------------------------

def print_move(move) -> str:
    if isinstance(move, Slide):
        return f"slide@{move.k}"
    if isinstance(move, Dodge):
        return f"dodge_{'u' if move.tip_above else 'd'}@{move.k}"
    if isinstance(move, R3):
        return f"r3@{move.k}"
    if isinstance(move, CuspPass):
        return f"cpass@{move.k}"
    if isinstance(move, CuspPassExpand):
        return f"cpassx_{'u' if move.up else 'd'}@{move.k}"
    if isinstance(move, FishAdd):
        return f"fish_{'a' if move.above else 'b'}@{move.k}:{move.p}"
    if isinstance(move, FishDel):
        return f"unfish@{move.k}"
    if isinstance(move, FoldAdd):
        return f"fold@{move.k}:{move.p}"
    if isinstance(move, FoldDel):
        return f"unfold@{move.k}"
    if isinstance(move, Birth):
        return f"birth@{move.k}:{move.p}"
    if isinstance(move, Saddle):
        return f"saddle@{move.k}"
    if isinstance(move, StabilizeFront):
        return f"stab{'+' if move.sign > 0 else '-'}@{move.k}:{move.p}"
    if isinstance(move, GeneralizedPinch):
        route = ",".join(str(g) for g in move.route)
        return f"gpinch@{move.rc}-{move.lc}/{route}"
    if isinstance(move, FixFraming):
        return f"fixframe@{move.rc}"
    if isinstance(move, TopStab):
        return f"topstab@c{move.component}"
    raise ParseError(f"unserializable move {move!r}")


_MOVE_RE = re.compile(r"^([a-z3_+-]+)@(.+)$")


def parse_move(token: str):
    m = _MOVE_RE.match(token.strip())
    if not m:
        raise ParseError(f"bad move token {token!r}")
    name, arg = m.groups()
    try:
        if name == "slide":
            return Slide(int(arg))
        if name in ("dodge_u", "dodge_d"):
            return Dodge(int(arg), tip_above=name.endswith("u"))
        if name == "r3":
            return R3(int(arg))
        if name == "cpass":
            return CuspPass(int(arg))
        if name in ("cpassx_u", "cpassx_d"):
            return CuspPassExpand(int(arg), up=name.endswith("u"))
        if name in ("fish_a", "fish_b"):
            k, p = arg.split(":")
            return FishAdd(int(k), int(p), above=name.endswith("a"))
        if name == "unfish":
            return FishDel(int(arg))
        if name == "fold":
            k, p = arg.split(":")
            return FoldAdd(int(k), int(p))
        if name == "unfold":
            return FoldDel(int(arg))
        if name == "birth":
            k, p = arg.split(":")
            return Birth(int(k), int(p))
        if name == "saddle":
            return Saddle(int(arg))
        if name in ("stab+", "stab-"):
            k, p = arg.split(":")
            return StabilizeFront(int(k), int(p), 1 if name.endswith("+") else -1)
        if name == "gpinch":
            locus, route = arg.split("/") if "/" in arg else (arg, "")
            rc, lc = locus.split("-")
            items = tuple(
                g if g in ("u", "d") else int(g)
                for g in route.split(",") if g != "")
            return GeneralizedPinch(int(rc), int(lc), items)
        if name == "fixframe":
            return FixFraming(int(arg))
        if name == "topstab":
            if not arg.startswith("c"):
                raise ValueError("component argument must look like c<id>")
            return TopStab(int(arg[1:]))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad move token {token!r}: {exc}") from exc
    raise ParseError(f"unknown move kind {name!r}")


# --- certificates ------------------------------------------------------------

def certificate_to_json(cert: CobordismCertificate) -> str:
    doc = {
        "bottom": print_front(cert.bottom),
        "moves": [print_move(m) for m in cert.moves],
        "declared_top": None if cert.declared_top is None else print_front(cert.declared_top),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def certificate_from_json(text: str) -> CobordismCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad certificate JSON: {exc}") from exc
    try:
        bottom = parse_front(doc["bottom"])
        moves = tuple(parse_move(t) for t in doc["moves"])
        top = doc.get("declared_top")
    except KeyError as exc:
        raise ParseError(f"certificate missing field {exc}") from exc
    return CobordismCertificate(
        bottom, moves, None if top is None else parse_front(top))


# --- presentations -----------------------------------------------------------

def _framing_str(f: Fraction) -> str:
    f = Fraction(f)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def presentation_to_json(p: RibbonPresentation) -> str:
    doc = {
        "base": print_front(p.base),
        "births": [[k, pos] for (k, pos) in p.births],
        "bands": [
            {
                "rc": b.rc,
                "lc": b.lc,
                "route": list(b.route),
                "framing": _framing_str(b.framing),
                "label": b.label,
            }
            for b in p.bands
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def presentation_from_json(text: str) -> RibbonPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad presentation JSON: {exc}") from exc
    try:
        base = parse_front(doc["base"])
        births = tuple((int(k), int(pos)) for k, pos in doc.get("births", []))
        bands = tuple(
            BandSpec(
                rc=int(b["rc"]),
                lc=int(b["lc"]),
                route=tuple(g if g in ("u", "d") else int(g) for g in b.get("route", [])),
                framing=Fraction(b.get("framing", "0")),
                label=b.get("label", ""),
            )
            for b in doc.get("bands", [])
        )
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad presentation document: {exc}") from exc
    return RibbonPresentation(base, births, bands)
