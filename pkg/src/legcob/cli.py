"""Command-line driver.

Subcommands: ``invariants``, ``verify``, ``compile``, ``oracle``,
``render``, ``stabilize``, ``bench``.  Exit codes: 0 pass, 1 fail,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as bench_mod
from .cobordism import stabilize_cobordism, verify
from .compiler import compile_presentation, compile_with_fixed_top
from .errors import EngineError
from .invariants import classical_invariants
from .io import (
    certificate_from_json,
    certificate_to_json,
    parse_front,
    parse_move,
    presentation_from_json,
    print_front,
)
from .render import RenderSpec, render_certificate, render_front
from .smooth import jones


def _read(path: str) -> str:
    return Path(path).read_text()


def cmd_invariants(args) -> int:
    front = parse_front(_read(args.front_file))
    inv = classical_invariants(front)
    if args.format == "json":
        print(json.dumps({
            "tb": inv.tb, "r": inv.rotation, "sl+": inv.sl_plus,
            "sl-": inv.sl_minus, "comps": inv.components,
            "writhe": inv.writhe, "right_cusps": inv.right_cusps,
        }, sort_keys=True))
    else:
        print(f"tb={inv.tb} r={inv.rotation} sl+={inv.sl_plus} "
              f"sl-={inv.sl_minus} comps={inv.components}")
    return 0


def cmd_verify(args) -> int:
    cert = certificate_from_json(_read(args.cert_file))
    report = verify(cert)
    if args.format == "json":
        doc = {
            "ok": report.ok,
            "ledger": None if report.ledger is None else {
                "births": report.ledger.births, "saddles": report.ledger.saddles,
                "chi": report.ledger.chi, "dtb": report.ledger.dtb,
                "dr": report.ledger.dr,
            },
            "component_history": list(report.component_history),
            "failure_index": report.failure_index,
            "failure": report.failure,
            "top": None if report.top is None else print_front(report.top),
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(report)
    return 0 if report.ok else 1


def cmd_compile(args) -> int:
    pres = presentation_from_json(_read(args.presentation_file))
    try:
        if args.fixed_top:
            target = parse_front(_read(args.fixed_top))
            witness = []
            if args.witness:
                witness = [parse_move(t) for t in _read(args.witness).split()]
            cert = compile_with_fixed_top(pres, target, args.n, witness)
            report = None
        else:
            cert, report = compile_presentation(pres)
    except EngineError as exc:
        print(f"FAIL {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    out = certificate_to_json(cert)
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    if args.report and report is not None:
        doc = {
            "stabilizations_added": [list(x) for x in report.stabilizations_added],
            "fixframing_uses": report.fixframing_uses,
            "arc_stabilizations": list(report.arc_stabilizations),
            "bands": [
                {"label": b.label, "requested": str(b.requested),
                 "realized": str(b.realized),
                 "arc_stabilizations": b.arc_stabilizations,
                 "fixframing_uses": b.fixframing_uses,
                 "zigzags_consumed": b.zigzags_consumed}
                for b in report.bands
            ],
            "final": print_front(report.final),
            "ledger": {"births": report.ledger.births,
                       "saddles": report.ledger.saddles,
                       "chi": report.ledger.chi,
                       "dtb": report.ledger.dtb, "dr": report.ledger.dr},
        }
        Path(args.report).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_oracle(args) -> int:
    front = parse_front(_read(args.front_file))
    poly = jones(front)
    if args.format == "json":
        print(json.dumps({"jones_A": {str(e): c for e, c in poly.items_ascending()}},
                         sort_keys=True))
    else:
        print(poly.to_string("A"))
    return 0


def cmd_render(args) -> int:
    text = _read(args.input_file)
    spec = RenderSpec()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        if "moves" in doc:
            svg = render_certificate(certificate_from_json(text), spec)
        else:
            raise EngineError("cannot render this document")
    else:
        svg = render_front(parse_front(text), spec)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_stabilize(args) -> int:
    cert = certificate_from_json(_read(args.cert_file))
    marker = (args.component, (args.slice, args.position))
    sign = 1 if args.sign == "+" else -1
    try:
        out = stabilize_cobordism(cert, marker, sign)
    except EngineError as exc:
        print(f"FAIL {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = certificate_to_json(out)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    return bench_mod.main()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="legcob",
                                 description="Legendrian front and cobordism engine")
    ap.add_argument("--format", choices=["text", "json"], default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="classical invariants of a front file")
    p.add_argument("front_file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="verify a certificate file")
    p.add_argument("cert_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compile", help="compile a ribbon presentation")
    p.add_argument("presentation_file")
    p.add_argument("-o", "--output")
    p.add_argument("--report")
    p.add_argument("--fixed-top", help="front file for the fixed-top pipeline")
    p.add_argument("--n", type=int, default=0, help="genus budget for --fixed-top")
    p.add_argument("--witness", help="file of isotopy move tokens")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("oracle", help="smooth-type polynomial of a front file")
    p.add_argument("front_file")
    p.add_argument("--jones", action="store_true", default=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="render a front or certificate to SVG")
    p.add_argument("input_file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("stabilize", help="stabilize a certificate at a marker")
    p.add_argument("cert_file")
    p.add_argument("--component", type=int, required=True)
    p.add_argument("--slice", type=int, required=True)
    p.add_argument("--position", type=int, required=True)
    p.add_argument("--sign", choices=["+", "-"], required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("bench", help="benchmark the bracket kernels")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
