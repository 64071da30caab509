"""Command-line entry point.

Exit codes: 0 success, 1 input error, 2 engine error (including any failed
panel key), 3 relational equation with no solution.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .documents import load_document
from .errors import InputError, NeutroError
from .report import emit_report
from .scalar import OrderMode
from .scenario import MODELS, Scenario, interval_report, load_scenario, run_scenario

EXIT_OK, EXIT_INPUT, EXIT_ENGINE, EXIT_EMPTY = 0, 1, 2, 3


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="neutromaps",
                                description="Interval fuzzy and neutrosophic map models.")
    p.add_argument("--version", action="version", version=f"neutromaps {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="parse matrix documents and report their headers")
    v.add_argument("files", nargs="+")

    iv = sub.add_parser("interval", help="interval operations")
    iv_sub = iv.add_subparsers(dest="interval_command", required=True)
    b = iv_sub.add_parser("build", help="build min/max/opt/avg from an expert panel")
    b.add_argument("--experts", nargs="+", required=True)
    b.add_argument("--order", default="usual", choices=["usual", "pseudo-real", "pseudo-neutro"])
    b.add_argument("--format", default="json", choices=["json", "md"])

    r = sub.add_parser("run", help="run a model over an expert panel")
    r.add_argument("model", choices=MODELS)
    r.add_argument("--experts", nargs="+", default=[])
    r.add_argument("--state", action="append", default=[],
                   help="initial state, e.g. '1 0 0 0 0'; repeatable")
    r.add_argument("--clamp", default=None,
                   help="comma-separated 1-based indices or labels kept on; 'none' clamps nothing")
    r.add_argument("--order", default="usual", choices=["usual", "pseudo-real", "pseudo-neutro"])
    r.add_argument("--dynamics", choices=["binary", "trinary", "weighted"], default=None)
    r.add_argument("--threshold", default="0")
    r.add_argument("--side", default=None,
                   help="domain/range (frim), row/column (faim, ibam, nbam), forward/reverse (fre)")
    r.add_argument("--rule", default="maxmin", choices=["maxmin", "maxprod"])
    r.add_argument("--retention", action="store_true",
                   help="BAM neurons keep their previous signal when the net input is zero")
    r.add_argument("--max-iters", type=int, default=1000)
    r.add_argument("--q", nargs="+", default=[], help="Q documents for solving P o Q = R")
    r.add_argument("--r", nargs="+", default=[], help="R documents for solving P o Q = R")
    r.add_argument("--format", default="json", choices=["json", "md"])
    r.add_argument("--trace", action="store_true")

    rep = sub.add_parser("report", help="run a scenario file")
    rep.add_argument("scenario")
    rep.add_argument("--format", default=None, choices=["json", "md"])
    rep.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")
    return p


def _scenario_from_args(args) -> Scenario:
    clamp = None
    if args.clamp is not None:
        clamp = () if args.clamp.lower() == "none" else tuple(
            c.strip() for c in args.clamp.split(",") if c.strip())
    data = {
        "model": args.model, "experts": args.experts, "order": args.order,
        "states": args.state, "rule": args.rule, "format": args.format, "trace": args.trace,
        "dynamics": {"threshold": args.threshold, "retention": args.retention,
                     "max_iters": args.max_iters},
    }
    if clamp is not None:
        data["dynamics"]["clamp"] = list(clamp)
    if args.dynamics:
        data["dynamics"]["kind"] = args.dynamics
    if args.side:
        data["side"] = args.side
    if args.q or args.r:
        data["q"], data["r"] = args.q, args.r
    return Scenario.from_dict(data, Path.cwd())


def _finish(report, fmt, output=None) -> int:
    text = emit_report(report, fmt)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    for failure in report.failures:
        print(f"neutromaps: {failure.key}: {failure.message}", file=sys.stderr)
    if report.failures:
        return EXIT_ENGINE
    if report.empty_solution:
        return EXIT_EMPTY
    return EXIT_OK


def _validate(files) -> int:
    code = EXIT_OK
    for name in files:
        try:
            doc = load_document(name)
        except InputError as exc:
            print(f"error {exc}", file=sys.stderr)
            code = EXIT_INPUT
            continue
        m = doc.matrix
        print(f"ok {name}: kind={doc.kind} id={doc.member_id} {m.rows}x{m.cols} scale={m.domain}")
        for note in doc.annotations:
            print(f"   note: {note}")
    return code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            return _validate(args.files)
        if args.command == "interval":
            report = interval_report(args.experts, OrderMode.parse(args.order), Path.cwd())
            return _finish(report, args.format)
        if args.command == "run":
            sc = _scenario_from_args(args)
            return _finish(run_scenario(sc), sc.report_format)
        sc = load_scenario(args.scenario)
        return _finish(run_scenario(sc), args.format or sc.report_format, args.output)
    except InputError as exc:
        print(f"neutromaps: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NeutroError as exc:
        print(f"neutromaps: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
