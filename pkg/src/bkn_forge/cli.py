"""Command-line interface: ``bkn-forge <command> ...``.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bkn import validate_l_triple
from .catalog import FAMILIES, FAMILY_RANGES, Report, run_fixtures, run_triple
from .config import RunConfig
from .recheck import recheck_report
from .serialize import InputError, decode_triple, dumps, load_json_text

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise InputError(path, f"cannot read file: {e.strerror}") from None
    return load_json_text(text, path)


def _config(args) -> RunConfig:
    return RunConfig(parallel=getattr(args, "parallel", False), hilbert=getattr(args, "hilbert", False),
                     timings=not args.no_timings, output_format=args.format)


def _emit(args, payload: dict, text: str) -> None:
    out = dumps(payload) if _config(args).output_format == "json" else text + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _report_payload(reports: list[Report], timings: bool) -> dict:
    return {"version": __version__, "status": "PASS" if all(r.passed for r in reports) else "FAIL",
            "reports": [r.to_dict(timings=timings) for r in reports]}


def _finish(args, reports: list[Report]) -> int:
    payload = _report_payload(reports, _config(args).timings)
    text = "\n".join(r.to_text() for r in reports)
    _emit(args, payload, text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_validate(args) -> int:
    g, lam = decode_triple(_read_json(args.input))
    rep = validate_l_triple(g, lam)
    payload = {"status": "PASS" if rep.ok else "FAIL", "failures": list(rep.failures),
               "lambda_on_simple_roots": rep.lambda_p}
    text = ("PASS l_triple_valid" if rep.ok else "FAIL l_triple_valid\n" + "\n".join("   " + f for f in rep.failures))
    _emit(args, payload, text)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_build(args) -> int:
    g, lam = decode_triple(_read_json(args.input))
    rep = run_triple("input", g, lam, monoid=False)
    return _finish(args, [rep])


def cmd_verify_monoid(args) -> int:
    g, lam = decode_triple(_read_json(args.input))
    rep = run_triple("input", g, lam, monoid=True, hilbert=_config(args).hilbert)
    return _finish(args, [rep])


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def cmd_example(args) -> int:
    names = list(FAMILIES) if args.name == "all" else [args.name]
    fixtures = []
    for name in names:
        if args.n is not None:
            ns = [args.n]
        elif args.range is not None:
            ns = list(range(args.range[0], args.range[1] + 1))
        else:
            lo, hi = FAMILY_RANGES[name]
            ns = list(range(lo, hi + 1))
        try:
            fixtures.extend(FAMILIES[name](n) for n in ns)
        except ValueError as e:
            raise InputError("--n/--range", str(e)) from None
    return _finish(args, run_fixtures(fixtures, config=_config(args)))


def cmd_recheck(args) -> int:
    data = _read_json(args.input)
    reports = data.get("reports", [data]) if isinstance(data, dict) else None
    if not isinstance(reports, list):
        raise InputError("$", "expected a report object")
    results = []
    for i, rep in enumerate(reports):
        if not isinstance(rep, dict):
            raise InputError(f"$.reports[{i}]", "expected a report object")
        items = recheck_report(rep)
        results.append({"name": rep.get("name", str(i)),
                        "status": "PASS" if all(x.ok for x in items) else "FAIL",
                        "items": [{"name": x.name, "status": "PASS" if x.ok else "FAIL", "detail": x.detail}
                                  for x in items]})
    ok = all(r["status"] == "PASS" for r in results)
    text = "\n".join(f"== {r['name']}: {r['status']}\n" + "\n".join(f"   {x['status']} {x['name']}" for x in r["items"])
                     for r in results)
    _emit(args, {"status": "PASS" if ok else "FAIL", "results": results}, text)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--no-timings", action="store_true", help="omit timing fields from JSON reports")

    p = argparse.ArgumentParser(prog="bkn-forge", description="BKN triples and monoid cone verification")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="validate an L-triple")
    s.add_argument("--input", required=True, help="triple JSON file ('-' for stdin)")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("build-bkn", parents=[common], help="build and verify the BKN triple")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify-monoid", parents=[common], help="compare the two monoid cones")
    s.add_argument("--input", required=True)
    s.add_argument("--hilbert", action="store_true", help="include the Hilbert basis of ξ_λ")
    s.set_defaults(func=cmd_verify_monoid)

    s = sub.add_parser("example", parents=[common], help="run catalog fixtures")
    s.add_argument("name", choices=sorted(FAMILIES) + ["all"])
    g = s.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--range", type=_parse_range, metavar="A..B")
    s.add_argument("--parallel", action="store_true", help="run fixtures in worker processes")
    s.set_defaults(func=cmd_example)

    s = sub.add_parser("recheck", parents=[common], help="re-verify certificates in a JSON report")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_recheck)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: malformed input at {e.location}: {e.message}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:  # invalid groups, e.g. from the named constructors
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
