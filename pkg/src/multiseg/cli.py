"""Command-line front end.

Verdicts are data on stdout.  Exit codes report only operational outcomes:
0 ok, 1 verification failures, 2 bad input, 3 internal algorithm mismatch,
4 downset budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import (
    DEFAULT_LINE,
    Multisegment,
    ParseError,
    SpehParams,
    check_line,
    format_multisegment,
    multisegment_to_json,
    parse_multisegment,
    speh_multisegment,
)
from .criteria import (
    MWParams,
    Status,
    Verdict,
    badulescu_check,
    blm_check,
    mw_verdict,
    product_irreducible,
    rc_check,
    speh_reducible_thm71,
    speh_reducible_thm72,
)
from .diagram import render_text
from .involution import mwa_left, mwa_right, trace_left, trace_right
from .lnt import Partition, lnt_reducible, lnt_speh
from .order import DownsetBudgetExceeded, default_budget, strict_downset

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3, 4

CRITERIA = ("thm72", "thm71", "rc", "badulescu", "blm", "lnt", "mw")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def parse_quad(text: str, line: str | None = None) -> SpehParams:
    """``A,B,C,D`` with an optional ``@label`` suffix."""
    body, _, label = text.partition("@")
    try:
        nums = [int(x) for x in body.split(",")]
    except ValueError:
        raise UsageError(f"bad quadruple {text!r}") from None
    if len(nums) != 4:
        raise UsageError(f"quadruple needs four integers, got {text!r}")
    lab = label or line or DEFAULT_LINE
    try:
        return SpehParams(*nums, check_line(lab)).validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_ms(text: str) -> Multisegment:
    try:
        return parse_multisegment(text)
    except (ParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None


# --- dual --------------------------------------------------------------------

def cmd_dual(args) -> int:
    a = _parse_ms(args.multisegment)
    left = mwa_left(a) if args.algo in ("left", "both") else None
    right = mwa_right(a) if args.algo in ("right", "both") else None
    if args.algo == "both" and left != right:
        print(f"algorithm mismatch: left {left} right {right}", file=sys.stderr)
        return EXIT_MISMATCH
    result = left if left is not None else right
    out = {"input": multisegment_to_json(a), "dual": multisegment_to_json(result),
           "text": format_multisegment(result), "algo": args.algo}
    lines = [format_multisegment(result)]
    if args.trace:
        steps = trace_left(a) if args.algo != "right" else trace_right(a)
        out["traces"] = [t.to_json() for t in steps]
        for t in steps:
            used = " ".join(str(s) for s in t.used)
            lines.append(f"  {t.produced}  <- {used}  | rest {format_multisegment(t.remainder)}")
    _emit(out, args.json, "\n".join(lines))
    return EXIT_OK


# --- speh --------------------------------------------------------------------

def speh_criteria(p1: SpehParams, p2: SpehParams, which, budget: int) -> dict[str, Verdict]:
    a, b = speh_multisegment(p1), speh_multisegment(p2)
    runners = {
        "thm72": lambda: speh_reducible_thm72(p1, p2),
        "thm71": lambda: speh_reducible_thm71(p1, p2),
        "rc": lambda: rc_check(a, b),
        "badulescu": lambda: badulescu_check(a, b, budget),
        "blm": lambda: blm_check(a, b),
        "lnt": lambda: lnt_speh(p1, p2),
        "mw": lambda: mw_verdict(MWParams.from_speh(p1), MWParams.from_speh(p2)),
    }
    return {name: runners[name]() for name in which}


def cmd_speh(args) -> int:
    p1 = parse_quad(args.p1, args.line1)
    p2 = parse_quad(args.p2, args.line2)
    which = CRITERIA if args.criterion == "all" else (args.criterion,)
    verdicts = speh_criteria(p1, p2, which, args.budget)
    decided = {v.status for v in verdicts.values() if v.decided}
    agree = len(decided) <= 1
    primary = verdicts["thm72"] if "thm72" in verdicts else next(iter(verdicts.values()))
    out = {
        "p1": list(p1.quad()), "p2": list(p2.quad()), "lines": [p1.line, p2.line],
        "verdict": primary.to_json(),
        "criteria": {k: v.to_json() for k, v in verdicts.items()},
        "agreement": agree,
    }
    if len(verdicts) == 1:
        text = str(primary)
    else:
        rows = [f"{name:<10} {v}" for name, v in verdicts.items()]
        summary = (f"all criteria agree: {decided.pop().value}" if agree and decided
                   else "criteria DISAGREE" if not agree else "no criterion decided")
        text = "\n".join(rows + [summary])
    _emit(out, args.json, text)
    return EXIT_OK


def cmd_product(args) -> int:
    ps = [parse_quad(p) for p in args.p]
    v = product_irreducible(ps)
    out = {"factors": [list(p.quad()) + [p.line] for p in ps], "verdict": v.to_json()}
    text = str(v)
    if v.status is Status.REDUCIBLE:
        i, j = v.witness["pair"]
        text = f"Reducible (pair {i},{j}: {v.witness['clause']})"
    _emit(out, args.json, text)
    return EXIT_OK


def cmd_downset(args) -> int:
    b = _parse_ms(args.multisegment)
    try:
        down = strict_downset(b, args.limit)
    except DownsetBudgetExceeded as exc:
        print(f"downset budget exceeded: {exc.count} states visited (limit {exc.limit})", file=sys.stderr)
        if args.json:
            print(json.dumps({"error": "budget", "partial_count": exc.count, "limit": exc.limit}))
        return EXIT_BUDGET
    elems = sorted(down)
    if not args.strict:
        elems = sorted(elems + [b])
    out = {"input": format_multisegment(b), "strict": args.strict, "count": len(elems),
           "elements": [format_multisegment(c) for c in elems]}
    noun = "element" if len(elems) == 1 else "elements"
    text = "\n".join([f"# {len(elems)} {noun}"] + [format_multisegment(c) for c in elems])
    _emit(out, args.json, text)
    return EXIT_OK


def cmd_lnt(args) -> int:
    try:
        alpha, beta = Partition.parse(args.alpha), Partition.parse(args.beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    forms = ("hull", "witness") if args.form == "both" else (args.form,)
    verdicts = {f: lnt_reducible(alpha, args.x, beta, args.y, not args.different_lines, form=f) for f in forms}
    if len({v.status for v in verdicts.values()}) > 1:
        print("hull and witness forms disagree", file=sys.stderr)
        return EXIT_MISMATCH
    v = verdicts[forms[0]]
    out = {"alpha": list(alpha), "x": args.x, "beta": list(beta), "y": args.y, "verdict": v.to_json()}
    text = f"{v}\n  I1\\I2 = {v.witness.get('I1_minus_I2')}  I2\\I1 = {v.witness.get('I2_minus_I1')}"
    _emit(out, args.json, text)
    return EXIT_OK


# --- diagram -------------------------------------------------------------------

def cmd_diagram(args) -> int:
    blocks = []
    if args.multisegment:
        blocks.append(("", _parse_ms(args.multisegment)))
    for i, q in enumerate(args.p or [], start=1):
        p = parse_quad(q)
        label = f"p{i}" if len(args.p) > 1 or blocks else ""
        blocks.append((label, speh_multisegment(p)))
    if not blocks:
        raise UsageError("give a multisegment or at least one --p quadruple")
    if args.format == "text":
        data = render_text(blocks).encode() + b"\n"
    else:
        from .plotting import diagram_figure

        data = diagram_figure(blocks, args.format)
    if args.output:
        Path(args.output).write_bytes(data)
    elif args.format == "png":
        raise UsageError("png output needs --output")
    else:
        sys.stdout.write(data.decode())
    return EXIT_OK


# --- verify ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .verify import SUITES, Config, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        print(f"unknown suite {args.suite!r}; choose from: all, {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    cfg = Config(max_end=args.max_end, max_segments=args.max_segments, budget=args.budget,
                 seed=args.seed, random_cases=args.random_cases)
    reports = [run_suite(n, cfg, parallel=args.parallel).to_json() for n in names]
    payload = reports[0] if len(reports) == 1 else reports
    print(json.dumps(payload, indent=2, sort_keys=True))
    for r in reports:
        status = "PASS" if r["passed"] else "FAIL"
        print(f"{status} {r['suite']}: {r['cases_run']} cases, {len(r['failures'])} failures, "
              f"{r['wall_time']:.1f}s", file=sys.stderr)
    if args.plot_dir:
        _write_plots(Path(args.plot_dir), reports, cfg)
    return EXIT_OK if all(r["passed"] for r in reports) else EXIT_FAIL


def _write_plots(outdir: Path, reports, cfg) -> None:
    from .plotting import speh_verdict_figure, summary_figure
    from .verify import speh_grid

    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "verify_summary.png").write_bytes(summary_figure(reports))
    for r in reports:
        if r["suite"] != "speh-cross-validation":
            continue
        grid = [p.quad() for p in speh_grid(cfg.max_end)]
        statuses = {
            (p, q): speh_reducible_thm72(SpehParams(*p), SpehParams(*q)).status is Status.REDUCIBLE
            for p in grid for q in grid
        }
        unknown = [tuple(tuple(x) for x in f["inputs"]) for f in r["failures"] if f["check"] == "certificate-decisive"]
        (outdir / "speh_verdicts.png").write_bytes(speh_verdict_figure(grid, statuses, unknown))


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multiseg", description="Multisegment duality and Speh irreducibility tests.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dual", help="Zelevinsky dual of a multisegment")
    p.add_argument("multisegment")
    p.add_argument("--algo", choices=("left", "right", "both"), default="left")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("speh", help="irreducibility of a product of two essentially Speh representations")
    p.add_argument("--p1", required=True, metavar="A,B,C,D")
    p.add_argument("--p2", required=True, metavar="A,B,C,D")
    p.add_argument("--line1")
    p.add_argument("--line2")
    p.add_argument("--criterion", choices=CRITERIA + ("all",), default="thm72")
    p.add_argument("--budget", type=int, default=default_budget())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_speh)

    p = sub.add_parser("product", help="irreducibility of a product of several Speh factors")
    p.add_argument("--p", action="append", required=True, metavar="A,B,C,D[@line]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("downset", help="multisegments below a given one")
    p.add_argument("multisegment")
    p.add_argument("--limit", type=int, default=default_budget())
    p.add_argument("--strict", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_downset)

    p = sub.add_parser("lnt", help="interval-set test for two ladders")
    p.add_argument("--alpha", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--form", choices=("hull", "witness", "both"), default="both")
    p.add_argument("--different-lines", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lnt)

    p = sub.add_parser("diagram", help="dot-row diagram")
    p.add_argument("multisegment", nargs="?")
    p.add_argument("--p", action="append", metavar="A,B,C,D")
    p.add_argument("--format", choices=("text", "svg", "png"), default="text")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("verify", help="run property suites and print JSON reports")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-end", type=int, default=7)
    p.add_argument("--max-segments", type=int, default=5)
    p.add_argument("--budget", type=int, default=default_budget())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-cases", type=int, default=10_000)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; reports are always JSON")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--plot-dir", help="also write summary figures here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
