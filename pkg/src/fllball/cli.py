"""Command-line front end: ``fll <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analytic, martingale, metric, montecarlo, verify
from .errors import FLLError, FormulaUnavailable
from .words import parse_word, profile

WHICH = {"rho": "rho", "a": "a", "sums": "sum_s", "sums2": "sum_s2", "h": "h", "t": "t", "ball": "ball"}


def render_fraction(q: Fraction) -> str:
    return f"{q} = {float(q):.10g}"


def parse_c_grid(text: str) -> tuple[float, ...]:
    """``"0.1,0.5,1"`` or ``"start:stop:step"`` (stop inclusive)."""
    if ":" in text:
        start, stop, step = (Fraction(p) for p in text.split(":"))
        if step <= 0:
            raise argparse.ArgumentTypeError("c-grid step must be positive")
        values = []
        c = start
        while c <= stop:
            values.append(float(c))
            c += step
        return tuple(values)
    return tuple(float(p) for p in text.split(",") if p.strip())


def cmd_stats(args) -> int:
    prof = profile(parse_word(args.word, args.m))
    if args.format == "json":
        print(json.dumps({
            "rho": prof.rho, "a": prof.a, "s": list(prof.segment_lengths),
            "h": prof.h, "t": prof.t, "runs": list(prof.run_lengths),
        }))
    else:
        print(prof.render())
    return 0


def cmd_ball(args) -> int:
    w = parse_word(args.word, args.m)
    if args.radius < 1:
        raise FLLError(f"radius must be >= 1, got {args.radius}")
    if args.method in ("formula", "both") and args.radius != 1:
        raise FormulaUnavailable(f"no closed form for radius {args.radius}; use --method enumerate")
    ball = None
    if args.method in ("enumerate", "both") or args.list:
        ball = metric.fll_ball(w, args.radius)
    if args.method == "formula":
        print(analytic.ball_size_formula(w).total)
        status = 0
    elif args.method == "enumerate":
        print(len(ball))
        status = 0
    else:
        formula = analytic.ball_size_formula(w).total
        ok = formula == len(ball)
        print(f"{formula} {len(ball)} {'OK' if ok else 'MISMATCH'}")
        status = 0 if ok else 1
    if args.list:
        print(ball.to_text())
    return status


def cmd_distance(args) -> int:
    x, y = parse_word(args.x, args.m), parse_word(args.y, args.m)
    if args.method == "definitional":
        print(metric.fll_distance_definitional(x, y))
    else:
        print(metric.fll_distance(x, y))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suites(args.m, args.n_max, args.suite)
    for r in results:
        print(r.render())
    ok = all(r.passed for r in results)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_expect(args) -> int:
    value, from_formula = analytic.expectation(WHICH[args.which], args.n, args.m)
    line = render_fraction(value)
    if not from_formula:
        line += " (enumeration; outside closed-form domain)"
    print(line)
    return 0


def cmd_martingale(args) -> int:
    w = parse_word(args.word, args.m)
    method = args.method or ("formula" if w.m == 2 else "bruteforce")
    print(martingale.martingale_trace(w, method).to_csv())
    return 0


def cmd_bounds(args) -> int:
    print(martingale.tail_bound(args.n, args.m, args.c).render())
    return 0


def cmd_simulate(args) -> int:
    config = montecarlo.SimConfig(
        n=args.n,
        m=args.m,
        samples=args.samples,
        seed=args.seed,
        thresholds=args.c_grid,
        workers=args.workers or montecarlo.default_workers(),
    )
    report = montecarlo.run_simulation(config)
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out and args.out.endswith(".json") else "csv"
    text = report.to_json() if fmt == "json" else report.to_csv()
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fll", description="Fixed-length Levenshtein ball toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_m(p, required=True):
        p.add_argument("--m", type=int, required=required, default=None if required else 2, help="alphabet size")

    p = sub.add_parser("stats", help="runs and alternating segments of a word")
    p.add_argument("word")
    add_m(p)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("ball", help="size of the FLL ball around a word")
    p.add_argument("word")
    add_m(p)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--method", choices=("formula", "enumerate", "both"), default="formula")
    p.add_argument("--list", action="store_true", help="also print the members")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("distance", help="FLL distance between two words")
    p.add_argument("x")
    p.add_argument("y")
    add_m(p)
    p.add_argument("--method", choices=("lcs", "definitional"), default="lcs")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("verify", help="exhaustive conformance suites")
    add_m(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expect", help="exact expectation of a statistic")
    add_m(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=tuple(WHICH), required=True)
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("martingale", help="Doob martingale trace along a word (CSV)")
    p.add_argument("word")
    add_m(p)
    p.add_argument("--method", choices=("formula", "bruteforce"), default=None)
    p.set_defaults(func=cmd_martingale)

    p = sub.add_parser("bounds", help="Azuma tail bound for given n, m, c")
    add_m(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("simulate", help="Monte-Carlo tail frequencies vs. Azuma bounds")
    add_m(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=5000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c-grid", type=parse_c_grid, default=montecarlo.DEFAULT_C_GRID)
    p.add_argument("--workers", type=int, default=None, help="defaults to $FLL_WORKERS or 1")
    p.add_argument("--out", default=None, help="output file (stdout if omitted)")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FLLError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
