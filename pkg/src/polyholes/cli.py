"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 contract violation, 4 domain error, 5 internal invariant breach.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bounds as bd
from . import constructions as con
from . import enumeration as en
from . import verify as vf
from .errors import ConsistencyFailure, DomainError, PolyholesError
from .grid import metrics
from .io import parse, render_ascii, render_svg, serialize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 5


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _render(poly, fmt: str) -> str:
    if fmt == "ascii":
        return render_ascii(poly)
    if fmt == "svg":
        return render_svg(poly)
    return serialize(poly)


def _plotting():
    from . import plotting

    return plotting


def cmd_construct(args) -> int:
    rep = con.build(args.family, k=args.k, l=args.l, n=args.n)
    _emit(_render(rep.polyomino, args.format), args.out)
    print(rep.summary(), file=sys.stdout if args.out else sys.stderr)
    if args.figure:
        _plotting().plot_polyomino(rep.polyomino, args.figure, title=rep.summary())
    return EXIT_OK


def cmd_analyze(args) -> int:
    poly = parse(Path(args.path).read_text())
    r = metrics(poly)
    if 4 * r.n != r.p + 2 * r.b or r.p != r.p_o + r.p_h:
        raise ConsistencyFailure(f"perimeter identity broken: {r.summary()}")
    print(r.summary())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    table = en.census(args.max_n, workers=args.workers, cap=args.cap)
    _emit(table.to_csv(), args.out)
    if args.figure:
        _plotting().plot_census(table, args.figure)
    return EXIT_OK


def cmd_gtable(args) -> int:
    if args.method == "census":
        table = en.census(args.max_n, workers=args.workers, cap=args.cap)
        g = en.g_table(args.max_m, table)
        _emit(g.to_csv(), args.out)
    else:
        lines = ["m,g"]
        for m in range(1, args.max_m + 1):
            res = en.search_g(m, node_budget=args.node_budget, prune=args.prune)
            lines.append(f"{m},{res.g}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.n is not None:
        ns = [args.n]
    else:
        if args.n_min is None or args.n_max is None:
            raise DomainError("give --n, or both --n-min and --n-max")
        ns = range(args.n_min, args.n_max + 1)
    reports = [bd.bounds_report(n, lb=args.lb) for n in ns]
    lines = [",".join(bd.BoundsReport.CSV_HEADER)]
    lines += [",".join(str(v) for v in r.csv_row()) for r in reports]
    _emit("\n".join(lines) + "\n", args.out)
    if args.figure:
        _plotting().plot_bounds(reports, args.figure)
    return EXIT_OK


def cmd_verify(args) -> int:
    t = args.target
    if t == "theorem1":
        checks = vf.theorem1(args.k_max)
    elif t == "theorem2":
        ns = vf.theorem2_default_ns(args.n_min, args.n_max)
        if args.range_only:
            ns = list(range(args.n_min, args.n_max + 1))
        checks = list(vf.theorem2(ns, args.c1, args.c2))
        if args.figure:
            results = [bd.theorem2_check(n, args.c1, args.c2, build=False) for n in ns]
            _plotting().plot_theorem2(results, args.figure)
        n0 = bd.empirical_n0([bd.theorem2_check(n, args.c1, args.c2, build=False) for n in ns])
        checks.append(vf.Check("theorem2 empirical n0", n0 is not None, f"n0={n0} within scanned range"))
    elif t == "table1":
        checks = vf.table1(args.m_max, max_n=args.max_n, workers=args.workers, node_budget=args.node_budget)
    else:
        checks = vf.identities(args.samples, args.seed, args.max_n)
    ok = True
    total = 0
    for c in checks:
        print(c.line(), flush=True)
        ok &= c.passed
        total += 1
    print(f"{'PASS' if ok else 'FAIL'} {t}: {total} checks")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args) -> int:
    poly = parse(Path(args.input).read_text())
    _emit(_render(poly, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyholes", description="Polyominoes with many holes.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an extremal polyomino")
    c.add_argument("--family", required=True, choices=sorted(con.FAMILIES))
    c.add_argument("--k", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--format", default="poly-text", choices=["poly-text", "ascii", "svg"])
    c.add_argument("--out", help="write the shape here instead of stdout")
    c.add_argument("--figure", help="also save a PNG rendering")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="metrics of a poly-text file")
    a.add_argument("path")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="census of fixed polyominoes by hole count")
    e.add_argument("--max-n", type=int, required=True)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--cap", type=int, default=en.DEFAULT_CAP, help=f"refuse max-n above this (hard limit {en.HARD_CAP})")
    e.add_argument("--out")
    e.add_argument("--figure")
    e.set_defaults(func=cmd_enumerate)

    g = sub.add_parser("gtable", help="g(m), least tiles for m holes")
    g.add_argument("--max-m", type=int, required=True)
    g.add_argument("--method", choices=["census", "search"], default="census")
    g.add_argument("--max-n", type=int, default=en.DEFAULT_CAP)
    g.add_argument("--cap", type=int, default=en.DEFAULT_CAP)
    g.add_argument("--workers", type=int, default=1)
    g.add_argument("--node-budget", type=int, default=en.DEFAULT_NODE_BUDGET)
    g.add_argument("--prune", choices=sorted(en.PRUNE_MODES), default="sound")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gtable)

    b = sub.add_parser("bounds", help="p_min and upper/lower bounds on f(n)")
    b.add_argument("--n", type=int)
    b.add_argument("--n-min", type=int)
    b.add_argument("--n-max", type=int)
    b.add_argument("--lb", type=int, help="known lower bound on f(n)")
    b.add_argument("--out")
    b.add_argument("--figure")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run a check suite")
    v.add_argument("target", choices=["theorem1", "theorem2", "table1", "identities"])
    v.add_argument("--k-max", type=int, default=8)
    v.add_argument("--n-min", type=int, default=con.R_PRIME_MIN_N)
    v.add_argument("--n-max", type=int, default=71500)
    v.add_argument("--range-only", action="store_true", help="theorem2: skip the m_k points")
    v.add_argument("--c1", type=float, default=1.6)
    v.add_argument("--c2", type=float, default=1.2)
    v.add_argument("--m-max", type=int, default=3)
    v.add_argument("--max-n", type=int, default=None, help="table1: census limit (14); identities: largest sample (200)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--node-budget", type=int, default=en.DEFAULT_NODE_BUDGET)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--figure")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="re-render a poly-text file")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--format", required=True, choices=["ascii", "svg"])
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "target", None) and args.max_n is None:
        args.max_n = 14 if args.target == "table1" else 200
    try:
        return args.func(args)
    except PolyholesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
