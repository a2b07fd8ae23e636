"""Command-line interface: generate, count, verify, bound, minimize, bench.

Exit codes are uniform across subcommands: 0 success, 1 verification or
consistency failure, 2 invalid input data, 3 usage error.  JSON reports are
schema-stable with top-level keys {n, engine, counts4, counts5, stats,
identities, bound, timings}; integer counts are serialized as decimal
strings because they can exceed 64 bits, and every exact rational carries
its float value alongside.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Optional

from .counting import (
    InconsistentCountsError,
    TypeCounts4,
    TypeCounts5,
    aggregate_regions,
    count4_from_regions,
    count4_naive,
    count5_from_regions,
    count5_naive,
)
from .geometry import (
    COORD_BOUND,
    InvalidPlacementError,
    ParseError,
    Placement,
    ValidationError,
    load_placement,
    save_placement,
)
from .identities import bound_report, stats, verify_identities
from .search import (
    CONSISTENCY_VIOLATION,
    AnnealConfig,
    GenerationError,
    GeneratorSpec,
    generate,
    minimize_pentagons,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_USAGE = 3

_GEN_KINDS = {
    "parabola": "parabola",
    "random": "random_disc",
    "convex": "convex",
    "grid": "grid_perturbed",
}

NAIVE_CHECK_MAX_N = 11


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits 3 on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_at_least(minimum: int):
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    return convert


def _bound_type(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if not 3 <= value <= COORD_BOUND:
        raise argparse.ArgumentTypeError(
            f"bound must lie in [3, {COORD_BOUND}], got {value}"
        )
    return value


def _resolve_threads(cli_value: Optional[int]) -> Optional[int]:
    if cli_value is not None:
        return cli_value
    env = os.environ.get("GEO_THREADS")
    if env:
        try:
            value = int(env)
            if value >= 1:
                return value
        except ValueError:
            pass
    return None


def _frac(f: Fraction) -> dict:
    return {"exact": str(f), "float": float(f)}


def _opt_frac(f: Optional[Fraction]):
    return None if f is None else _frac(f)


def _counts4_json(t4: TypeCounts4) -> dict:
    return {"quad": str(t4.quad), "tridot": str(t4.tridot)}


def _counts5_json(t5: TypeCounts5) -> dict:
    return {
        "pentagon": str(t5.pentagon),
        "four_hull": str(t5.four_hull),
        "three_hull": str(t5.three_hull),
    }


def _stats_json(st) -> dict:
    return {
        "mean_beta": _frac(st.mean_beta),
        "mean_gamma": _frac(st.mean_gamma),
        "var_beta": _frac(st.var_beta),
        "var_gamma": _frac(st.var_gamma),
        "covariance": _frac(st.covariance),
        "x_p": _frac(st.x_p),
    }


def _identities_json(report) -> dict:
    return {
        "all_pass": report.all_pass,
        "checks": [
            {
                "id": c.id,
                "description": c.description,
                "lhs": str(c.lhs),
                "rhs": str(c.rhs),
                "relation": c.relation,
                "pass": c.passed,
            }
            for c in report.checks
        ],
    }


def _bound_json(br) -> dict:
    return {
        "pentagon": str(br.pentagon),
        "c5_estimate": _frac(br.c5_estimate),
        "x_p": _frac(br.x_p),
        "mean_gamma": _frac(br.mean_gamma),
        "degenerate_gamma": br.degenerate_gamma,
        "rhs_gamma": _opt_frac(br.rhs_gamma),
        "rhs_const": br.rhs_const,
        "amgm_ok": br.amgm_ok,
        "ratio_xp_rhs": br.ratio_xp_rhs,
        "tracker_gamma_sums": br.tracker_gamma_sums,
        "tracker_gamma_stats": br.tracker_gamma_stats,
        "tracker_beta_stats": br.tracker_beta_stats,
        "slack_cov_bound": br.slack_cov_bound,
        "mu5_lower_thm": br.mu5_lower_thm,
        "c5_lower_const": br.c5_lower_const,
        "mu5_coeff": br.mu5_coeff,
    }


def _report_skeleton(n: int, engine: str) -> dict:
    return {
        "n": n,
        "engine": engine,
        "counts4": None,
        "counts5": None,
        "stats": None,
        "identities": None,
        "bound": None,
        "timings": {},
    }


def _render_fraction_text(obj: dict) -> str:
    return f"{obj['exact']} ({obj['float']:.6g})"


def _render_text(report: dict) -> str:
    lines = [f"n: {report['n']}", f"engine: {report['engine']}"]
    c4 = report["counts4"]
    if c4 is not None:
        lines.append(f"counts4: quad={c4['quad']} tridot={c4['tridot']}")
    c5 = report["counts5"]
    if c5 is not None:
        lines.append(
            "counts5: pentagon={pentagon} four_hull={four_hull} "
            "three_hull={three_hull}".format(**c5)
        )
    st = report["stats"]
    if st is not None:
        lines.append("stats:")
        for key in ("mean_beta", "mean_gamma", "var_beta", "var_gamma", "covariance", "x_p"):
            lines.append(f"  {key}: {_render_fraction_text(st[key])}")
    ident = report["identities"]
    if ident is not None:
        lines.append(f"identities: all_pass={'yes' if ident['all_pass'] else 'NO'}")
        for c in ident["checks"]:
            status = "pass" if c["pass"] else "FAIL"
            lines.append(
                f"  {c['id']:<4} {status}  {c['lhs']} {c['relation']} {c['rhs']}"
                f"  [{c['description']}]"
            )
    br = report["bound"]
    if br is not None:
        lines.append("bound:")
        lines.append(f"  pentagon: {br['pentagon']}")
        lines.append(f"  c5_estimate: {_render_fraction_text(br['c5_estimate'])}")
        lines.append(f"  x_p: {_render_fraction_text(br['x_p'])}")
        lines.append(f"  mean_gamma: {_render_fraction_text(br['mean_gamma'])}")
        if br["degenerate_gamma"]:
            lines.append("  rhs_gamma: degenerate (mean_gamma = 0)")
        else:
            lines.append(f"  rhs_gamma: {_render_fraction_text(br['rhs_gamma'])}")
            lines.append(f"  amgm_ok: {br['amgm_ok']}")
            lines.append(f"  ratio_xp_rhs: {br['ratio_xp_rhs']}")
        lines.append(f"  rhs_const: {br['rhs_const']}")
        lines.append(f"  tracker_gamma_sums: {br['tracker_gamma_sums']}")
        lines.append(f"  tracker_gamma_stats: {br['tracker_gamma_stats']}")
        lines.append(f"  tracker_beta_stats: {br['tracker_beta_stats']}")
        lines.append(f"  slack_cov_bound: {br['slack_cov_bound']}")
        lines.append(f"  mu5_lower_thm: {br['mu5_lower_thm']}")
        lines.append(f"  c5_lower_const: {br['c5_lower_const']:.12f}")
        lines.append(f"  mu5_coeff: {br['mu5_coeff']:.12e}")
    timings = report["timings"]
    if timings:
        parts = " ".join(f"{k}={v:.4f}s" for k, v in timings.items())
        lines.append(f"timings: {parts}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(_render_text(report))


def _load(path: str) -> Placement:
    with open(path, "r", encoding="ascii") as fh:
        return load_placement(fh)


def _count_with_engine(placement: Placement, engine: str, threads: Optional[int]):
    """Counts plus aggregate sums and phase timings for one engine choice.

    auto uses the region engine and, for small n, replays the naive engines
    as an oracle; any disagreement raises InconsistentCountsError.
    """
    timings = {}
    t0 = time.perf_counter()
    agg = aggregate_regions(placement, threads=threads)
    timings["aggregate"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    t4_regions = count4_from_regions(agg)
    t5_regions = count5_from_regions(agg) if placement.n >= 5 else TypeCounts5(0, 0, 0)
    timings["derive"] = time.perf_counter() - t0

    if engine == "naive" or (engine == "auto" and 5 <= placement.n <= NAIVE_CHECK_MAX_N):
        t0 = time.perf_counter()
        t4_naive = count4_naive(placement) if placement.n >= 4 else TypeCounts4(0, 0)
        t5_naive = count5_naive(placement) if placement.n >= 5 else TypeCounts5(0, 0, 0)
        timings["naive"] = time.perf_counter() - t0
        if t4_naive != t4_regions or t5_naive != t5_regions:
            raise InconsistentCountsError(
                f"engine mismatch: naive {(t4_naive, t5_naive)} vs "
                f"regions {(t4_regions, t5_regions)}"
            )
        if engine == "naive":
            return t4_naive, t5_naive, agg, timings
    return t4_regions, t5_regions, agg, timings


def cmd_gen(args) -> int:
    spec = GeneratorSpec(
        _GEN_KINDS[args.kind], args.n, seed=args.seed, coord_bound=args.bound
    )
    placement = generate(spec)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            save_placement(placement, fh)
    else:
        save_placement(placement, sys.stdout)
    return EXIT_OK


def cmd_count(args) -> int:
    threads = _resolve_threads(args.threads)
    t0 = time.perf_counter()
    placement = _load(args.file)
    parse_time = time.perf_counter() - t0

    report = _report_skeleton(placement.n, args.engine)
    t4, t5, agg, timings = _count_with_engine(placement, args.engine, threads)
    report["counts4"] = _counts4_json(t4)
    report["counts5"] = _counts5_json(t5)
    report["stats"] = _stats_json(stats(agg, t5))
    report["timings"] = {"parse": parse_time, **timings}
    _emit(report, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    threads = _resolve_threads(args.threads)
    t0 = time.perf_counter()
    placement = _load(args.file)
    parse_time = time.perf_counter() - t0

    report = _report_skeleton(placement.n, "regions")
    t4, t5, agg, timings = _count_with_engine(placement, "regions", threads)
    t0 = time.perf_counter()
    ident = verify_identities(agg, t4, t5)
    timings["verify"] = time.perf_counter() - t0

    report["counts4"] = _counts4_json(t4)
    report["counts5"] = _counts5_json(t5)
    report["stats"] = _stats_json(stats(agg, t5))
    report["identities"] = _identities_json(ident)
    report["timings"] = {"parse": parse_time, **timings}
    _emit(report, args.format)
    return EXIT_OK if ident.all_pass else EXIT_FAIL


def cmd_bound(args) -> int:
    threads = _resolve_threads(args.threads)
    t0 = time.perf_counter()
    placement = _load(args.file)
    parse_time = time.perf_counter() - t0
    if placement.n < 5:
        print(f"error: the bound chain needs n >= 5, got {placement.n}",
              file=sys.stderr)
        return EXIT_INVALID

    report = _report_skeleton(placement.n, "regions")
    t4, t5, agg, timings = _count_with_engine(placement, "regions", threads)
    t0 = time.perf_counter()
    br = bound_report(placement, agg=agg, t5=t5)
    timings["bound"] = time.perf_counter() - t0

    report["counts4"] = _counts4_json(t4)
    report["counts5"] = _counts5_json(t5)
    report["stats"] = _stats_json(stats(agg, t5))
    report["bound"] = _bound_json(br)
    report["timings"] = {"parse": parse_time, **timings}
    _emit(report, args.format)
    return EXIT_OK


def cmd_minimize(args) -> int:
    cfg = AnnealConfig(
        n=args.n,
        iterations=args.iters,
        restarts=args.restarts,
        seed=args.seed,
        coord_bound=args.bound,
        target=args.target,
    )
    result = minimize_pentagons(cfg)
    print(f"n: {cfg.n}")
    print(f"best_pentagons: {result.best_pentagons}")
    print(f"iterations_used: {result.iterations_used}")
    print(f"restart_bests: {', '.join(str(b) for b in result.restart_bests)}")
    print(f"consistency: {result.consistency}")
    if result.trace:
        tail = result.trace[-5:]
        print("trace_tail: " + "; ".join(
            f"restart {r} step {i}: {b}" for r, i, b in tail))
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            save_placement(result.best_placement, fh)
    else:
        save_placement(result.best_placement, sys.stdout)
    return EXIT_FAIL if result.consistency == CONSISTENCY_VIOLATION else EXIT_OK


def _bench_engine(placement: Placement, engine: str, repeat: int, threads):
    best = None
    counts = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        if engine == "naive":
            t4 = count4_naive(placement)
            t5 = count5_naive(placement)
        else:
            agg = aggregate_regions(placement, threads=threads)
            t4 = count4_from_regions(agg)
            t5 = count5_from_regions(agg)
        elapsed = time.perf_counter() - t0
        counts = (t4, t5)
        best = elapsed if best is None else min(best, elapsed)
    return best, counts


def cmd_bench(args) -> int:
    threads = _resolve_threads(args.threads)
    sizes = args.n
    engines = args.engines
    print(f"{'n':>5} {'engine':>8} {'seconds':>10} {'quad':>12} {'pentagon':>12}")
    ok = True
    for n in sizes:
        placement = generate(
            GeneratorSpec("random_disc", n, seed=1000 + n, coord_bound=1_000_000)
        )
        results = {}
        for engine in engines:
            elapsed, counts = _bench_engine(placement, engine, args.repeat, threads)
            results[engine] = (elapsed, counts)
            t4, t5 = counts
            print(f"{n:>5} {engine:>8} {elapsed:>10.4f} {t4.quad:>12} {t5.pentagon:>12}")
        if len(engines) == 2:
            (tn, cn), (tr, cr) = results["naive"], results["regions"]
            if cn != cr:
                print(f"engine mismatch at n={n}: naive {cn} vs regions {cr}",
                      file=sys.stderr)
                ok = False
            elif tr > 0:
                print(f"{'':>5} speedup regions vs naive: {tn / tr:.1f}x")
    return EXIT_OK if ok else EXIT_FAIL


def _engines_list(text: str):
    names = [e.strip() for e in text.split(",") if e.strip()]
    if not names or any(e not in ("naive", "regions") for e in names):
        raise argparse.ArgumentTypeError(
            f"engines must be a comma list drawn from naive,regions; got {text!r}"
        )
    return sorted(set(names))


def _sizes_list(text: str):
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma list of integers")
    if not sizes or any(n < 5 for n in sizes):
        raise argparse.ArgumentTypeError("benchmark sizes must all be at least 5")
    return sizes


def build_parser() -> _Parser:
    parser = _Parser(
        prog="convexcount",
        description=(
            "Exact counting of convex 4- and 5-point subsets of integer point "
            "placements, identity verification, lower-bound reports, and a "
            "pentagon minimizer."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="generate a placement file")
    p_gen.add_argument("--kind", choices=sorted(_GEN_KINDS), default="random")
    p_gen.add_argument("--n", type=_int_at_least(3), required=True)
    p_gen.add_argument("--seed", type=_int_at_least(0), default=0)
    p_gen.add_argument("--bound", type=_bound_type, default=COORD_BOUND)
    p_gen.add_argument("-o", "--output", metavar="FILE")
    p_gen.set_defaults(func=cmd_gen)

    p_count = sub.add_parser("count", help="count subset types in a placement file")
    p_count.add_argument("file")
    p_count.add_argument("--engine", choices=("naive", "regions", "auto"), default="auto")
    p_count.add_argument("--format", choices=("json", "text"), default="text")
    p_count.add_argument("--threads", type=_int_at_least(1))
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="verify all exact counting identities")
    p_verify.add_argument("file")
    p_verify.add_argument("--format", choices=("json", "text"), default="text")
    p_verify.add_argument("--threads", type=_int_at_least(1))
    p_verify.set_defaults(func=cmd_verify)

    p_bound = sub.add_parser("bound", help="evaluate the pentagon lower-bound chain")
    p_bound.add_argument("file")
    p_bound.add_argument("--format", choices=("json", "text"), default="text")
    p_bound.add_argument("--threads", type=_int_at_least(1))
    p_bound.set_defaults(func=cmd_bound)

    p_min = sub.add_parser("minimize", help="search for a low-pentagon placement")
    p_min.add_argument("--n", type=_int_at_least(5), required=True)
    p_min.add_argument("--iters", type=_int_at_least(1), default=60_000)
    p_min.add_argument("--restarts", type=_int_at_least(1), default=4)
    p_min.add_argument("--seed", type=_int_at_least(0), default=0)
    p_min.add_argument("--bound", type=_bound_type, default=10_000)
    p_min.add_argument("--target", type=_int_at_least(0))
    p_min.add_argument("-o", "--output", metavar="FILE")
    p_min.set_defaults(func=cmd_minimize)

    p_bench = sub.add_parser("bench", help="compare counting engines")
    p_bench.add_argument("--n", type=_sizes_list, required=True,
                         help="comma list of sizes, e.g. 20,30,40")
    p_bench.add_argument("--engines", type=_engines_list, default=["naive", "regions"])
    p_bench.add_argument("--repeat", type=_int_at_least(1), default=1)
    p_bench.add_argument("--threads", type=_int_at_least(1))
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, ValidationError, InvalidPlacementError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistentCountsError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
