"""Command-line front end: ``python -m antichains <subcommand> ...``.

Only the result goes to stdout.  Progress, estimates and diagnostics go to
stderr.  Exit codes are 0 on success, 1 when a verification fails and 2 for
usage errors or infeasible requests.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
import warnings

from .dedekind import LONG_RUN_N, METHODS, dedekind, feasible, sequence_table
from .lattice import MAX_N, LatticeError, format_antichain, normalize, parse
from .partitions import lnd_partition, verify_partition
from .pcoeff import default_threads, pcoeff_bruteforce, pcoeff_k2
from .posets import Interval, interval_graph
from .sizes import SizeMemo, count_by_enumeration, size_leveled, size_of_words
from .verification import SUITES, random_pairs, run_suites

log = logging.getLogger("antichains")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# measured on one core of the development machine: class sizes, then the sum
LONG_RUN_PREP_S = 1250.0
LONG_RUN_SUM_S = 1500.0


class UsageError(Exception):
    pass


def _progress(done: int, total: int) -> None:
    print(f"\r{done}/{total} units", end="" if done < total else "\n", file=sys.stderr, flush=True)


def _estimate_long_run(threads: int) -> str:
    secs = LONG_RUN_PREP_S + LONG_RUN_SUM_S / max(1, threads)
    return f"estimated {secs / 60:.0f} min for A_{LONG_RUN_N} with {threads} thread(s)"


def _guard_long_run(n: int, args) -> None:
    if n < LONG_RUN_N:
        return
    if not args.allow_long_run:
        raise UsageError(f"n={n} is a long run; pass --allow-long-run ({_estimate_long_run(args.threads)})")
    print(_estimate_long_run(args.threads), file=sys.stderr, flush=True)


def _threads(value: str) -> int:
    t = int(value)
    if t < 1:
        raise argparse.ArgumentTypeError("threads must be >= 1")
    return t


def _n_arg(value: str) -> int:
    n = int(value)
    if not 0 <= n <= MAX_N:
        raise argparse.ArgumentTypeError(f"n must be between 0 and {MAX_N}")
    return n


# -- subcommands ---------------------------------------------------------------


def cmd_dedekind(args) -> int:
    n, method = args.n, args.method
    if method == "pcoeff":
        _guard_long_run(n, args)
    if not feasible(n, method, args.k):
        raise UsageError(f"method {method!r} cannot compute n={n}" + (f" with k={args.k}" if method == "pcoeff" else ""))
    progress = _progress if args.progress else None
    value = dedekind(n, method, k=args.k, threads=args.threads, progress=progress)
    status = EXIT_OK
    if args.verify:
        for other in METHODS:
            if other == method or not feasible(n, other) or (other == "pcoeff" and n >= LONG_RUN_N):
                continue
            t0 = time.perf_counter()
            v = dedekind(n, other, threads=args.threads)
            ok = v == value
            print(f"{'ok' if ok else 'MISMATCH'} {other}: {v} ({time.perf_counter() - t0:.2f}s)", file=sys.stderr)
            if not ok:
                status = EXIT_FAIL
    if args.json:
        print(json.dumps({"n": n, "method": method, "value": str(value)}))
    else:
        print(value)
    return status


def format_table(table, fmt: str) -> str:
    rows = table.rows()
    if fmt == "json":
        return json.dumps([{"n": r[0], "A": str(r[1]), "B": str(r[2]), "C": str(r[3]), "D": str(r[4])} for r in rows]) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "A", "B", "C", "D"])
        w.writerows(rows)
        return buf.getvalue()
    cells = [("n", "A", "B", "C", "D")] + [tuple(str(x) for x in r) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(5)]
    return "".join("  ".join(c[i].rjust(widths[i]) for i in range(5)) + "\n" for c in cells)


def cmd_table(args) -> int:
    _guard_long_run(args.max_n, args)
    table = sequence_table(args.max_n, threads=args.threads, progress=_progress if args.progress else None)
    sys.stdout.write(format_table(table, args.format))
    return EXIT_OK


def cmd_interval_size(args) -> int:
    n = args.n
    lo = parse(args.bottom, n, normalize_input=args.normalize)
    hi = parse(args.top, n, normalize_input=args.normalize)
    memo = SizeMemo()
    value = size_of_words(lo.down, hi.down, n, memo)
    status = EXIT_OK
    if args.both_parities:
        if value:
            even, odd = size_leveled(lo, hi, "even"), size_leveled(lo, hi, "odd")
        else:
            even = odd = 0
        print(f"even={even} odd={odd}", file=sys.stderr)
        if not even == odd == value:
            print(f"parity sums disagree: even={even} odd={odd} dispatcher={value}", file=sys.stderr)
            status = EXIT_FAIL
    if args.enumerate:
        if n > 5:
            raise UsageError("--enumerate is limited to n <= 5")
        count = count_by_enumeration(lo, hi)
        print(f"enumeration={count}", file=sys.stderr)
        if count != value:
            status = EXIT_FAIL
    if args.dump_graph and value:
        g = interval_graph(Interval(lo, hi))
        for a, b in g.edge_list():
            print(f"{format_antichain(normalize([a], n))} -- {format_antichain(normalize([b], n))}", file=sys.stderr)
    if args.stats:
        print(memo.stats(), file=sys.stderr)
    print(value)
    return status


def cmd_pcoeff(args) -> int:
    n = args.n
    rho1 = parse(args.rho1, n)
    rho2 = parse(args.rho2, n)
    if args.bruteforce or args.k != 2:
        value = pcoeff_bruteforce(n, args.k, rho1, rho2)
    else:
        value = pcoeff_k2(rho1, rho2)
    if args.check and args.k == 2:
        brute = pcoeff_bruteforce(n, 2, rho1, rho2)
        print(f"bruteforce={brute}", file=sys.stderr)
        if brute != value:
            print(value)
            return EXIT_FAIL
    print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n > 5:
        raise UsageError("verify supports n <= 5")
    if args.dump_partition is not None:
        alpha = parse(args.dump_partition, args.n)
        part = lnd_partition(alpha)
        sys.stdout.write(part.dump())
        res = verify_partition(part, "full" if args.n <= 4 else "size")
        print(f"{'PASS' if res else 'FAIL'} partition of A_{args.n} below {alpha}" + (f" [{res.detail}]" if not res else ""))
        return EXIT_OK if res else EXIT_FAIL
    suites = args.suite or list(SUITES)
    failed = False
    for check in run_suites(args.n, suites, seed=args.seed, samples=args.samples):
        print(check.line(), flush=True)
        failed |= not check.ok
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args) -> int:
    """Wall-clock timings; the only subcommand whose stdout is not deterministic."""
    if args.n > 5:
        raise UsageError("bench supports n <= 5")
    rows = []
    t0 = time.perf_counter()
    pairs = random_pairs(args.n, args.samples, args.seed)
    memo = SizeMemo()
    for lo, hi in pairs:
        size_of_words(lo.down, hi.down, args.n, memo)
    rows.append((f"interval_size x{len(pairs)} on A_{args.n}", time.perf_counter() - t0))
    for m in (args.n, args.n + 2):
        if 2 <= m <= 7:
            t0 = time.perf_counter()
            dedekind(m, "pcoeff", threads=args.threads)
            rows.append((f"dedekind {m} pcoeff", time.perf_counter() - t0))
    for name, secs in rows:
        print(f"{name}\t{secs:.3f}s")
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    threads_default = default_threads()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_threads, default=threads_default, help="worker count (default: $ANTICHAIN_THREADS or 1)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="more diagnostics on stderr")

    p = argparse.ArgumentParser(prog="antichains", description="Antichain lattices and Dedekind numbers.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dedekind", parents=[common], help="compute |A_n|")
    d.add_argument("n", type=_n_arg)
    d.add_argument("--method", choices=METHODS, default="pcoeff")
    d.add_argument("--k", type=int, default=2, help="projected coordinates for the pcoeff method")
    d.add_argument("--verify", action="store_true", help="also run every other feasible method")
    d.add_argument("--json", action="store_true")
    d.add_argument("--progress", action="store_true", help="unit progress on stderr")
    d.add_argument("--allow-long-run", action="store_true")
    d.set_defaults(func=cmd_dedekind)

    t = sub.add_parser("table", parents=[common], help="the A/B/C/D table for n = 0..max_n")
    t.add_argument("max_n", type=_n_arg)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--progress", action="store_true")
    t.add_argument("--allow-long-run", action="store_true")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("interval-size", parents=[common], help="size of [bottom, top]")
    s.add_argument("n", type=_n_arg)
    s.add_argument("bottom")
    s.add_argument("top")
    s.add_argument("--both-parities", action="store_true", help="cross-check both level sums")
    s.add_argument("--enumerate", action="store_true", help="cross-check by enumeration (n <= 5)")
    s.add_argument("--normalize", action="store_true", help="reduce inputs to their maximal sets")
    s.add_argument("--stats", action="store_true", help="memo statistics on stderr")
    s.add_argument("--dump-graph", action="store_true", help="interval graph edge list on stderr")
    s.set_defaults(func=cmd_interval_size)

    c = sub.add_parser("pcoeff", parents=[common], help="a single P-coefficient")
    c.add_argument("n", type=_n_arg)
    c.add_argument("rho1")
    c.add_argument("rho2")
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--bruteforce", action="store_true")
    c.add_argument("--check", action="store_true", help="compare the k = 2 formula with brute force")
    c.set_defaults(func=cmd_pcoeff)

    v = sub.add_parser("verify", parents=[common], help="run invariant suites")
    v.add_argument("n", type=_n_arg)
    v.add_argument("--suite", action="append", choices=SUITES)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=1000, help="random intervals for n = 5")
    v.add_argument("--dump-partition", metavar="ALPHA", help="print the partition below ALPHA, one 'bottom ; top' per line")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", parents=[common], help="timings")
    b.add_argument("n", type=_n_arg)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--samples", type=int, default=200)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    warnings.filterwarnings("ignore", module="numba")
    try:
        parser = build_parser()
    except LatticeError as exc:
        print(f"antichains: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (UsageError, LatticeError) as exc:
        print(f"antichains: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
