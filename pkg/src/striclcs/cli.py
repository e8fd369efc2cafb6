"""Command-line front end: solve, bench, selftest, dump-table."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

import numpy as np

from . import frontier, solver
from .core import lcs_length_linear_space, lcs_table_full

_ALPHABET = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"


def _symbols(sigma: int) -> bytes:
    return _ALPHABET[:sigma] if sigma <= len(_ALPHABET) else bytes(range(sigma))


def _rand_string(rng: random.Random, n: int, sigma: int) -> bytes:
    return bytes(rng.choices(_symbols(sigma), k=n))


def _strip_newline(data: bytes) -> bytes:
    if data.endswith(b"\n"):
        data = data[:-1]
    if data.endswith(b"\r"):
        data = data[:-1]
    return data


def _text(data: bytes) -> str:
    return data.decode("latin-1")


def _report(algo, outcome, stats, na, nb, elapsed_ns, seed=None, witness=False):
    """Structured record shared by solve and bench output."""
    rec = {
        "algo": algo,
        "length": outcome.length,
        "ell": stats.ell,
        "cells_allocated": stats.cells_allocated,
        "quadratic_cells": (na + 1) * (nb + 1),
        "elapsed_ns": elapsed_ns,
    }
    if witness:
        rec["witness"] = None if outcome.witness is None else _text(outcome.witness)
    if outcome.pair is not None:
        x, y = outcome.pair
        rec["pair"] = [[x.begin, x.end], [y.begin, y.end]]
    if seed is not None:
        rec["seed"] = seed
    return rec


def _print_record(rec):
    print(json.dumps(rec, sort_keys=True))


def _read_input(parser, inline, path, stdin_lines, which):
    if inline is not None:
        return inline.encode("utf-8")
    if path is not None:
        try:
            with open(path, "rb") as fh:
                return _strip_newline(fh.read())
        except OSError as exc:
            raise SystemExit(f"striclcs: cannot read {which}: {exc}")
    if stdin_lines is not None:
        return stdin_lines[which]
    parser.error(f"no value given for {which}: use --{which}, --{which}-file, or --stdin")


def cmd_solve(parser, args) -> int:
    stdin_lines = None
    if args.stdin:
        raw = sys.stdin.buffer.read().split(b"\n")
        if len(raw) < 3:
            parser.error("--stdin expects three lines: A, B, P")
        stdin_lines = {"a": raw[0], "b": raw[1], "p": raw[2]}
    a = _read_input(parser, args.a, args.a_file, stdin_lines, "a")
    b = _read_input(parser, args.b, args.b_file, stdin_lines, "b")
    p = _read_input(parser, args.p, args.p_file, stdin_lines, "p")

    t0 = time.perf_counter_ns()
    if args.algo == "space-efficient":
        out, stats = solver.solve_with_stats(a, b, p, dense_index=args.dense_index)
        if args.witness:
            out = solver.attach_witness(a, b, p, out)
    elif args.algo == "deorowicz":
        out = solver.deorowicz_reference(a, b, p)
        if args.witness:
            out = solver.attach_witness(a, b, p, out)
        stats = solver.SolveStats(ell=lcs_length_linear_space(a, b))
    else:
        out = solver.brute_force(a, b, p)
        stats = solver.SolveStats(ell=lcs_length_linear_space(a, b))
    elapsed = time.perf_counter_ns() - t0

    rec = _report(args.algo, out, stats, len(a), len(b), elapsed,
                  witness=args.witness)
    if args.json:
        _print_record(rec)
        return 0
    print(f"length: {out.length}")
    if args.witness and out.witness is not None:
        print(f"witness: {_text(out.witness)}")
    if out.pair is not None:
        x, y = out.pair
        print(f"pair: A[{x.begin}..{x.end}] x B[{y.begin}..{y.end}]")
    print(f"ell: {stats.ell}")
    print(f"cells: {stats.cells_allocated} (full table: {rec['quadratic_cells']})")
    print(f"elapsed: {elapsed / 1e6:.3f} ms")
    return 0


def bench_instance(seed, n, sigma, plen, mutations):
    """Deterministic benchmark triple for one size; P is a slice of A."""
    rng = random.Random(f"{seed}:{n}")
    a = _rand_string(rng, n, sigma)
    if mutations is None:
        b = _rand_string(rng, n, sigma)
    else:
        buf = bytearray(a)
        syms = _symbols(sigma)
        for _ in range(mutations):
            buf[rng.randrange(n)] = rng.choice(syms)
        b = bytes(buf)
    if plen == 0:
        p = b""
    elif plen <= n:
        start = rng.randrange(n - plen + 1)
        p = a[start:start + plen]
    else:
        p = _rand_string(rng, plen, sigma)
    return a, b, p


def run_bench(sizes, sigma, plen, mutations, reps, seed, dense_index=False):
    """Time the space-efficient solver per size; returns (records, slope)."""
    rows = []
    for n in sizes:
        a, b, p = bench_instance(seed, n, sigma, plen, mutations)
        times = []
        out = stats = None
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            out, stats = solver.solve_with_stats(a, b, p, dense_index=dense_index)
            times.append(time.perf_counter_ns() - t0)
        rec = _report("space-efficient", out, stats, n, n,
                      int(sorted(times)[len(times) // 2]), seed=seed)
        rec["n"] = n
        rows.append(rec)
    slope = None
    if len(rows) >= 2:
        xs = np.log([r["n"] for r in rows])
        ys = np.log([max(r["elapsed_ns"], 1) for r in rows])
        slope = float(np.polyfit(xs, ys, 1)[0])
    return rows, slope


def cmd_bench(parser, args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"--sizes expects comma-separated integers, got {args.sizes!r}")
    if not sizes or any(n <= 0 for n in sizes):
        parser.error("--sizes entries must be positive")
    if args.sigma < 1 or args.sigma > 256:
        parser.error("--sigma must be in [1, 256]")
    if args.reps < 1:
        parser.error("--reps must be positive")
    rows, slope = run_bench(sizes, args.sigma, args.plen, args.mutations,
                            args.reps, args.seed, args.dense_index)
    if args.json:
        for rec in rows:
            _print_record(rec)
        if slope is not None:
            _print_record({"loglog_slope": round(slope, 4)})
        return 0
    print(f"{'n':>8} {'length':>8} {'ell':>8} {'cells':>12} {'quadratic':>12} {'ms':>10}")
    for rec in rows:
        print(f"{rec['n']:>8} {rec['length']:>8} {rec['ell']:>8} "
              f"{rec['cells_allocated']:>12} {rec['quadratic_cells']:>12} "
              f"{rec['elapsed_ns'] / 1e6:>10.2f}")
    if slope is not None:
        print(f"log-log slope: {slope:.3f}")
    return 0


def _recovery_checks(a: bytes, b: bytes) -> str | None:
    """Exhaustive two-table sanity for one pair; returns a message on failure.

    Checks that every prefix LCS value is recoverable (if the row is not
    stored in the A-table's column, the B-table must hold it within bound)
    and that every achievable value s appears as a finite cell in both
    tables at mirrored coordinates.
    """
    ell = lcs_length_linear_space(a, b)
    fa = frontier.build_frontier(a, b, ell)
    fb = frontier.build_frontier(b, a, ell)
    table = lcs_table_full(a, b)
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            s = table[i][j]
            if s == 0:
                continue
            va = fa.cell(s, i)
            if va is frontier.UNDEF:
                vb = fb.cell(s, j)
                if vb is frontier.UNDEF or vb is frontier.INF or vb > i:
                    return (f"recovery gap at i={i} j={j} s={s} "
                            f"for a={a!r} b={b!r}")
    for s in range(1, ell + 1):
        ok = False
        for i in range(1, len(a) + 1):
            v = fa.cell(s, i)
            if v is frontier.UNDEF or v is frontier.INF:
                continue
            w = fb.cell(s, v)
            if w is not frontier.UNDEF and w is not frontier.INF:
                ok = True
                break
        if not ok:
            return f"value s={s} has no mirrored finite cells for a={a!r} b={b!r}"
    return None


def run_selftest(cases: int, seed: int) -> int:
    """Three-way agreement on random triples plus periodic table checks."""
    rng = random.Random(seed)
    checks = 0
    for idx in range(cases):
        na, nb = rng.randint(0, 12), rng.randint(0, 12)
        sigma = rng.randint(1, 4)
        a = _rand_string(rng, na, sigma)
        b = _rand_string(rng, nb, sigma)
        p = _rand_string(rng, rng.randint(0, 4), sigma)
        got = solver.solve_with_stats(a, b, p)[0].length
        ref = solver.deorowicz_reference(a, b, p).length
        oracle = solver.brute_force(a, b, p).length
        if not (got == ref == oracle):
            print(f"selftest: counterexample at case {idx}: a={a!r} b={b!r} "
                  f"p={p!r} space-efficient={got} deorowicz={ref} "
                  f"brute={oracle}")
            return 1
        if idx % 25 == 0:
            pa = _rand_string(rng, rng.randint(0, 30), rng.randint(1, 4))
            pb = _rand_string(rng, rng.randint(0, 30), rng.randint(1, 4))
            msg = _recovery_checks(pa, pb)
            if msg is not None:
                print(f"selftest: {msg}")
                return 1
            checks += 1
    print(f"selftest ok: {cases} triples agreed across three solvers, "
          f"{checks} table property checks passed")
    return 0


def cmd_selftest(parser, args) -> int:
    if args.cases < 0:
        parser.error("--cases must be >= 0")
    return run_selftest(args.cases, args.seed)


def cmd_dump_table(parser, args) -> int:
    a = args.a.encode("utf-8")
    b = args.b.encode("utf-8")
    if args.table in ("ab-rev", "ba-rev"):
        a, b = a[::-1], b[::-1]
    if args.table in ("ba", "ba-rev"):
        a, b = b, a
    ell = lcs_length_linear_space(a, b)
    table = frontier.build_frontier(a, b, ell)
    print(f"frontier for X={_text(a)!r} Y={_text(b)!r} ell={ell} "
          f"cells={table.cells_allocated}")
    print(frontier.render_table(table))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="striclcs",
        description="Longest common subsequence constrained to include a "
                    "substring: solvers, benchmarks, and debugging aids.")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve one (A, B, P) instance")
    ps.add_argument("--a", help="string A inline")
    ps.add_argument("--b", help="string B inline")
    ps.add_argument("--p", help="pattern P inline (may be empty)")
    ps.add_argument("--a-file", help="read A from file (raw bytes)")
    ps.add_argument("--b-file", help="read B from file (raw bytes)")
    ps.add_argument("--p-file", help="read P from file (raw bytes)")
    ps.add_argument("--stdin", action="store_true",
                    help="read A, B, P as three lines from standard input")
    ps.add_argument("--algo", choices=("space-efficient", "deorowicz", "brute"),
                    default="space-efficient")
    ps.add_argument("--witness", action="store_true",
                    help="also reconstruct one optimal string")
    ps.add_argument("--dense-index", action="store_true",
                    help="use the O(n*sigma) next-occurrence table")
    ps.add_argument("--json", action="store_true",
                    help="emit one structured JSON record")
    ps.set_defaults(func=cmd_solve)

    pb = sub.add_parser("bench", help="time the space-efficient solver")
    pb.add_argument("--sizes", default="500,1000,2000,4000",
                    help="comma-separated string lengths")
    pb.add_argument("--sigma", type=int, default=2, help="alphabet size")
    pb.add_argument("--plen", type=int, default=8, help="pattern length")
    pb.add_argument("--mutations", type=int, default=None,
                    help="derive B from A by this many point changes "
                         "(default: independent random B)")
    pb.add_argument("--reps", type=int, default=1,
                    help="repetitions per size (median reported)")
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--dense-index", action="store_true")
    pb.add_argument("--json", action="store_true",
                    help="emit one JSON record per size plus a slope record")
    pb.set_defaults(func=cmd_bench)

    pt = sub.add_parser("selftest", help="randomized cross-validation")
    pt.add_argument("--cases", type=int, default=1000)
    pt.add_argument("--seed", type=int, default=42)
    pt.set_defaults(func=cmd_selftest)

    pd = sub.add_parser("dump-table", help="render one frontier table")
    pd.add_argument("--a", required=True)
    pd.add_argument("--b", required=True)
    pd.add_argument("--table", choices=("ab", "ba", "ab-rev", "ba-rev"),
                    default="ab",
                    help="which ordered pair to build (rev = both reversed)")
    pd.set_defaults(func=cmd_dump_table)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
