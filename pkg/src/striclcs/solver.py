"""Substring-constrained LCS solvers: space-efficient, quadratic reference, brute force.

The problem: among all common subsequences of A and B, find a longest one
that contains the pattern P as a contiguous substring.  Length -1 encodes
"no such subsequence".  Every solver reduces the search to pairs of minimal
P-containing intervals, one per string: any optimal answer splits into a
common subsequence of the prefixes strictly before some interval pair, then
P itself, then one of the suffixes strictly after it.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .core import (as_symbols, hirschberg_lcs, lcs_length_linear_space,
                   lcs_table_full)
from .frontier import ScanCursors, build_frontier, prefix_lcs_query, suffix_lcs_query
from .intervals import Interval, minimal_intervals

NO_SOLUTION = -1

_BRUTE_LIMIT = 15


@dataclass(frozen=True)
class StrIcLcsOutcome:
    """Result of one constrained-LCS run; length -1 means no solution exists."""

    length: int
    witness: bytes | None = None
    pair: tuple[Interval, Interval] | None = None


@dataclass
class SolveStats:
    """Instrumentation from one space-efficient solve."""

    ell: int = 0
    cells_allocated: int = 0
    pairs_evaluated: int = 0


def solve_with_stats(a, b, p, dense_index: bool = False):
    """Space-efficient solve returning (outcome, stats).

    Builds the four frontier tables (both string orders, forward and
    reversed) and evaluates every minimal-interval pair with one batch of
    cursor queries per interval of A, so the pair sweep costs amortized
    O(|A| + |B| + ell) per outer interval on top of the O(|A| * |B|) builds.
    """
    a, b, p = as_symbols(a), as_symbols(b), as_symbols(p)
    stats = SolveStats()
    if not p:
        stats.ell = lcs_length_linear_space(a, b)
        return StrIcLcsOutcome(stats.ell), stats
    if len(p) > len(a) or len(p) > len(b):
        return StrIcLcsOutcome(NO_SOLUTION), stats
    ints_a = minimal_intervals(a, p)
    if not ints_a:
        return StrIcLcsOutcome(NO_SOLUTION), stats
    ints_b = minimal_intervals(b, p)
    if not ints_b:
        return StrIcLcsOutcome(NO_SOLUTION), stats
    ell = lcs_length_linear_space(a, b)
    stats.ell = ell
    fa = build_frontier(a, b, ell, dense_index)
    fb = build_frontier(b, a, ell, dense_index)
    ar, br = a[::-1], b[::-1]
    far = build_frontier(ar, br, ell, dense_index)
    fbr = build_frontier(br, ar, ell, dense_index)
    stats.cells_allocated = (fa.cells_allocated + fb.cells_allocated
                             + far.cells_allocated + fbr.cells_allocated)
    r = len(p)
    best = NO_SOLUTION
    best_pair = None
    for x in ints_a:
        cur = ScanCursors(ell)
        before = x.begin - 1
        after = x.end + 1
        for y in ints_b:
            k1 = prefix_lcs_query(fa, fb, before, y.begin - 1, cur)
            k2 = suffix_lcs_query(far, fbr, after, y.end + 1, cur)
            cand = k1 + r + k2
            if cand > best:
                best = cand
                best_pair = (x, y)
    stats.pairs_evaluated = len(ints_a) * len(ints_b)
    return StrIcLcsOutcome(best, None, best_pair), stats


def str_ic_lcs_length(a, b, p) -> StrIcLcsOutcome:
    """Length (and maximizing interval pair) of a longest common subsequence
    of a and b containing p as a substring; length -1 when none exists."""
    out, _ = solve_with_stats(a, b, p)
    return out


def str_ic_lcs_with_witness(a, b, p) -> StrIcLcsOutcome:
    """Like str_ic_lcs_length but also reconstructs one witness string."""
    out, _ = solve_with_stats(a, b, p)
    return attach_witness(a, b, p, out)


def attach_witness(a, b, p, out: StrIcLcsOutcome) -> StrIcLcsOutcome:
    """Rebuild a witness for an already-solved outcome (no-op for length -1).

    The witness is an LCS of the prefixes before the recorded interval pair,
    then p, then an LCS of the suffixes after it; both pieces come from the
    linear-space reconstruction, so this stays within the memory budget.
    """
    if out.length < 0:
        return out
    a, b, p = as_symbols(a), as_symbols(b), as_symbols(p)
    if not p:
        return StrIcLcsOutcome(out.length, hirschberg_lcs(a, b), None)
    x, y = out.pair
    w = (hirschberg_lcs(a[:x.begin - 1], b[:y.begin - 1]) + p
         + hirschberg_lcs(a[x.end:], b[y.end:]))
    return StrIcLcsOutcome(out.length, w, out.pair)


def deorowicz_reference(a, b, p) -> StrIcLcsOutcome:
    """Same contract as str_ic_lcs_length over two full quadratic DP tables.

    Deliberately simple-minded: prefix and suffix LCS values are read
    straight out of the tables, making this the cross-check for the
    frontier-based path.
    """
    a, b, p = as_symbols(a), as_symbols(b), as_symbols(p)
    if not p:
        return StrIcLcsOutcome(lcs_table_full(a, b)[-1][-1])
    if len(p) > len(a) or len(p) > len(b):
        return StrIcLcsOutcome(NO_SOLUTION)
    ints_a = minimal_intervals(a, p)
    if not ints_a:
        return StrIcLcsOutcome(NO_SOLUTION)
    ints_b = minimal_intervals(b, p)
    if not ints_b:
        return StrIcLcsOutcome(NO_SOLUTION)
    pre = lcs_table_full(a, b)
    suf = lcs_table_full(a[::-1], b[::-1])
    na, nb = len(a), len(b)
    r = len(p)
    best = NO_SOLUTION
    best_pair = None
    for x in ints_a:
        row_pre = pre[x.begin - 1]
        row_suf = suf[na - x.end]
        for y in ints_b:
            cand = row_pre[y.begin - 1] + r + row_suf[nb - y.end]
            if cand > best:
                best = cand
                best_pair = (x, y)
    return StrIcLcsOutcome(best, None, best_pair)


def brute_force(a, b, p) -> StrIcLcsOutcome:
    """Ground truth by trying every distinct subsequence of a (|a| <= 15).

    Depth-first over canonical (leftmost-occurrence) embeddings so each
    distinct string is visited once, with a greedy cursor into b rejecting
    non-common branches, a substring automaton tracking containment of p,
    and a remaining-length bound pruning branches that cannot improve.
    """
    a, b, p = as_symbols(a), as_symbols(b), as_symbols(p)
    if len(a) > _BRUTE_LIMIT:
        raise ValueError(f"brute_force caps |a| at {_BRUTE_LIMIT}, got {len(a)}")
    r = len(p)
    # Failure links for the substring automaton over p.
    fail = [0] * r
    k = 0
    for q in range(1, r):
        c = p[q]
        while k and p[k] != c:
            k = fail[k - 1]
        if p[k] == c:
            k += 1
        fail[q] = k
    occ_b: list[list[int]] = [[] for _ in range(256)]
    for pos, c in enumerate(b):
        occ_b[c].append(pos)
    na = len(a)
    best = -1

    def walk(ai, bi, state, depth, contained):
        nonlocal best
        if contained and depth > best:
            best = depth
        if depth + (na - ai) <= best:
            return  # cannot beat the incumbent even taking everything left
        seen = set()
        for k2 in range(ai, na):
            c = a[k2]
            if c in seen:
                continue
            seen.add(c)
            lst = occ_b[c]
            t = bisect_left(lst, bi)
            if t == len(lst):
                continue
            nbi = lst[t] + 1
            if contained:
                walk(k2 + 1, nbi, 0, depth + 1, True)
            else:
                st = state
                while st and p[st] != c:
                    st = fail[st - 1]
                if p[st] == c:
                    st += 1
                walk(k2 + 1, nbi, st, depth + 1, st == r)

    walk(0, 0, 0, 0, r == 0)
    return StrIcLcsOutcome(best if best >= 0 else NO_SOLUTION)
