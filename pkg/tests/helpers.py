"""Shared generators and independent oracles for the test suite."""

from functools import lru_cache

from striclcs import Interval, is_subsequence

ALPHABET = b"abcdefghijklmnopqrstuvwxyz"


def rand_string(rng, n, sigma):
    return bytes(rng.choices(ALPHABET[:sigma], k=n))


def sample_subsequence(rng, s, k):
    """Random subsequence of s with min(k, |s|) symbols, order preserved."""
    k = min(k, len(s))
    idx = sorted(rng.sample(range(len(s)), k))
    return bytes(s[i] for i in idx)


def lcs_len_memo(a, b):
    """Independent LCS length oracle: plain memoized recursion."""

    @lru_cache(maxsize=None)
    def go(i, j):
        if i == 0 or j == 0:
            return 0
        if a[i - 1] == b[j - 1]:
            return go(i - 1, j - 1) + 1
        return max(go(i - 1, j), go(i, j - 1))

    return go(len(a), len(b))


def brute_minimal_intervals(s, p):
    """All minimal p-containing intervals by scanning every [b..e] window.

    Minimality is the one-symbol-shrink test: a proper subwindow contains p
    iff dropping the left or the right endpoint already does.
    """
    n = len(s)
    out = []
    for b in range(1, n + 1):
        for e in range(b, n + 1):
            w = s[b - 1:e]
            if (is_subsequence(p, w) and not is_subsequence(p, w[1:])
                    and not is_subsequence(p, w[:-1])):
                out.append(Interval(b, e))
    return out


def valid_witness(w, a, b, p):
    return is_subsequence(w, a) and is_subsequence(w, b) and p in w
