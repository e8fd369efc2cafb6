"""Minimal windows of a string that still contain a pattern as a subsequence."""

from __future__ import annotations

from typing import NamedTuple

from .core import as_symbols


class Interval(NamedTuple):
    """Closed 1-based range [begin..end] of positions in a host string."""

    begin: int
    end: int


def minimal_intervals(s, p) -> list[Interval]:
    """All minimal intervals of s containing p as a subsequence, sorted by begin.

    An interval is minimal when dropping either endpoint symbol breaks
    containment; consequently no result contains another and both endpoints
    strictly increase along the list, so there are at most |s| of them.
    Raises ValueError for an empty pattern (every position would qualify;
    callers treat that case separately).
    """
    s, p = as_symbols(s), as_symbols(p)
    if not p:
        raise ValueError("pattern must be non-empty")
    out = []
    n, r = len(s), len(p)
    start = 0
    while True:
        # Cheapest end for a window starting at or after `start`.
        k = 0
        j = start
        while j < n:
            if s[j] == p[k]:
                k += 1
                if k == r:
                    break
            j += 1
        if k < r:
            break
        # Largest begin that still fits the pattern before that end.
        k = r - 1
        b = j
        while True:
            if s[b] == p[k]:
                if k == 0:
                    break
                k -= 1
            b -= 1
        out.append(Interval(b + 1, j + 1))
        start = b + 1
    return out
