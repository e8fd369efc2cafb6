"""Baseline LCS machinery: full DP table, linear-space length, Hirschberg witness."""

from __future__ import annotations

import numpy as np

# Below this cell count the plain loops beat numpy's per-row overhead.
_SMALL = 4096


def as_symbols(s) -> bytes:
    """Normalize text or bytes to a byte string; symbols are 8-bit code units."""
    if isinstance(s, bytes):
        return s
    if isinstance(s, str):
        return s.encode("utf-8")
    return bytes(s)


def is_subsequence(p, s) -> bool:
    """True iff p can be obtained from s by deleting symbols (empty p always can)."""
    p, s = as_symbols(p), as_symbols(s)
    it = iter(s)
    return all(c in it for c in p)


def lcs_table_full(a, b) -> list[list[int]]:
    """Full (|a|+1) x (|b|+1) table with entry [i][j] = lcs(a[:i], b[:j]).

    Quadratic space; serves the reference solver and tests, not the
    space-efficient path.
    """
    a, b = as_symbols(a), as_symbols(b)
    cols = len(b) + 1
    table = [[0] * cols]
    for ca in a:
        prev = table[-1]
        row = [0] * cols
        left = 0
        for j, cb in enumerate(b, 1):
            if ca == cb:
                left = prev[j - 1] + 1
            else:
                up = prev[j]
                if up > left:
                    left = up
            row[j] = left
        table.append(row)
    return table


def lcs_length_linear_space(a, b) -> int:
    """LCS length using two rolling rows: O(min(|a|,|b|)) auxiliary space."""
    a, b = as_symbols(a), as_symbols(b)
    if len(a) < len(b):
        a, b = b, a  # roll over the shorter string
    if not b:
        return 0
    if len(a) * len(b) <= _SMALL:
        return _last_row_small(a, b)[-1]
    return int(_last_row_np(a, b)[-1])


def _last_row_small(a, b):
    """Final DP row, scalar loops: row[j] = lcs(a, b[:j])."""
    m = len(b)
    row = [0] * (m + 1)
    for ca in a:
        diag = 0
        for j in range(1, m + 1):
            keep = row[j]
            if ca == b[j - 1]:
                v = diag + 1
            else:
                v = keep if keep >= row[j - 1] else row[j - 1]
            diag = keep
            row[j] = v
    return row


def _last_row_np(a, b):
    """Final DP row, vectorized one string-row at a time.

    Unrolls the classic recurrence to row[j] = max(prev[j],
    max_{k<=j}(prev[k-1] + match_k)), which is one running maximum per row.
    """
    bv = np.frombuffer(b, dtype=np.uint8)
    row = np.zeros(len(b) + 1, dtype=np.int32)
    for ca in a:
        cand = row[:-1] + (bv == ca)
        np.maximum.accumulate(cand, out=cand)
        np.maximum(row[1:], cand, out=cand)
        row[1:] = cand
    return row


def _last_row(a, b):
    if len(a) * len(b) <= _SMALL:
        return _last_row_small(a, b)
    return _last_row_np(a, b).tolist()


def hirschberg_lcs(a, b) -> bytes:
    """An actual LCS string of a and b in linear auxiliary space.

    Divide and conquer on the middle row of a; ties between split columns go
    to the leftmost optimum, so the output is deterministic.
    """
    a, b = as_symbols(a), as_symbols(b)
    out = bytearray()
    _hirschberg(a, b, out)
    return bytes(out)


def _hirschberg(a, b, out):
    if not a or not b:
        return
    if len(a) == 1:
        if a[0] in b:
            out.append(a[0])
        return
    mid = len(a) // 2
    left = _last_row(a[:mid], b)
    right = _last_row(a[mid:][::-1], b[::-1])
    nb = len(b)
    best = -1
    split = 0
    for k in range(nb + 1):
        v = left[k] + right[nb - k]
        if v > best:
            best = v
            split = k
    _hirschberg(a[:mid], b[:split], out)
    _hirschberg(a[mid:], b[split:], out)
