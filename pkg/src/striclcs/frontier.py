"""Sparse shortest-prefix frontier tables and the two-table LCS queries.

The frontier for an ordered pair (X, Y) keeps, for a common-subsequence
length s and a prefix length i of X, the length of the shortest prefix of Y
whose LCS with X[:i] equals s.  Those values are non-decreasing along rows,
strictly increasing down columns, and the largest meaningful row is
ell = lcs(X, Y), so only cells on the first |X| - ell + 1 diagonals
(d = i - s + 1) can matter: storing exactly those bounds memory by
(ell + 1) * (|X| - ell + 1) + O(|X|) instead of |X| * |Y|.

A prefix LCS value lcs(X[:i], Y[:j]) is the largest s whose cell in column i
is at most j.  When that row falls above the stored band of column i, the
symmetric table for (Y, X) holds it in column j instead; the query functions
consult both.  Row cursors carried across a batch of queries with one fixed
coordinate make a whole sweep cost O(|Y| + ell) scan steps total.
"""

from __future__ import annotations

from bisect import bisect_right

from .core import as_symbols


class _Sentinel:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name


#: No prefix of Y achieves the row's value (stored as y_len + 1 internally).
INF = _Sentinel("INF")
#: Cell intentionally left uncomputed by the sparse scheme.
UNDEF = _Sentinel("UNDEF")


class OccurrenceIndex:
    """Per-symbol sorted occurrence positions (1-based) of a string."""

    __slots__ = ("length", "positions")

    def __init__(self, y):
        y = as_symbols(y)
        self.length = len(y)
        self.positions: list[list[int]] = [[] for _ in range(256)]
        for pos, c in enumerate(y, 1):
            self.positions[c].append(pos)


def build_occurrence_index(y) -> OccurrenceIndex:
    return OccurrenceIndex(y)


def next_occurrence(idx: OccurrenceIndex, c, after: int):
    """Least position p > after with Y[p] == c, or INF when none remains."""
    if not isinstance(c, int):
        c = as_symbols(c)[0]
    lst = idx.positions[c]
    k = bisect_right(lst, after)
    return lst[k] if k < len(lst) else INF


def _dense_next_rows(y: bytes) -> dict:
    """next[c][pos] = least 1-based position > pos holding c, else len(y)+1.

    O(|y| * alphabet) memory; worth it only for long benchmark runs, hence
    behind the dense_index flag.
    """
    n = len(y)
    inf = n + 1
    rows = {}
    for c in set(y):
        rows[c] = [inf] * (n + 1)
    occ = OccurrenceIndex(y)
    for c, poss in enumerate(occ.positions):
        if not poss:
            continue
        row = rows[c]
        k = len(poss) - 1
        nxt = inf
        for q in range(n, -1, -1):
            if k >= 0 and poss[k] == q + 1:
                nxt = q + 1
                k -= 1
            row[q] = nxt
    return rows


class FrontierTable:
    """Diagonal-major storage for the computed cells of one (X, Y) frontier.

    diags[k] holds diagonal d = k + 1 as a list indexed by row - 1; the cell
    (s, i) lives at diags[i - s][s - 1].  Each diagonal is a contiguous run
    from row 1 with at most one trailing INF, which is what the fill loop
    and both query scans rely on.  Values are 1-based positions into Y with
    y_len + 1 standing for INF; absence means UNDEF.
    """

    __slots__ = ("x_len", "y_len", "ell", "diags")

    def __init__(self, x_len, y_len, ell, diags):
        self.x_len = x_len
        self.y_len = y_len
        self.ell = ell
        self.diags = diags

    @property
    def cells_allocated(self) -> int:
        return sum(len(dd) for dd in self.diags)

    def cell(self, s: int, i: int):
        """Tagged view of cell (s, i): a position int, INF, or UNDEF."""
        if s < 1 or i < 1 or s > self.ell or i > self.x_len:
            return UNDEF
        k = i - s
        if k < 0 or k >= len(self.diags):
            return UNDEF
        dd = self.diags[k]
        if s > len(dd):
            return UNDEF
        v = dd[s - 1]
        return INF if v > self.y_len else v


def top_defined_row(table: FrontierTable, i: int) -> int:
    """Smallest stored row of column i; rows above it lie past the last diagonal."""
    s = i - table.x_len + table.ell
    return s if s > 1 else 1


def build_frontier(x, y, ell: int, dense_index: bool = False) -> FrontierTable:
    """Fill the sparse frontier for (X, Y); ell must equal lcs(X, Y).

    Columns are filled left to right and rows top-down inside the stored
    band.  A cell extends its diagonal only while the cell up-left on the
    same diagonal stayed finite, so every diagonal is a contiguous run and
    the loop can stop a column at the first dead row.
    """
    x, y = as_symbols(x), as_symbols(y)
    xn, yn = len(x), len(y)
    if ell <= 0:
        return FrontierTable(xn, yn, 0, [])
    inf = yn + 1
    diags: list[list[int]] = [[] for _ in range(xn - ell + 1)]
    occ = build_occurrence_index(y).positions
    dense = _dense_next_rows(y) if dense_index else None
    for i in range(1, xn + 1):
        c = x[i - 1]
        occ_c = occ[c]
        n_occ = len(occ_c)
        drow = dense.get(c) if dense is not None else None
        s = i - xn + ell
        if s < 1:
            s = 1
        hi = i if i < ell else ell
        while s <= hi:
            dd = diags[i - s]
            if len(dd) != s - 1:
                break  # diagonal stopped earlier; rows below are dead too
            if s == 1:
                prev_diag = 0
            else:
                prev_diag = dd[s - 2]
                if prev_diag >= inf:
                    break  # extending an INF cell stays undefined
            # Shortest prefix: carry the value from (s, i-1) or match x[i]
            # just past the diagonal predecessor, whichever comes first.
            if s < i:
                d2 = diags[i - s - 1]
                carry = d2[s - 1] if len(d2) >= s else inf
            else:
                carry = inf
            if drow is not None:
                fresh = drow[prev_diag]
            else:
                k = bisect_right(occ_c, prev_diag)
                fresh = occ_c[k] if k < n_occ else inf
            v = carry if carry < fresh else fresh
            if v >= inf:
                dd.append(inf)
                break  # rest of the column is undefined
            dd.append(v)
            s += 1
    return FrontierTable(xn, yn, ell, diags)


class ScanCursors:
    """Row cursors for one batch of queries against a fixed outer position.

    kA1/kB1 climb with the non-decreasing prefix answers; kA2/kB2 descend
    with the non-increasing suffix answers.  Reset (fresh instance) whenever
    the fixed coordinate of the batch changes.
    """

    __slots__ = ("kA1", "kB1", "kA2", "kB2")

    def __init__(self, ell: int):
        self.kA1 = 1
        self.kB1 = 1
        self.kA2 = ell
        self.kB2 = ell


def prefix_lcs_query(fx: FrontierTable, fy: FrontierTable, i: int, j: int,
                     cur: ScanCursors) -> int:
    """lcs(X[:i], Y[:j]) resolved from the table pair (fx over (X,Y), fy over (Y,X)).

    Calls sharing `cur` must keep i fixed and j non-decreasing; the answers
    are then non-decreasing and the climbing cursors bound the whole batch
    to O(ell) scan steps plus O(1) per call.
    """
    ell = fx.ell
    if i <= 0 or j <= 0 or ell == 0:
        return 0
    st = i - fx.x_len + ell
    if st < 1:
        st = 1
    diags = fx.diags
    dd = diags[i - st]
    top = dd[st - 1] if len(dd) >= st else j + 1
    if top <= j:
        # The answer row is stored in fx's column i: climb to the last row <= j.
        s = cur.kA1
        if s < st:
            s = st
        best = 0
        while s <= ell:
            k = i - s
            if k < 0:
                break
            dd = diags[k]
            if len(dd) < s or dd[s - 1] > j:
                break
            best = s
            s += 1
        if best:
            cur.kA1 = best
        return best
    if st == 1:
        return 0  # even a single common symbol needs a longer Y-prefix
    # Answer lies above fx's stored band; recover it from fy's column j.
    sty = j - fy.x_len + ell
    if sty < 1:
        sty = 1
    s = cur.kB1
    if s < sty:
        s = sty
    best = 0
    diags = fy.diags
    while s <= ell:
        k = j - s
        if k < 0:
            break
        dd = diags[k]
        if len(dd) < s or dd[s - 1] > i:
            break
        best = s
        s += 1
    if best:
        cur.kB1 = best
    return best


def suffix_lcs_query(fxr: FrontierTable, fyr: FrontierTable, p: int, q: int,
                     cur: ScanCursors) -> int:
    """lcs(X[p:], Y[q:]) from the tables built over the reversed strings.

    fxr is the frontier of (reversed X, reversed Y) and fyr its mirror, so
    the suffix pair (p, q) maps to reversed prefix lengths i = |X| - p + 1,
    j = |Y| - q + 1.  Calls sharing `cur` must keep p fixed and q
    non-decreasing: answers then only shrink and the descending cursors
    sweep each table at most once per batch.
    """
    ell = fxr.ell
    i = fxr.x_len - p + 1
    j = fxr.y_len - q + 1
    if i <= 0 or j <= 0 or ell == 0:
        return 0
    st = i - fxr.x_len + ell
    if st < 1:
        st = 1
    diags = fxr.diags
    dd = diags[i - st]
    top = dd[st - 1] if len(dd) >= st else j + 1
    if top <= j:
        # Descend to the first stored row of column i with value <= j.
        s = cur.kA2
        if s > i:
            s = i
        while s >= st:
            dd = diags[i - s]
            if len(dd) >= s and dd[s - 1] <= j:
                cur.kA2 = s
                return s
            s -= 1
        return 0  # unreachable while the batch contract holds
    if st == 1:
        return 0
    # Answer lies above fxr's stored band; recover it from fyr's column j.
    sty = j - fyr.x_len + ell
    if sty < 1:
        sty = 1
    diags = fyr.diags
    s = cur.kB2
    if s > j:
        s = j
    while s >= sty:
        dd = diags[j - s]
        if len(dd) >= s and dd[s - 1] <= i:
            cur.kB2 = s
            return s
        s -= 1
    cur.kB2 = 0
    return 0


def render_table(table: FrontierTable) -> str:
    """Rows-by-columns text dump: positions, with INF drawn as 'inf' and UNDEF as '.'."""
    ell, xn = table.ell, table.x_len
    cells = [[table.cell(s, i) for i in range(1, xn + 1)] for s in range(1, ell + 1)]
    text = [["." if v is UNDEF else ("inf" if v is INF else str(v)) for v in row]
            for row in cells]
    width = max((len(t) for row in text for t in row), default=1)
    width = max(width, len(str(xn)))
    head = "s\\i " + " ".join(str(i).rjust(width) for i in range(1, xn + 1))
    lines = [head]
    for s, row in enumerate(text, 1):
        lines.append(f"{s:>3} " + " ".join(t.rjust(width) for t in row))
    return "\n".join(lines)
