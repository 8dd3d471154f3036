"""Submatrix containment: does a pattern survive some row/column deletion?

A pattern occurs in a host when strictly increasing row and column
selections of the host reproduce the pattern cell for cell, zeros
included.  The search backtracks over column choices left to right; each
partial choice is vetted by greedy row matching (the pattern's rows,
restricted to the chosen columns, must appear as a subsequence of the
host's rows restricted the same way).  Greedy matching is exact here:
for a fixed column choice this is plain word-subsequence containment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import BinaryMatrix


@dataclass(frozen=True)
class Embedding:
    """A witness: pattern row i maps to host row row_choice[i], etc."""

    row_choice: tuple[int, ...]
    col_choice: tuple[int, ...]

    def __post_init__(self):
        for seq in (self.row_choice, self.col_choice):
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError("embedding indices must be strictly increasing")

    def check(self, host: BinaryMatrix, pattern: BinaryMatrix) -> bool:
        """Re-validate by direct cell comparison."""
        if len(self.row_choice) != pattern.rows or len(self.col_choice) != pattern.cols:
            return False
        if not all(0 <= i < host.rows for i in self.row_choice):
            return False
        if not all(0 <= j < host.cols for j in self.col_choice):
            return False
        return host.submatrix(self.row_choice, self.col_choice) == pattern


def _greedy_rows(host_bits: tuple[int, ...], pat_bits: tuple[int, ...],
                 cols: tuple[int, ...], depth: int) -> list[int] | None:
    """Match pattern rows (restricted to pattern columns < depth) as a
    subsequence of host rows restricted to the chosen host columns.

    Returns the greedy row indices, or None when no match exists.
    """
    chosen: list[int] = []
    t = 0
    want = pat_bits
    n_pat = len(pat_bits)
    for i, hb in enumerate(host_bits):
        pb = want[t]
        ok = True
        for k in range(depth):
            if (hb >> cols[k]) & 1 != (pb >> k) & 1:
                ok = False
                break
        if ok:
            chosen.append(i)
            t += 1
            if t == n_pat:
                return chosen
    return None


def find_embedding(host: BinaryMatrix, pattern: BinaryMatrix) -> Embedding | None:
    """First embedding of pattern in host in column-lexicographic order,
    with greedy (lowest possible) row choices; None when the pattern does
    not occur."""
    pr, pc = pattern.rows, pattern.cols
    hr, hc = host.rows, host.cols
    if pr > hr or pc > hc:
        return None
    if pattern.count_ones() > host.count_ones():
        return None
    host_bits = host.bits
    pat_bits = pattern.bits
    cols = [0] * pc

    def descend(t: int, start: int) -> tuple[int, ...] | None:
        for c in range(start, hc - (pc - t - 1)):
            cols[t] = c
            rows = _greedy_rows(host_bits, pat_bits, tuple(cols[:t + 1]), t + 1)
            if rows is None:
                continue
            if t + 1 == pc:
                return tuple(rows)
            found = descend(t + 1, c + 1)
            if found is not None:
                return found
        return None

    rows = descend(0, 0)
    if rows is None:
        return None
    return Embedding(tuple(rows), tuple(cols))


def contains(host: BinaryMatrix, pattern: BinaryMatrix) -> bool:
    """True iff pattern is a submatrix of host (the pattern order on
    binary matrices, and by restriction on permutations and polyominoes)."""
    return find_embedding(host, pattern) is not None


def contains_any(host: BinaryMatrix, patterns) -> bool:
    return any(contains(host, p) for p in patterns)


def avoids_all(host: BinaryMatrix, patterns) -> bool:
    return not contains_any(host, patterns)
