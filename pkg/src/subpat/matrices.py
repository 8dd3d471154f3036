"""Binary matrices and permutations with a bottom-up row convention.

Row index 0 is the BOTTOM row of a matrix.  This matches the usual
diagram of a permutation, where the 1 entries of the permutation matrix
sit at the same positions as the dots of the plot.  Text serialization
writes the top row first (the way a matrix is printed on paper), so
parsing flips the line order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class SubpatError(Exception):
    """Base class for errors raised by this package."""


class NotAPermutationMatrix(SubpatError):
    """Matrix is not square with exactly one 1 per row and column."""


class WrongGroundSet(SubpatError):
    """Element does not satisfy the predicate of the requested ground set."""


class BudgetExceeded(SubpatError):
    """A bounded search ran past its configured rank or size budget."""


class BinaryMatrix:
    """An immutable rectangular 0/1 grid, at least 1x1.

    Rows are stored as integer bitmasks, bottom row first; bit j of a row
    mask is the cell in column j (0-based, left to right).
    """

    __slots__ = ("rows", "cols", "bits")

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __init__(self, rows: int, cols: int, bits: Iterable[int]):
        bits = tuple(bits)
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be at least 1x1")
        if len(bits) != rows:
            raise ValueError(f"expected {rows} row masks, got {len(bits)}")
        mask = (1 << cols) - 1
        for b in bits:
            if b < 0 or b & ~mask:
                raise ValueError("row mask has bits outside the column range")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryMatrix is immutable")

    # -- construction ------------------------------------------------

    @classmethod
    def from_strings(cls, *lines: str) -> "BinaryMatrix":
        """Build from '0'/'1' strings given top row first (display order)."""
        if not lines:
            raise ValueError("need at least one row")
        cols = len(lines[0])
        rows = []
        for line in lines:
            if len(line) != cols or set(line) - {"0", "1"}:
                raise ValueError(f"bad matrix line: {line!r}")
            rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
        rows.reverse()
        return cls(len(lines), cols, rows)

    @classmethod
    def from_cells(cls, cells_top_down: Iterable[Iterable[int]]) -> "BinaryMatrix":
        """Build from nested 0/1 lists given top row first."""
        return cls.from_strings(*("".join(str(int(c)) for c in row) for row in cells_top_down))

    # -- cell access ---------------------------------------------------

    def get(self, i: int, j: int) -> int:
        """Cell value at row i (0 = bottom), column j (0 = leftmost)."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.bits[i] >> j) & 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.get(*ij)

    def count_ones(self) -> int:
        return sum(b.bit_count() for b in self.bits)

    def column_mask(self, j: int) -> int:
        """Bitmask over rows of the 1 cells in column j (bit i = row i)."""
        return sum(((b >> j) & 1) << i for i, b in enumerate(self.bits))

    # -- derived matrices ----------------------------------------------

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.cols, self.rows,
                            [self.column_mask(j) for j in range(self.cols)])

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "BinaryMatrix":
        """Submatrix on the given (strictly increasing) row/column indices."""
        row_idx = tuple(row_idx)
        col_idx = tuple(col_idx)
        if not row_idx or not col_idx:
            raise ValueError("row and column selections must be nonempty")
        bits = []
        for i in row_idx:
            b = self.bits[i]
            bits.append(sum(((b >> c) & 1) << k for k, c in enumerate(col_idx)))
        return BinaryMatrix(len(row_idx), len(col_idx), bits)

    def delete_row(self, i: int) -> "BinaryMatrix":
        if self.rows == 1:
            raise ValueError("cannot delete the only row")
        return BinaryMatrix(self.rows - 1, self.cols,
                            self.bits[:i] + self.bits[i + 1:])

    def delete_col(self, j: int) -> "BinaryMatrix":
        if self.cols == 1:
            raise ValueError("cannot delete the only column")
        low = (1 << j) - 1
        return BinaryMatrix(self.rows, self.cols - 1,
                            [(b & low) | ((b >> (j + 1)) << j) for b in self.bits])

    def line_deletions(self) -> Iterator["BinaryMatrix"]:
        """All matrices obtained by deleting exactly one row or one column."""
        if self.rows > 1:
            for i in range(self.rows):
                yield self.delete_row(i)
        if self.cols > 1:
            for j in range(self.cols):
                yield self.delete_col(j)

    # -- text format -----------------------------------------------------

    def to_text(self) -> str:
        """Serialize as lines of '0'/'1', top row first, newline-terminated."""
        lines = []
        for b in reversed(self.bits):
            lines.append("".join("1" if (b >> j) & 1 else "0" for j in range(self.cols)))
        return "\n".join(lines) + "\n"

    def sort_key(self) -> tuple[int, int, str]:
        """Canonical ordering key: (rows + cols, rows, serialized bits).

        Rank-major so basis reports list small matrices first; within one
        rank the shapes with fewer rows come first, then text order.
        """
        return (self.rows + self.cols, self.rows, self.to_text())

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, BinaryMatrix)
                and self.rows == other.rows
                and self.cols == other.cols
                and self.bits == other.bits)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.bits))

    def __lt__(self, other: "BinaryMatrix") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        body = "/".join(
            "".join("1" if (b >> j) & 1 else "0" for j in range(self.cols))
            for b in reversed(self.bits))
        return f"BinaryMatrix({body})"


def parse_matrices(text: str) -> list[BinaryMatrix]:
    """Parse the multi-matrix text format: blocks separated by blank lines."""
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
        else:
            blocks[-1].append(line)
    if blocks and not blocks[-1]:
        blocks.pop()
    return [BinaryMatrix.from_strings(*b) for b in blocks]


def matrices_to_text(mats: Iterable[BinaryMatrix]) -> str:
    return "\n".join(m.to_text() for m in mats)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if n < 1 or sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.values}")

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse space-separated one-line notation, e.g. '5 2 1 6 3 4'."""
        return cls(tuple(int(t) for t in text.split()))

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.values)

    @property
    def size(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        """Image of position j (1-based)."""
        return self.values[j - 1]

    def __repr__(self) -> str:
        return f"Permutation({''.join(map(str, self.values)) if self.size <= 9 else self.to_text()})"

    def reverse(self) -> "Permutation":
        return Permutation(tuple(reversed(self.values)))

    def complement(self) -> "Permutation":
        n = self.size
        return Permutation(tuple(n + 1 - v for v in self.values))


def permutation_to_matrix(p: Permutation) -> BinaryMatrix:
    """The n x n matrix with a 1 in row p(j) of column j (rows bottom-up)."""
    n = p.size
    bits = [0] * n
    for j, v in enumerate(p.values):
        bits[v - 1] |= 1 << j
    return BinaryMatrix(n, n, bits)


def matrix_to_permutation(m: BinaryMatrix) -> Permutation:
    """Inverse of permutation_to_matrix.

    Raises NotAPermutationMatrix unless m is square with exactly one 1 in
    every row and every column.
    """
    if m.rows != m.cols:
        raise NotAPermutationMatrix(f"not square: {m.rows}x{m.cols}")
    values = [0] * m.cols
    for i, b in enumerate(m.bits):
        if b.bit_count() != 1:
            raise NotAPermutationMatrix(f"row {i} has {b.bit_count()} ones")
        j = b.bit_length() - 1
        if values[j]:
            raise NotAPermutationMatrix(f"column {j} has more than one 1")
        values[j] = i + 1
    return Permutation(tuple(values))


def is_permutation_matrix(m: BinaryMatrix) -> bool:
    try:
        matrix_to_permutation(m)
    except NotAPermutationMatrix:
        return False
    return True


def is_quasi_permutation(m: BinaryMatrix) -> bool:
    """At most one 1 in each row and in each column."""
    col_seen = 0
    for b in m.bits:
        if b.bit_count() > 1:
            return False
        if b & col_seen:
            return False
        col_seen |= b
    return True


def is_polyomino(m: BinaryMatrix) -> bool:
    """True iff the 1 cells are nonempty, edge-connected, and the bounding
    box is tight (every boundary row/column of the matrix meets a 1; by
    connectivity this forces every row and column to meet a 1)."""
    bits = m.bits
    union = 0
    for b in bits:
        if b == 0:
            return False
        union |= b
    if union != (1 << m.cols) - 1:
        return False
    # flood fill from the first 1 cell
    start = None
    for i, b in enumerate(bits):
        if b:
            start = (i, (b & -b).bit_length() - 1)
            break
    total = sum(b.bit_count() for b in bits)
    seen_masks = [0] * m.rows
    stack = [start]
    seen_masks[start[0]] = 1 << start[1]
    count = 0
    while stack:
        i, j = stack.pop()
        count += 1
        for ni, nj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if 0 <= ni < m.rows and 0 <= nj < m.cols:
                if (bits[ni] >> nj) & 1 and not (seen_masks[ni] >> nj) & 1:
                    seen_masks[ni] |= 1 << nj
                    stack.append((ni, nj))
    return count == total


def sorted_canonically(mats: Iterable[BinaryMatrix]) -> list[BinaryMatrix]:
    """Sort matrices by (rows, cols, serialized bits): the canonical order
    used everywhere a deterministic output is promised."""
    return sorted(mats, key=BinaryMatrix.sort_key)
