"""Exhaustive rank-ordered generators for the four ground sets.

Ranks: permutations are graded by size; polyominoes, binary matrices and
quasi-permutation matrices by bounding-box semi-perimeter (rows + cols).
Every generator emits each element exactly once in the canonical order
(rows ascending within a rank, then serialized text), so independently
produced streams merge and compare reproducibly.

This module is the plain-Python reference path.  The numba kernels in
fastpoly are drop-in accelerations of the polyomino walks and are tested
against these generators; see engine.py for the dispatch.
"""

from __future__ import annotations

import enum
from itertools import permutations as iter_permutations
from typing import Iterable, Iterator, Sequence

from .containment import contains
from .matrices import (
    BinaryMatrix,
    Permutation,
    is_polyomino,
    is_quasi_permutation,
    permutation_to_matrix,
    sorted_canonically,
)


class GroundSet(enum.Enum):
    PERMUTATIONS = "perm"
    POLYOMINOES = "poly"
    BINARY_MATRICES = "matrix"
    QUASI_PERMUTATION_MATRICES = "qpm"

    @classmethod
    def parse(cls, token: str) -> "GroundSet":
        for g in cls:
            if token in (g.value, g.name.lower()):
                return g
        raise ValueError(f"unknown ground set {token!r}")


def min_rank(ground: GroundSet) -> int:
    return 1 if ground is GroundSet.PERMUTATIONS else 2


def element_rank(ground: GroundSet, m: BinaryMatrix) -> int:
    if ground is GroundSet.PERMUTATIONS:
        return m.rows
    return m.rows + m.cols


def ground_predicate(ground: GroundSet, m: BinaryMatrix) -> bool:
    """Does m belong to the ground set (as a matrix)?"""
    if ground is GroundSet.PERMUTATIONS:
        from .matrices import is_permutation_matrix
        return is_permutation_matrix(m)
    if ground is GroundSet.POLYOMINOES:
        return is_polyomino(m)
    if ground is GroundSet.QUASI_PERMUTATION_MATRICES:
        return is_quasi_permutation(m)
    return True


def _shapes(rank: int) -> Iterator[tuple[int, int]]:
    """(rows, cols) pairs with rows + cols == rank, rows ascending."""
    for rows in range(1, rank):
        yield rows, rank - rows


def spanning_polyominoes(rows: int, cols: int) -> Iterator[BinaryMatrix]:
    """All polyominoes whose bounding box is exactly rows x cols, in
    canonical (serialized text) order.

    Column-by-column depth-first walk.  A partial grid is pruned as soon
    as one of its connected components loses contact with the frontier
    column: later columns attach only there, so the component could never
    rejoin.  Tightness needs every row touched, checked at completion
    (columns are nonzero by construction).
    """
    full = (1 << rows) - 1
    out: list[BinaryMatrix] = []
    colmasks = [0] * cols

    def runs_of(mask: int) -> list[int]:
        runs = []
        cur = -1
        for i in range(rows):
            if (mask >> i) & 1:
                if cur < 0:
                    cur = len(runs)
                    runs.append(0)
                runs[cur] |= 1 << i
            else:
                cur = -1
        return runs

    def walk(j: int, prev_comps: dict[int, int], touched: int, next_id: int):
        if j == cols:
            if touched == full and len(set(prev_comps.values())) == 1:
                bits = [0] * rows
                for c in range(cols):
                    m = colmasks[c]
                    for i in range(rows):
                        if (m >> i) & 1:
                            bits[i] |= 1 << c
                out.append(BinaryMatrix(rows, cols, bits))
            return
        for mask in range(1, full + 1):
            runs = runs_of(mask)
            # merge run components with the previous column's components
            label: dict[int, int] = {}
            alias: dict[int, int] = {}

            def resolve(x: int) -> int:
                while x in alias:
                    x = alias[x]
                return x

            reached: set[int] = set()
            fresh = next_id
            run_comp = []
            for run in runs:
                ids = {resolve(prev_comps[i]) for i in range(rows)
                       if (run >> i) & 1 and i in prev_comps}
                if ids:
                    root = min(ids)
                    for other in ids:
                        if other != root:
                            alias[other] = root
                    reached.update(ids)
                else:
                    root = fresh
                    fresh += 1
                run_comp.append(root)
            prev_ids = {resolve(c) for c in prev_comps.values()}
            reached_ids = {resolve(c) for c in reached}
            if prev_ids - reached_ids:
                continue  # a component lost frontier contact
            new_comps: dict[int, int] = {}
            for run, comp in zip(runs, run_comp):
                root = resolve(comp)
                for i in range(rows):
                    if (run >> i) & 1:
                        new_comps[i] = root
            colmasks[j] = mask
            walk(j + 1, new_comps, touched | mask, fresh)
        return

    walk(0, {}, 0, 0)
    out.sort(key=BinaryMatrix.sort_key)
    yield from out


def _permutation_matrices(n: int) -> list[BinaryMatrix]:
    mats = [permutation_to_matrix(Permutation(p))
            for p in iter_permutations(range(1, n + 1))]
    return sorted_canonically(mats)


def _binary_matrices(rows: int, cols: int) -> Iterator[BinaryMatrix]:
    """All rows x cols binary matrices in serialized-text order."""
    cells = rows * cols
    for v in range(1 << cells):
        # bit p of v is display position p (top row first, MSB first)
        bits = [0] * rows
        for p in range(cells):
            if (v >> (cells - 1 - p)) & 1:
                i = rows - 1 - (p // cols)
                j = p % cols
                bits[i] |= 1 << j
        yield BinaryMatrix(rows, cols, bits)


def _quasi_permutation_matrices(rows: int, cols: int) -> list[BinaryMatrix]:
    out = []
    def place(i: int, used_cols: int, bits: list[int]):
        if i == rows:
            out.append(BinaryMatrix(rows, cols, tuple(bits)))
            return
        bits.append(0)
        place(i + 1, used_cols, bits)
        bits.pop()
        for j in range(cols):
            if not (used_cols >> j) & 1:
                bits.append(1 << j)
                place(i + 1, used_cols | (1 << j), bits)
                bits.pop()
    place(0, 0, [])
    return sorted_canonically(out)


def generate(ground: GroundSet, rank: int) -> Iterator[BinaryMatrix]:
    """Stream every ground-set element of exactly this rank, each once,
    in the canonical deterministic order."""
    if rank < min_rank(ground):
        raise ValueError(f"rank {rank} below minimum for {ground.name}")
    if ground is GroundSet.PERMUTATIONS:
        yield from _permutation_matrices(rank)
        return
    for rows, cols in _shapes(rank):
        if ground is GroundSet.POLYOMINOES:
            yield from spanning_polyominoes(rows, cols)
        elif ground is GroundSet.BINARY_MATRICES:
            yield from _binary_matrices(rows, cols)
        else:
            yield from _quasi_permutation_matrices(rows, cols)


def generate_upto(ground: GroundSet, rank_max: int) -> Iterator[BinaryMatrix]:
    """Union of generate over all ranks up to rank_max, rank-ascending."""
    for r in range(min_rank(ground), rank_max + 1):
        yield from generate(ground, r)


def minimal_elements(mats: Iterable[BinaryMatrix]) -> set[BinaryMatrix]:
    """Elements of the set that do not strictly contain another element."""
    pool = set(mats)
    out = set()
    for m in pool:
        if not any(o != m and contains(m, o) for o in pool):
            out.add(m)
    return out


def is_antichain(mats: Iterable[BinaryMatrix]) -> bool:
    """Pairwise incomparable under the submatrix order."""
    pool = list(mats)
    for a in pool:
        for b in pool:
            if a != b and contains(a, b):
                return False
    return True
