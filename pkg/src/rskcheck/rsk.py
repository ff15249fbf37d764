"""Schensted row insertion, the bijection from permutations to pairs of
standard Young tableaux, its inverse, and longest monotone subsequences.

Insertion follows the classical bump rule: a value either appends to the
end of a row or displaces the leftmost strictly larger entry into the row
below, cascading until an append happens. The insertion tableau
accumulates the inserted values; the recording tableau marks, with entry
i, the cell created at step i.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .permutations import Permutation
from .tableaux import Cell, StandardYoungTableau, validate_grid

__all__ = [
    "InsertionOutcome",
    "TableauPair",
    "inverse_rsk",
    "longest_decreasing",
    "longest_increasing",
    "recording_cells",
    "row_insert",
    "rsk",
    "same_recording_tableau",
]


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau p and recording tableau q of a common shape."""

    p: StandardYoungTableau
    q: StandardYoungTableau

    def __post_init__(self) -> None:
        if self.p.shape != self.q.shape:
            raise ValueError(
                "shape mismatch between insertion and recording tableaux: "
                f"{self.p.shape} vs {self.q.shape}"
            )


@dataclass(frozen=True)
class InsertionOutcome:
    """Result of inserting one value: the grown grid, the appended cell,
    and the cells touched on the way down (ending at the appended cell)."""

    rows: tuple[tuple[int, ...], ...]
    new_cell: Cell
    bump_path: tuple[Cell, ...]


def _insert(rows: list[list[int]], x: int, linear: bool = False) -> tuple[int, int]:
    """Bump x into the grid in place; returns the 0-based new cell.

    The linear flag switches the within-row search from binary search to a
    naive left-to-right scan; both must agree (rows are strictly
    increasing) and the scan is kept as a differential-testing oracle.
    """
    r = 0
    val = x
    while True:
        if r == len(rows):
            rows.append([val])
            return r, 0
        row = rows[r]
        if linear:
            idx = 0
            while idx < len(row) and row[idx] < val:
                idx += 1
        else:
            idx = bisect_left(row, val)
        if idx == len(row):
            row.append(val)
            return r, idx
        row[idx], val = val, row[idx]
        r += 1


def row_insert(
    grid: Iterable[Sequence[int]], x: int, *, linear_scan: bool = False
) -> InsertionOutcome:
    """Insert x into a tableau-like grid by the bump rule.

    x lands at the end of the first row if it is >= every entry there;
    otherwise it replaces the leftmost larger entry, which is inserted into
    the next row, and so on until a row (possibly a brand-new one) takes an
    append. The bump path lists one cell per row visited, the last being
    the new cell.
    """
    rows = [list(row) for row in validate_grid(grid)]
    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
        raise ValueError(f"inserted value must be a positive integer, got {x!r}")
    if any(x in row for row in rows):
        raise ValueError(f"value {x} already present in the grid")

    path: list[Cell] = []
    r = 0
    val = x
    while True:
        if r == len(rows):
            rows.append([val])
            new_cell = Cell(r + 1, 1)
            path.append(new_cell)
            break
        row = rows[r]
        if linear_scan:
            idx = 0
            while idx < len(row) and row[idx] < val:
                idx += 1
        else:
            idx = bisect_left(row, val)
        if idx == len(row):
            row.append(val)
            new_cell = Cell(r + 1, idx + 1)
            path.append(new_cell)
            break
        path.append(Cell(r + 1, idx + 1))
        row[idx], val = val, row[idx]
        r += 1
    return InsertionOutcome(
        rows=tuple(tuple(row) for row in rows),
        new_cell=new_cell,
        bump_path=tuple(path),
    )


def rsk(w: Permutation, *, linear_scan: bool = False) -> TableauPair:
    """Map a permutation to its (insertion, recording) tableau pair.

    The insertion tableau is built by bumping w_1, ..., w_n in order; the
    recording tableau receives entry i at the cell created by step i.
    """
    if w.n < 1:
        raise ValueError("rsk requires a nonempty permutation")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(w.entries, start=1):
        r, c = _insert(p_rows, x, linear_scan)
        if r == len(q_rows):
            q_rows.append([step])
        else:
            q_rows[r].append(step)
    return TableauPair(StandardYoungTableau(p_rows), StandardYoungTableau(q_rows))


def inverse_rsk(pair: TableauPair) -> Permutation:
    """Recover the unique permutation mapping to the given tableau pair.

    Entries n, n-1, ..., 1 of the recording tableau locate the cells to
    empty; each emptied value reverse-bumps upward, displacing the
    rightmost smaller entry of the row above, until it exits the top row
    as a letter of the permutation.
    """
    n = pair.q.n
    position: dict[int, tuple[int, int]] = {}
    for r, row in enumerate(pair.q.rows):
        for c, v in enumerate(row):
            position[v] = (r, c)
    p_rows = [list(row) for row in pair.p.rows]
    letters: list[int] = []
    for k in range(n, 0, -1):
        r, c = position[k]
        val = p_rows[r].pop()
        if not p_rows[r]:
            del p_rows[r]
        for upper in range(r - 1, -1, -1):
            row = p_rows[upper]
            idx = bisect_left(row, val) - 1
            row[idx], val = val, row[idx]
        letters.append(val)
    return Permutation(letters[::-1])


def recording_cells(values: Sequence[int]) -> list[Cell]:
    """Cells where the recording tableau grows, one per inserted value.

    Works on any sequence of distinct positive integers, so suffix words
    of a permutation can be inserted too.
    """
    rows: list[list[int]] = []
    return [Cell(r + 1, c + 1) for r, c in (_insert(rows, x) for x in values)]


def same_recording_tableau(u: Iterable[int], v: Iterable[int]) -> bool:
    """Whether inserting u and inserting v grow cells in the identical
    order, i.e. whether the two recording tableaux are equal.

    The sequences must have equal length. Both insertion runs advance in
    lockstep and stop at the first step whose new cells differ.
    """
    rows_u: list[list[int]] = []
    rows_v: list[list[int]] = []
    for xu, xv in zip(u, v, strict=True):
        if _insert(rows_u, xu) != _insert(rows_v, xv):
            return False
    return True


def longest_increasing(w: Permutation) -> int:
    """Length of the longest strictly increasing subsequence.

    Patience piles: each value replaces the leftmost pile top >= it or
    starts a new pile; the pile count is the answer.
    """
    if w.n < 1:
        raise ValueError("requires a nonempty permutation")
    tops: list[int] = []
    for v in w.entries:
        idx = bisect_left(tops, v)
        if idx == len(tops):
            tops.append(v)
        else:
            tops[idx] = v
    return len(tops)


def longest_decreasing(w: Permutation) -> int:
    """Length of the longest strictly decreasing subsequence."""
    if w.n < 1:
        raise ValueError("requires a nonempty permutation")
    return longest_increasing(w.reverse())
