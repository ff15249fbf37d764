"""Forward jeu-de-taquin slides, the minimal-entry deletion operator, and
the evacuation involution on standard Young tableaux.

A slide moves a hole through the grid: at each step the hole swallows the
smaller of the entries directly below and directly to its right (the only
one present when just one exists) and takes that entry's place. When
neither neighbor exists the hole has reached a corner and drops off the
diagram. Deletion erases the minimal entry and slides the resulting hole
out; entries keep their labels, so iterating deletion on a 1..n tableau
yields grids over {2..n}, {3..n}, and so on. Evacuation records, for each
of the n deletions, which corner was vacated: the cell vacated by the
i-th deletion (0-based) receives entry n - i.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .tableaux import Cell, StandardYoungTableau, validate_grid

__all__ = [
    "EvacuationTrace",
    "delta",
    "evacuation",
    "evacuation_trace",
    "jdt_slide",
]

Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EvacuationTrace:
    """The corner vacated by each deletion step, plus the tableau that
    records them."""

    vacated_cells: tuple[Cell, ...]
    evacuation: StandardYoungTableau


def _slide(rows: list[list[int]], r: int, c: int) -> tuple[int, int]:
    """Slide the hole at 0-based (r, c) to a corner; returns its resting cell.

    The entry at (r, c) is treated as absent and overwritten by the first
    move.
    """
    while True:
        below = None
        if r + 1 < len(rows) and c < len(rows[r + 1]):
            below = rows[r + 1][c]
        right = None
        if c + 1 < len(rows[r]):
            right = rows[r][c + 1]
        if below is None and right is None:
            return r, c
        if right is None or (below is not None and below < right):
            rows[r][c] = below
            r += 1
        else:
            rows[r][c] = right
            c += 1


def _remove_corner(rows: list[list[int]], r: int, c: int) -> None:
    # the vacated cell is always the last of its row, and a row empties
    # only when it is the bottom row
    assert c == len(rows[r]) - 1
    rows[r].pop()
    if not rows[r]:
        assert r == len(rows) - 1
        del rows[r]


def jdt_slide(
    grid: Iterable[Sequence[int | None]], alpha: Cell | tuple[int, int]
) -> tuple[Grid, Cell]:
    """Slide the hole of a skew configuration out of the diagram.

    The hole is the single None entry of the grid and alpha must address
    it (1-based). Returns the slid grid, with the vacated corner removed,
    and that corner's position.
    """
    rows = [list(row) for row in grid]
    ar, ac = alpha
    holes = [
        (r, c)
        for r, row in enumerate(rows)
        for c, v in enumerate(row)
        if v is None
    ]
    if holes != [(ar - 1, ac - 1)]:
        raise ValueError(f"cell ({ar},{ac}) is not the unique hole of the grid")
    r, c = _slide(rows, ar - 1, ac - 1)
    _remove_corner(rows, r, c)
    validate_grid(rows)
    return tuple(tuple(row) for row in rows), Cell(r + 1, c + 1)


def _as_grid(t: StandardYoungTableau | Iterable[Sequence[int]]) -> Grid:
    if isinstance(t, StandardYoungTableau):
        return t.rows
    return validate_grid(t)


def delta(t: StandardYoungTableau | Iterable[Sequence[int]]) -> tuple[Grid, Cell]:
    """Erase the minimal entry and slide the hole out.

    Accepts a standard tableau or any tableau-like grid (strictly
    increasing rows and columns), since iterated deletion leaves grids
    whose entries are no longer 1..n. Entries are not renumbered. Returns
    the shrunken grid and the vacated corner.
    """
    grid = _as_grid(t)
    if not grid:
        raise ValueError("cannot delete from an empty tableau")
    rows = [list(row) for row in grid]
    # the minimal entry of an increasing grid sits in the top-left cell
    r, c = _slide(rows, 0, 0)
    _remove_corner(rows, r, c)
    return tuple(tuple(row) for row in rows), Cell(r + 1, c + 1)


def evacuation_trace(t: StandardYoungTableau) -> EvacuationTrace:
    """Run n deletions, recording each vacated corner.

    The corner vacated by deletion i (0-based) receives entry n - i, so
    the record is a standard tableau of the original shape.
    """
    n = t.n
    work = [list(row) for row in t.rows]
    out = [[0] * len(row) for row in t.rows]
    vacated: list[Cell] = []
    for i in range(n):
        r, c = _slide(work, 0, 0)
        _remove_corner(work, r, c)
        out[r][c] = n - i
        vacated.append(Cell(r + 1, c + 1))
    return EvacuationTrace(tuple(vacated), StandardYoungTableau(out))


def evacuation(t: StandardYoungTableau) -> StandardYoungTableau:
    """The evacuation tableau; an involution preserving the shape."""
    return evacuation_trace(t).evacuation
