"""Integer partition shapes and standard Young tableaux: validation,
transposition, hook predicates, enumeration, and hook-length counting."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import chain
from math import factorial
from typing import NamedTuple

__all__ = [
    "Cell",
    "Shape",
    "StandardYoungTableau",
    "count_syt",
    "enumerate_syt",
    "partitions",
    "validate_grid",
]


class Cell(NamedTuple):
    """1-based (row, column) position in a Young diagram."""

    row: int
    col: int


class Shape:
    """An integer partition drawn as a left-justified Young diagram.

    Parts weakly decrease and are all positive; the empty shape is legal.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]) -> None:
        parts = tuple(parts)
        previous = None
        for i, p in enumerate(parts, start=1):
            if not isinstance(p, int) or isinstance(p, bool):
                raise ValueError(f"part {p!r} at index {i} is not an integer")
            if p < 1:
                raise ValueError(f"part {p} at index {i} is not positive")
            if previous is not None and p > previous:
                raise ValueError(
                    f"parts must weakly decrease: part {p} at index {i} exceeds {previous}"
                )
            previous = p
        self.parts: tuple[int, ...] = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Shape":
        """Transpose the diagram: part j of the result counts parts >= j."""
        if not self.parts:
            return Shape(())
        return Shape(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def is_hook(self) -> bool:
        """True for (k, 1, 1, ..., 1).

        The single cell (1) counts as a hook; a bare row (k) with k >= 2
        does not.
        """
        if not self.parts:
            raise ValueError("empty shape")
        if self.parts == (1,):
            return True
        return len(self.parts) >= 2 and all(p == 1 for p in self.parts[1:])

    def is_symmetric_hook(self) -> bool:
        """A hook equal to its conjugate: ((n+1)/2, 1^((n-1)/2)), n odd."""
        if not self.parts:
            raise ValueError("empty shape")
        return self.is_hook() and self.conjugate() == self

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Shape):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Shape({list(self.parts)})"


def validate_grid(rows: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Validate a tableau-like grid and return it as nested tuples.

    Row lengths must form a partition, entries must be distinct positive
    integers, and entries must strictly increase along rows and down
    columns. Entries need not be exactly 1..n, so partially evacuated
    grids are accepted.
    """
    grid = tuple(tuple(row) for row in rows)
    for r, row in enumerate(grid, start=1):
        if len(row) == 0:
            raise ValueError(f"row {r} is empty")
        if r >= 2 and len(row) > len(grid[r - 2]):
            raise ValueError(
                f"row lengths must weakly decrease: row {r} is longer than row {r - 1}"
            )
    seen: dict[int, Cell] = {}
    for r, row in enumerate(grid, start=1):
        for c, v in enumerate(row, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"entry {v!r} at cell ({r},{c}) is not an integer")
            if v < 1:
                raise ValueError(f"entry {v} at cell ({r},{c}) is not positive")
            if v in seen:
                raise ValueError(f"duplicate entry {v} at cell ({r},{c})")
            seen[v] = Cell(r, c)
            if c >= 2 and row[c - 2] >= v:
                raise ValueError(f"row order violated at ({r},{c})")
            if r >= 2 and grid[r - 2][c - 1] >= v:
                raise ValueError(f"column order violated at ({r},{c})")
    return grid


class StandardYoungTableau:
    """A ragged grid filled with 1..n, strictly increasing along rows and
    down columns."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence[int]]) -> None:
        grid = validate_grid(rows)
        n = sum(len(row) for row in grid)
        present = {v for row in grid for v in row}
        # validate_grid rejects duplicates, so the n distinct entries are
        # exactly 1..n as soon as none of 1..n is missing
        for v in range(1, n + 1):
            if v not in present:
                raise ValueError(f"missing entry {v}: entries must be exactly 1..{n}")
        self.rows: tuple[tuple[int, ...], ...] = grid

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def shape(self) -> Shape:
        return Shape(len(row) for row in self.rows)

    def transpose(self) -> "StandardYoungTableau":
        """Reflect across the main diagonal: cell (i,j) moves to (j,i)."""
        if not self.rows:
            return StandardYoungTableau(())
        cols = []
        for j in range(len(self.rows[0])):
            cols.append(tuple(row[j] for row in self.rows if len(row) > j))
        return StandardYoungTableau(cols)

    def cell_of(self, value: int) -> Cell:
        """Locate an entry; raises ValueError when absent."""
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                if v == value:
                    return Cell(r, c)
        raise ValueError(f"entry {value} not present")

    def reading_word(self) -> tuple[int, ...]:
        """Concatenation of the rows, top row first."""
        return tuple(chain.from_iterable(self.rows))

    def ascii(self) -> str:
        """One row per line, cells space-separated."""
        return "\n".join(" ".join(map(str, row)) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StandardYoungTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardYoungTableau({[list(row) for row in self.rows]})"


def partitions(n: int) -> Iterator[Shape]:
    """All partitions of n, in decreasing lexicographic order of parts."""
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    for parts in gen(n, n):
        yield Shape(parts)


def enumerate_syt(shape: Shape) -> list[StandardYoungTableau]:
    """All standard Young tableaux of the given shape.

    Built by recursively removing the largest entry from a corner, then
    sorted by reading word so the order is deterministic.
    """
    tableaux = [StandardYoungTableau(rows) for rows in _fillings(shape.parts)]
    tableaux.sort(key=StandardYoungTableau.reading_word)
    return tableaux


def _fillings(parts: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    n = sum(parts)
    if n == 0:
        return [()]
    out = []
    for r in range(len(parts)):
        if r + 1 < len(parts) and parts[r + 1] == parts[r]:
            continue  # not a corner: the row below is equally long
        child = list(parts)
        child[r] -= 1
        if child[r] == 0:
            child.pop()
        for rows in _fillings(tuple(child)):
            if r < len(rows):
                grown = rows[:r] + (rows[r] + (n,),) + rows[r + 1 :]
            else:
                grown = rows + ((n,),)
            out.append(grown)
    return out


def count_syt(shape: Shape) -> int:
    """Number of standard Young tableaux of the given shape, by the
    hook-length formula: n! divided by the product of all hook lengths."""
    n = shape.size
    if n == 0:
        return 1
    conj = shape.conjugate().parts
    hook_product = 1
    for i, p in enumerate(shape.parts):
        for j in range(p):
            hook_product *= (p - j) + (conj[j] - i) - 1
    return factorial(n) // hook_product
