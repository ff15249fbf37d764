"""One-line permutations: reverse/complement/inverse operators and
deterministic lexicographic iteration over the symmetric group."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from math import factorial

__all__ = [
    "MAX_SIZE",
    "Permutation",
    "iterate_sn",
    "next_permutation",
    "unrank",
]

# n! sweeps and tableau sizes stay at desk scale below this bound.
MAX_SIZE = 20


class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    Entries are stored as an immutable tuple. The empty permutation (n = 0)
    is allowed only as an iteration base case. Positions are 1-based in all
    error messages.
    """

    __slots__ = ("entries",)

    def __init__(self, values: Iterable[int]) -> None:
        entries = tuple(values)
        n = len(entries)
        if n > MAX_SIZE:
            raise ValueError(f"size {n} exceeds the supported maximum {MAX_SIZE}")
        seen = [False] * (n + 1)
        for i, v in enumerate(entries, start=1):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"entry {v!r} at position {i} is not an integer")
            if v < 1:
                raise ValueError(f"entry {v} at position {i} is not a positive integer")
            if v > n:
                raise ValueError(f"entry {v} at position {i} exceeds the length {n}")
            if seen[v]:
                raise ValueError(f"duplicate value {v} at position {i}")
            seen[v] = True
        self.entries: tuple[int, ...] = entries

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse "5 2 3 1 4", "5,2,3,1,4", or the compact form "52314" (n <= 9)."""
        s = text.strip()
        if not s:
            raise ValueError("empty permutation text")
        if any(ch in s for ch in " ,\t"):
            values = []
            for token in s.replace(",", " ").split():
                try:
                    values.append(int(token))
                except ValueError:
                    raise ValueError(f"invalid integer {token!r} in permutation text") from None
            return cls(values)
        if s.isdigit():
            if len(s) == 1:
                return cls([int(s)])
            return cls(int(ch) for ch in s)
        raise ValueError(f"cannot parse permutation from {text!r}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def reverse(self) -> "Permutation":
        """w_n ... w_1."""
        return Permutation(self.entries[::-1])

    def complement(self) -> "Permutation":
        """(n+1-w_1) ... (n+1-w_n)."""
        m = len(self.entries) + 1
        return Permutation(m - v for v in self.entries)

    def inverse(self) -> "Permutation":
        """The permutation whose entry at position w_i is i."""
        inv = [0] * len(self.entries)
        for i, v in enumerate(self.entries, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))

    def __repr__(self) -> str:
        return f"Permutation({list(self.entries)})"


def next_permutation(values: list[int]) -> bool:
    """Advance to the lexicographic successor in place.

    Returns False (leaving the list unchanged) when the input is already the
    lexicographic maximum.
    """
    i = len(values) - 2
    while i >= 0 and values[i] >= values[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(values) - 1
    while values[j] <= values[i]:
        j -= 1
    values[i], values[j] = values[j], values[i]
    values[i + 1 :] = values[i + 1 :][::-1]
    return True


def unrank(n: int, r: int) -> Permutation:
    """The r-th permutation of S_n in lexicographic order, 0 <= r < n!.

    Digits of r in the factorial number system index into the pool of unused
    values, so unrank is a bijection from [0, n!) onto S_n.
    """
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    total = factorial(n)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {n}!) = [0, {total})")
    pool = list(range(1, n + 1))
    out = []
    block = total
    for k in range(n, 0, -1):
        block //= k
        idx, r = divmod(r, block)
        out.append(pool.pop(idx))
    return Permutation(out)


def iterate_sn(n: int) -> Iterator[Permutation]:
    """Yield all n! permutations of S_n in lexicographic order.

    For n = 0 yields the empty permutation once.
    """
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    current = list(range(1, n + 1))
    while True:
        yield Permutation(current)
        if not next_permutation(current):
            return
