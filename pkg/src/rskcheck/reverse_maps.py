"""Size-raising maps between neighboring symmetric groups and the
membership predicates for the reverse-stable sets.

phi lifts a permutation of n to one of n+2 by prepending a chosen first
letter a and appending a chosen last letter b, shifting the interior
entries just enough to keep all relative orders while freeing the two new
values. theta is the shared left inverse: drop the endpoints and close
the two gaps their values leave behind.

The three predicates classify by recording tableau: is_in_R holds when a
permutation and its reverse share a recording tableau, is_in_H when the
recording tableau has symmetric hook shape, and is_in_M when a tableau is
fixed by evacuation followed by transposition.
"""

from __future__ import annotations

from typing import NamedTuple

from .evacuation import evacuation
from .permutations import Permutation
from .rsk import rsk, same_recording_tableau
from .tableaux import StandardYoungTableau

__all__ = [
    "PhiParameters",
    "is_in_H",
    "is_in_M",
    "is_in_R",
    "phi",
    "phi_parameters_of",
    "satisfies_first_row_property",
    "theta",
]


class PhiParameters(NamedTuple):
    """The prepended first letter a and appended last letter b of a lift."""

    a: int
    b: int


def phi(w: Permutation, a: int, b: int) -> Permutation:
    """Lift w into the symmetric group two sizes up.

    The result starts with a and ends with b; interior entry i+1 is w_i
    shifted up by 0, 1, or 2 so that the values a and b stay free: with
    c = min(a, b) and d = max(a, b), entries below c are kept, entries in
    [c, d-1) move up one, and entries >= d-1 move up two.
    """
    m = w.n + 2
    for name, value in (("a", a), ("b", b)):
        if not 1 <= value <= m:
            raise ValueError(f"parameter {name}={value} outside [1, {m}]")
    if a == b:
        raise ValueError(f"parameters must differ, got a = b = {a}")
    c, d = (a, b) if a < b else (b, a)
    out = [a]
    for v in w.entries:
        if v < c:
            out.append(v)
        elif v < d - 1:
            out.append(v + 1)
        else:
            out.append(v + 2)
    out.append(b)
    return Permutation(out)


def theta(w: Permutation) -> Permutation:
    """Drop the endpoints and close the gaps their values leave.

    With c = min(w_1, w_n) and d = max(w_1, w_n), each interior entry is
    lowered by 0, 1, or 2 according to whether it sits below c, between c
    and d, or above d. All relative orders among interior entries are
    preserved, and theta(phi(w, a, b)) = w for every valid (a, b).
    """
    if w.n < 3:
        raise ValueError(f"requires size at least 3, got {w.n}")
    first, last = w.entries[0], w.entries[-1]
    c, d = (first, last) if first < last else (last, first)
    out = []
    for v in w.entries[1:-1]:
        if v < c:
            out.append(v)
        elif v < d:
            out.append(v - 1)
        else:
            out.append(v - 2)
    return Permutation(out)


def phi_parameters_of(w: Permutation) -> PhiParameters:
    """The unique lift parameters recovering w: its first and last entries."""
    if w.n < 3:
        raise ValueError(f"requires size at least 3, got {w.n}")
    params = PhiParameters(w.entries[0], w.entries[-1])
    assert phi(theta(w), params.a, params.b) == w
    return params


def is_in_R(w: Permutation) -> bool:
    """Whether w and its reverse produce the same recording tableau.

    Decided by running both insertion sequences, never by the
    symmetric-hook/first-row characterization, so this predicate can serve
    as the independent oracle for that characterization.
    """
    if w.n < 1:
        raise ValueError("requires a nonempty permutation")
    return same_recording_tableau(w.entries, w.entries[::-1])


def is_in_H(w: Permutation) -> bool:
    """Whether the recording tableau of w has symmetric hook shape."""
    if w.n < 1:
        raise ValueError("requires a nonempty permutation")
    return rsk(w).q.shape.is_symmetric_hook()


def satisfies_first_row_property(t: StandardYoungTableau) -> bool:
    """Whether every first-row entry i > 1 pairs with n - i + 2 in column 1."""
    if not t.rows:
        return True
    n = t.n
    first_column = {row[0] for row in t.rows}
    return all(n - i + 2 in first_column for i in t.rows[0] if i > 1)


def is_in_M(t: StandardYoungTableau) -> bool:
    """Whether t is fixed by evacuation followed by transposition.

    Computed by actually evacuating, never by the first-row shortcut, so
    the two routes stay independent.
    """
    return evacuation(t).transpose() == t
