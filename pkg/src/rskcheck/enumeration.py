"""Exhaustive sweeps over symmetric groups and tableau families: set
counts, memberships, and machine-readable verification reports.

Work is split into contiguous lexicographic rank intervals; each worker
process scans its interval with the definitional predicates and results
merge by pure summation/conjunction, so every count and verdict is
independent of the worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, factorial
from pathlib import Path
from typing import Callable, Literal

from .evacuation import evacuation
from .permutations import Permutation, next_permutation, unrank
from .reverse_maps import (
    is_in_M,
    phi,
    satisfies_first_row_property,
    theta,
)
from .rsk import recording_cells, rsk, same_recording_tableau
from .tableaux import Shape, StandardYoungTableau, enumerate_syt

__all__ = [
    "DEFAULT_MAX_COUNT_N",
    "DEFAULT_MAX_LIST_N",
    "SetName",
    "VerificationReport",
    "append_reports",
    "count_H",
    "count_M",
    "count_R",
    "count_R_formula",
    "list_set",
    "symmetric_hook_shape",
    "verify_R_transport",
    "verify_characterization",
    "verify_count_theorem",
    "verify_phi_theta",
    "verify_symmetry_relations",
]

DEFAULT_MAX_COUNT_N = 11
DEFAULT_MAX_LIST_N = 8

SetName = Literal["R", "H", "M"]


@dataclass(frozen=True)
class VerificationReport:
    """One verified claim: what was observed, what was expected, timing."""

    check: str
    n: int
    observed: int | bool
    expected: int | bool
    formula: int | None
    passed: bool
    elapsed_ms: int
    workers: int
    detail: str | None = None  # diagnostics only; not part of the JSON schema

    def as_dict(self) -> dict[str, object]:
        return {
            "check": self.check,
            "n": self.n,
            "observed": self.observed,
            "expected": self.expected,
            "formula": self.formula,
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms,
            "workers": self.workers,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))


def append_reports(reports: list[VerificationReport], path: str | Path) -> None:
    """Append reports to a JSON-lines file, one report per line."""
    with Path(path).open("a", encoding="utf-8") as handle:
        for report in reports:
            handle.write(report.to_json() + "\n")


def count_R_formula(n: int) -> int:
    """Closed form for the reverse-stable count: 2^((n-1)/2) * C(n-1, (n-1)/2)
    for odd n, 0 for even n."""
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    if n % 2 == 0:
        return 0
    half = (n - 1) // 2
    return 2**half * comb(n - 1, half)


def symmetric_hook_shape(n: int) -> Shape:
    """The unique self-conjugate hook of odd size n: ((n+1)/2, 1^((n-1)/2))."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"no symmetric hook shape exists for n={n}")
    return Shape(((n + 1) // 2,) + (1,) * ((n - 1) // 2))


# ---------------------------------------------------------------------------
# rank-interval scanning


def _chunk_ranks(total: int, workers: int) -> list[tuple[int, int]]:
    pieces = max(1, min(workers, total))
    base, extra = divmod(total, pieces)
    bounds = [0]
    for i in range(pieces):
        bounds.append(bounds[-1] + base + (1 if i < extra else 0))
    return [(bounds[i], bounds[i + 1]) for i in range(pieces)]


def _run_over_ranks(worker: Callable, n: int, workers: int) -> list:
    total = factorial(n)
    argses = [(n, lo, hi) for lo, hi in _chunk_ranks(total, workers)]
    if workers <= 1 or len(argses) == 1:
        return [worker(args) for args in argses]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, argses))


def _scan_count_r(args: tuple[int, int, int]) -> int:
    n, start, stop = args
    same = same_recording_tableau
    advance = next_permutation
    w = list(unrank(n, start).entries)
    count = 0
    for _ in range(stop - start):
        if same(w, w[::-1]):
            count += 1
        advance(w)
    return count


def _scan_count_h(args: tuple[int, int, int]) -> int:
    n, start, stop = args
    advance = next_permutation
    w = list(unrank(n, start).entries)
    count = 0
    for _ in range(stop - start):
        lengths = _recording_row_lengths(w)
        if Shape(lengths).is_symmetric_hook():
            count += 1
        advance(w)
    return count


def _recording_row_lengths(values: list[int]) -> list[int]:
    lengths: list[int] = []
    for cell in recording_cells(values):
        if cell.row > len(lengths):
            lengths.append(1)
        else:
            lengths[cell.row - 1] += 1
    return lengths


def _scan_list_r(args: tuple[int, int, int]) -> list[tuple[int, ...]]:
    n, start, stop = args
    w = list(unrank(n, start).entries)
    members = []
    for _ in range(stop - start):
        if same_recording_tableau(w, w[::-1]):
            members.append(tuple(w))
        next_permutation(w)
    return members


def _scan_list_h(args: tuple[int, int, int]) -> list[tuple[int, ...]]:
    n, start, stop = args
    w = list(unrank(n, start).entries)
    members = []
    for _ in range(stop - start):
        if Shape(_recording_row_lengths(w)).is_symmetric_hook():
            members.append(tuple(w))
        next_permutation(w)
    return members


def _scan_characterization(args: tuple[int, int, int]) -> tuple[int, str | None]:
    n, start, stop = args
    w = list(unrank(n, start).entries)
    failures = 0
    first: str | None = None
    for _ in range(stop - start):
        cells = recording_cells(w)
        q_rows: list[list[int]] = []
        for step, cell in enumerate(cells, start=1):
            if cell.row > len(q_rows):
                q_rows.append([step])
            else:
                q_rows[cell.row - 1].append(step)
        q = StandardYoungTableau(q_rows)
        characterized = q.shape.is_symmetric_hook() and satisfies_first_row_property(q)
        definitional = same_recording_tableau(w, w[::-1])
        if definitional != characterized:
            failures += 1
            if first is None:
                first = " ".join(map(str, w))
        next_permutation(w)
    return failures, first


def _scan_symmetry(args: tuple[int, int, int]) -> tuple[bool, str | None]:
    n, start, stop = args
    w = list(unrank(n, start).entries)
    for _ in range(stop - start):
        failure = _relations_failure(Permutation(w))
        if failure is not None:
            return False, failure
        next_permutation(w)
    return True, None


def _relations_failure(w: Permutation) -> str | None:
    """Check the eight tableau-pair identities tying a permutation's
    reverse, complement, and inverse to transposes and evacuations."""
    pair = rsk(w)
    p, q = pair.p, pair.q
    ep, eq = evacuation(p), evacuation(q)
    pt, qt = p.transpose(), q.transpose()
    ept, eqt = ep.transpose(), eq.transpose()
    wi = w.inverse()
    cases = (
        ("identity", w, p, q),
        ("complement", w.complement(), ept, qt),
        ("reverse", w.reverse(), pt, eqt),
        ("reverse-complement", w.reverse().complement(), ep, eq),
        ("inverse", wi, q, p),
        ("inverse-complement", wi.complement(), eqt, pt),
        ("inverse-reverse", wi.reverse(), qt, ept),
        ("inverse-reverse-complement", wi.reverse().complement(), eq, ep),
    )
    for name, v, expect_p, expect_q in cases:
        got = rsk(v)
        if got.p != expect_p or got.q != expect_q:
            return f"{name} relation fails for {w}"
    return None


def _scan_phi_sources(
    args: tuple[int, int, int]
) -> tuple[bool, str | None, set[tuple[int, ...]]]:
    n, start, stop = args
    m = n + 2
    images: set[tuple[int, ...]] = set()
    ok = True
    detail: str | None = None
    w_list = list(unrank(n, start).entries)
    for _ in range(stop - start):
        w = Permutation(w_list)
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                if a == b:
                    continue
                lifted = phi(w, a, b)
                images.add(lifted.entries)
                if theta(lifted) != w:
                    ok = False
                    if detail is None:
                        detail = f"projection fails to undo lift ({a},{b}) of {w}"
        next_permutation(w_list)
    return ok, detail, images


def _scan_theta_equivariance(args: tuple[int, int, int]) -> tuple[bool, str | None]:
    m, start, stop = args
    w_list = list(unrank(m, start).entries)
    for _ in range(stop - start):
        v = Permutation(w_list)
        if theta(v.reverse()) != theta(v).reverse():
            return False, f"projection does not commute with reverse on {v}"
        if theta(v.complement()) != theta(v).complement():
            return False, f"projection does not commute with complement on {v}"
        next_permutation(w_list)
    return True, None


def _scan_transport(args: tuple[int, int, int]) -> tuple[bool, str | None, int]:
    m, start, stop = args
    w_list = list(unrank(m, start).entries)
    members = 0
    ok = True
    detail: str | None = None
    for _ in range(stop - start):
        if same_recording_tableau(w_list, w_list[::-1]):
            members += 1
            v = Permutation(w_list)
            projected = theta(v)
            if not same_recording_tableau(
                projected.entries, projected.entries[::-1]
            ):
                ok = False
                if detail is None:
                    detail = f"projection of {v} leaves the reverse-stable set"
            elif phi(projected, v.entries[0], v.entries[-1]) != v:
                ok = False
                if detail is None:
                    detail = f"endpoint lift does not reassemble {v}"
        next_permutation(w_list)
    return ok, detail, members


# ---------------------------------------------------------------------------
# counting and listing


def _check_count_range(n: int, max_n: int) -> None:
    if not 1 <= n <= max_n:
        raise ValueError(f"n={n} outside the configured range [1, {max_n}]")


def count_R(n: int, *, workers: int = 1, max_n: int = DEFAULT_MAX_COUNT_N) -> int:
    """Brute-force count of permutations sharing a recording tableau with
    their reverse."""
    _check_count_range(n, max_n)
    return sum(_run_over_ranks(_scan_count_r, n, workers))


def count_H(n: int, *, workers: int = 1, max_n: int = DEFAULT_MAX_COUNT_N) -> int:
    """Brute-force count of permutations whose recording tableau has
    symmetric hook shape."""
    _check_count_range(n, max_n)
    return sum(_run_over_ranks(_scan_count_h, n, workers))


def count_M(n: int, *, max_n: int = DEFAULT_MAX_COUNT_N) -> int:
    """Count the symmetric-hook tableaux fixed by evacuation-transpose.

    Even sizes have no symmetric hook shape, so the count is 0 rather than
    an error.
    """
    _check_count_range(n, max_n)
    if n % 2 == 0:
        return 0
    return sum(1 for t in enumerate_syt(symmetric_hook_shape(n)) if is_in_M(t))


def list_set(
    which: SetName,
    n: int,
    *,
    workers: int = 1,
    list_max: int = DEFAULT_MAX_LIST_N,
    max_n: int = DEFAULT_MAX_COUNT_N,
) -> list[Permutation] | list[StandardYoungTableau]:
    """Materialize the members of R_n, H_n, or M_n in deterministic order.

    R and H are lists of permutations in lexicographic order; M is the
    list of qualifying symmetric-hook tableaux in reading-word order.
    """
    if which == "M":
        _check_count_range(n, max_n)
        if n % 2 == 0:
            return []
        return [t for t in enumerate_syt(symmetric_hook_shape(n)) if is_in_M(t)]
    if which not in ("R", "H"):
        raise ValueError(f"unknown set {which!r}: expected R, H, or M")
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    if n > list_max:
        raise ValueError(
            f"listing is capped at n={list_max} (counting is still allowed)"
        )
    scan = _scan_list_r if which == "R" else _scan_list_h
    members: list[Permutation] = []
    for chunk in _run_over_ranks(scan, n, workers):
        members.extend(Permutation(entries) for entries in chunk)
    return members


# ---------------------------------------------------------------------------
# verification sweeps


def verify_count_theorem(
    n_max: int, *, workers: int = 1, max_n: int = DEFAULT_MAX_COUNT_N
) -> list[VerificationReport]:
    """Compare the brute-force reverse-stable count with its closed form
    for every size up to n_max."""
    _check_count_range(n_max, max_n)
    reports = []
    for n in range(1, n_max + 1):
        started = time.perf_counter()
        observed = count_R(n, workers=workers, max_n=max_n)
        formula = count_R_formula(n)
        reports.append(
            VerificationReport(
                check="count_R",
                n=n,
                observed=observed,
                expected=formula,
                formula=formula,
                passed=observed == formula,
                elapsed_ms=int((time.perf_counter() - started) * 1000),
                workers=workers,
            )
        )
    return reports


def verify_characterization(
    n_max: int, *, workers: int = 1, max_n: int = DEFAULT_MAX_COUNT_N
) -> list[VerificationReport]:
    """Check, for every permutation up to size n_max, that the definitional
    reverse-stability test agrees with the symmetric-hook plus first-row
    characterization of the recording tableau."""
    _check_count_range(n_max, max_n)
    reports = []
    for n in range(1, n_max + 1):
        started = time.perf_counter()
        failures = 0
        first: str | None = None
        for chunk_failures, chunk_first in _run_over_ranks(
            _scan_characterization, n, workers
        ):
            failures += chunk_failures
            if first is None:
                first = chunk_first
        reports.append(
            VerificationReport(
                check="characterization",
                n=n,
                observed=failures == 0,
                expected=True,
                formula=None,
                passed=failures == 0,
                elapsed_ms=int((time.perf_counter() - started) * 1000),
                workers=workers,
                detail=None if first is None else f"first counterexample: {first}",
            )
        )
    return reports


def verify_symmetry_relations(n: int, *, workers: int = 1) -> VerificationReport:
    """Check the eight tableau-pair identities for every permutation of
    size n."""
    if not 1 <= n <= 7:
        raise ValueError(f"n={n} outside the supported range [1, 7]")
    started = time.perf_counter()
    ok = True
    detail: str | None = None
    for chunk_ok, chunk_detail in _run_over_ranks(_scan_symmetry, n, workers):
        if not chunk_ok and detail is None:
            detail = chunk_detail
        ok = ok and chunk_ok
    return VerificationReport(
        check="symmetry_relations",
        n=n,
        observed=ok,
        expected=True,
        formula=None,
        passed=ok,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
        workers=workers,
        detail=detail,
    )


def verify_phi_theta(n: int, *, workers: int = 1) -> VerificationReport:
    """Check that projection undoes every lift of every size-n permutation,
    that the lift images tile the symmetric group two sizes up exactly, and
    that projection commutes with reverse and complement there."""
    if not 1 <= n <= 6:
        raise ValueError(f"n={n} outside the supported range [1, 6]")
    started = time.perf_counter()
    ok = True
    detail: str | None = None
    images: set[tuple[int, ...]] = set()
    for chunk_ok, chunk_detail, chunk_images in _run_over_ranks(
        _scan_phi_sources, n, workers
    ):
        if not chunk_ok and detail is None:
            detail = chunk_detail
        ok = ok and chunk_ok
        images |= chunk_images
    expected_images = factorial(n + 2)
    if len(images) != expected_images:
        ok = False
        if detail is None:
            detail = (
                f"lift images cover {len(images)} of {expected_images} permutations"
            )
    for chunk_ok, chunk_detail in _run_over_ranks(
        _scan_theta_equivariance, n + 2, workers
    ):
        if not chunk_ok and detail is None:
            detail = chunk_detail
        ok = ok and chunk_ok
    return VerificationReport(
        check="phi_theta",
        n=n,
        observed=ok,
        expected=True,
        formula=None,
        passed=ok,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
        workers=workers,
        detail=detail,
    )


def verify_R_transport(
    n: int, *, workers: int = 1, max_n: int = DEFAULT_MAX_COUNT_N
) -> VerificationReport:
    """Check that projecting any reverse-stable permutation of size n+2
    lands in the reverse-stable set of size n, and that lifting it back by
    its endpoints reassembles the original."""
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    _check_count_range(n + 2, max_n)
    started = time.perf_counter()
    ok = True
    detail: str | None = None
    members = 0
    for chunk_ok, chunk_detail, chunk_members in _run_over_ranks(
        _scan_transport, n + 2, workers
    ):
        if not chunk_ok and detail is None:
            detail = chunk_detail
        ok = ok and chunk_ok
        members += chunk_members
    return VerificationReport(
        check="r_transport",
        n=n,
        observed=ok,
        expected=True,
        formula=None,
        passed=ok,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
        workers=workers,
        detail=f"checked {members} members" if ok else detail,
    )
