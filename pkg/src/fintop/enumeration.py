"""Exhaustive generation and exact counting of finite topologies.

Topologies are enumerated through their specialization preorders (the
open-family search space is astronomically larger and survives only as the
brute-force oracle in the test suite).  Pre-Hausdorff topologies are
enumerated as set partitions in restricted-growth-string order.  Both
stream orders are deterministic and part of the public contract.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import kernels
from .core import (
    FiniteSpace,
    SizeLimit,
    _space_from_rows,
    full_mask,
    minimal_basis,
    partition_from_labels,
    space_from_partition,
    up_rows,
)
from .separation import SIGNATURE_FIELDS, is_pre_hausdorff
from .reflectors import NotPreHausdorff, _preH_witness

MAX_ENUM_POINTS = 7
MAX_PARTITION_POINTS = 12

_T02_BIT = 9 - SIGNATURE_FIELDS.index("t02")


def _row_prefixes(n: int) -> Iterator[int]:
    """First-row assignments (off-diagonal bits of row 0) in the order the
    full lexicographic DFS visits them; used to split enumeration work."""
    for bits in itertools.product((0, 1), repeat=n - 1):
        yield sum(b << (k + 1) for k, b in enumerate(bits))


def _unpack(packed: int, n: int) -> tuple[int, ...]:
    fm = full_mask(n)
    return tuple((packed >> (i * n)) & fm for i in range(n))


def enumerate_preorder_rows(n: int) -> Iterator[tuple[int, ...]]:
    """Minimal-open row tuples of every topology on n labeled points,
    exactly once, in lexicographic order of the preorder matrix."""
    if not (0 <= n <= MAX_ENUM_POINTS):
        raise SizeLimit(f"topology enumeration supports n <= {MAX_ENUM_POINTS}")
    if n == 0:
        yield ()
        return
    if n <= 4:
        for packed in kernels.preorder_matrices(n):
            yield _unpack(int(packed), n)
        return
    # chunk by row-0 prefix to bound peak memory at larger n
    for prefix in _row_prefixes(n):
        for packed in kernels.preorder_matrices(n, prefix):
            yield _unpack(int(packed), n)


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """Every topology on n labeled points, exactly once, in the order of
    enumerate_preorder_rows."""
    for rows in enumerate_preorder_rows(n):
        yield _space_from_rows(n, rows)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All RGS of length n in lexicographic order: a[0] = 0 and
    a[i] <= max(a[:i]) + 1."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    b = [0] * n  # b[i] = max(a[:i])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == b[i] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        nb = max(b[i], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = nb


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of {0..n-1} in restricted-growth-string order."""
    for rgs in restricted_growth_strings(n):
        yield partition_from_labels(list(rgs)) if n else ()


def enumerate_pre_hausdorff(n: int) -> Iterator[FiniteSpace]:
    """Every pre-Hausdorff topology on n labeled points, exactly once, as
    the partition spaces in restricted-growth-string order."""
    if not (0 <= n <= MAX_PARTITION_POINTS):
        raise SizeLimit(f"pre-Hausdorff enumeration supports n <= {MAX_PARTITION_POINTS}")
    if n == 0:
        yield FiniteSpace(0, (0,))
        return
    for p in set_partitions(n):
        yield space_from_partition(n, p)


# ---------------------------------------------------------------------------
# Exact counting
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    """Number of set partitions of an n-set, via the Bell triangle."""
    if not (0 <= n <= 500):
        raise SizeLimit("bell_number supports 0 <= n <= 500")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


@functools.lru_cache(maxsize=None)
def integer_partition_count(n: int) -> int:
    """Number of integer partitions of n, via Euler's pentagonal recurrence."""
    if not (0 <= n <= 10000):
        raise SizeLimit("integer_partition_count supports 0 <= n <= 10000")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusTable:
    """Exact tally of topologies on n labeled points by separation-profile
    signature.  ``rows`` is sorted ascending by signature (t0 the most
    significant bit)."""

    n: int
    rows: tuple[tuple[int, int], ...]
    total: int

    @property
    def pre_hausdorff_total(self) -> int:
        return sum(c for sig, c in self.rows if sig >> _T02_BIT & 1)

    def count(self, signature: int) -> int:
        return dict(self.rows).get(signature, 0)


def _census_task(args: tuple[int, int]):
    n, first_row = args
    return kernels.signature_counts(n, first_row)


def census(
    n: int,
    workers: int = 1,
    allow_large: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> CensusTable:
    """Separation census of all topologies on n labeled points.

    Work splits into disjoint sub-searches by the first preorder row; the
    per-signature tallies merge by pointwise addition, so the result is
    identical for any worker count.  n = 7 (9,535,241 topologies) must be
    opted into with ``allow_large``.
    """
    if not (0 <= n <= 7):
        raise SizeLimit("census supports n <= 7")
    if n == 7 and not allow_large:
        raise SizeLimit("census at n = 7 requires allow_large")
    if n == 0:
        counts = kernels.signature_counts(0)
    else:
        tasks = [(n, prefix) for prefix in _row_prefixes(n)]
        if workers <= 1 or len(tasks) == 1:
            results = []
            for k, t in enumerate(tasks):
                results.append(_census_task(t))
                if progress:
                    progress(k + 1, len(tasks))
        else:
            import multiprocessing

            with multiprocessing.Pool(min(workers, len(tasks))) as pool:
                results = []
                for k, res in enumerate(pool.imap(_census_task, tasks)):
                    results.append(res)
                    if progress:
                        progress(k + 1, len(tasks))
        counts = sum(results)
    rows = tuple((sig, int(c)) for sig, c in enumerate(counts) if c)
    return CensusTable(n=n, rows=rows, total=int(counts.sum()))


CSV_HEADER = "n," + ",".join(SIGNATURE_FIELDS) + ",count"


def census_to_csv(table: CensusTable) -> str:
    """Bit-exact CSV rendering: header, then one row per signature with
    boolean columns as 0/1, sorted ascending by signature."""
    lines = [CSV_HEADER]
    for sig, count in sorted(table.rows):
        bits = ",".join(str(sig >> (9 - k) & 1) for k in range(10))
        lines.append(f"{table.n},{bits},{count}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Homeomorphism classification
# ---------------------------------------------------------------------------

def preH_invariant(s: FiniteSpace) -> tuple[int, ...]:
    """Block-size multiset (descending) of the minimal-basis partition; a
    complete homeomorphism invariant for finite pre-Hausdorff spaces."""
    if not is_pre_hausdorff(s):
        raise NotPreHausdorff(_preH_witness(s))
    return tuple(sorted((b.bit_count() for b in minimal_basis(s)), reverse=True))


def _general_homeomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    """Search for a specialization-preorder isomorphism, pruned by per-point
    (|up|, |down|) signatures."""
    n = a.n
    ra, rb = up_rows(a), up_rows(b)

    def down(rows):
        d = [0] * n
        for x in range(n):
            r = rows[x]
            while r:
                low = r & -r
                d[low.bit_length() - 1] |= 1 << x
                r ^= low
        return d

    da, db = down(ra), down(rb)
    sig_a = [(ra[x].bit_count(), da[x].bit_count()) for x in range(n)]
    sig_b = [(rb[x].bit_count(), db[x].bit_count()) for x in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return False
    phi = [-1] * n
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return True
        for y in range(n):
            if used[y] or sig_a[x] != sig_b[y]:
                continue
            ok = True
            for x2 in range(x):
                if (ra[x] >> x2 & 1) != (rb[y] >> phi[x2] & 1):
                    ok = False
                    break
                if (ra[x2] >> x & 1) != (rb[phi[x2]] >> y & 1):
                    ok = False
                    break
            if ok:
                phi[x] = y
                used[y] = True
                if extend(x + 1):
                    return True
                used[y] = False
                phi[x] = -1
        return False

    return extend(0)


def are_homeomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    """Fast invariant comparison when both spaces are pre-Hausdorff,
    bijection search otherwise (n <= 8)."""
    if a.n != b.n or len(a.opens) != len(b.opens):
        return False
    if is_pre_hausdorff(a) and is_pre_hausdorff(b):
        return preH_invariant(a) == preH_invariant(b)
    if max(a.n, b.n) > 8:
        raise SizeLimit("general homeomorphism search supports n <= 8")
    return _general_homeomorphic(a, b)


def count_preH_classes(n: int) -> int:
    """Number of homeomorphism classes of pre-Hausdorff topologies on n
    points = p(n); verified by exhaustive bucketing when n <= 7."""
    p = integer_partition_count(n)
    if 0 < n <= 7:
        buckets = {preH_invariant(s) for s in enumerate_pre_hausdorff(n)}
        if len(buckets) != p:
            raise RuntimeError(
                f"class count mismatch at n={n}: bucketed {len(buckets)}, p(n)={p}"
            )
    return p
