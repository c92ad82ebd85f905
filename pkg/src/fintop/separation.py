"""Separation predicates for finite spaces.

Pairwise separations come in three strengths: one open containing exactly
one of the two points (T0), each point owning an open that excludes the
other (T1), and a disjoint pair of opens (T2).  The relative axioms
t01/t02/t12 ask that every pair separable at the weaker strength is also
separable at the stronger one; t02 is the pre-Hausdorff property.

The implementations here follow the definitions directly over the open-set
family.  The enumeration kernels recompute the same predicates from
specialization rows for speed; tests assert exhaustive agreement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    FiniteSpace,
    closure,
    full_mask,
    interior,
    minimal_basis,
    minimal_open,
)


@dataclass(frozen=True)
class PairSeparation:
    """Witnesses for one pair of points; each field is None when no
    separation of that strength exists.

    t0: one open containing exactly one of the two points.
    t1: ordered pair of opens, each containing its own point and excluding
        the other.
    t2: like t1 but with disjoint opens.
    """

    t0: Optional[int]
    t1: Optional[tuple[int, int]]
    t2: Optional[tuple[int, int]]


SIGNATURE_FIELDS = (
    "t0", "t1", "t2", "t01", "t02", "t12",
    "regular", "normal", "zero_dim", "sober",
)


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t1: bool
    t2: bool
    t01: bool
    t02: bool
    t12: bool
    regular: bool
    normal: bool
    zero_dim: bool
    sober: bool

    def signature(self) -> int:
        """Pack the fields into an int, t0 as the most significant bit."""
        sig = 0
        for name in SIGNATURE_FIELDS:
            sig = sig << 1 | int(getattr(self, name))
        return sig

    @classmethod
    def from_signature(cls, sig: int) -> "SeparationProfile":
        vals = {}
        for name in reversed(SIGNATURE_FIELDS):
            vals[name] = bool(sig & 1)
            sig >>= 1
        return cls(**vals)


def pair_separation(s: FiniteSpace, x: int, y: int) -> PairSeparation:
    """Strongest available witnesses for the pair, first in canonical open
    order (lexicographic on the ordered pair for t1/t2)."""
    if x == y:
        raise ValueError("pair_separation needs two distinct points")
    if not (0 <= x < s.n and 0 <= y < s.n):
        raise ValueError("point out of range")
    t0 = t1 = t2 = None
    for u in s.opens:
        if (u >> x & 1) != (u >> y & 1):
            t0 = u
            break
    x_only = [u for u in s.opens if u >> x & 1 and not (u >> y & 1)]
    y_only = [u for u in s.opens if u >> y & 1 and not (u >> x & 1)]
    if x_only and y_only:
        t1 = (x_only[0], y_only[0])
        t2 = next(
            ((u, v) for u in x_only for v in y_only if u & v == 0),
            None,
        )
    return PairSeparation(t0, t1, t2)


def axiom_profile(s: FiniteSpace) -> SeparationProfile:
    """All axiom predicates of the space in one record.

    Empty and one-point spaces satisfy everything vacuously.
    """
    t0 = t1 = t2 = t01 = t02 = t12 = True
    for x, y in itertools.combinations(range(s.n), 2):
        sep = pair_separation(s, x, y)
        has0, has1, has2 = sep.t0 is not None, sep.t1 is not None, sep.t2 is not None
        t0 &= has0
        t1 &= has1
        t2 &= has2
        t01 &= (not has0) or has1
        t02 &= (not has0) or has2
        t12 &= (not has1) or has2
    return SeparationProfile(
        t0=t0, t1=t1, t2=t2, t01=t01, t02=t02, t12=t12,
        regular=is_regular(s),
        normal=is_normal(s),
        zero_dim=is_zero_dimensional(s),
        sober=is_sober(s),
    )


def is_pre_hausdorff(s: FiniteSpace) -> bool:
    """t02 alone: every T0-separable pair is T2-separable.

    Cheap form used by hot paths: a pair is T0-separable iff the minimal
    opens differ, T2-separable iff they are disjoint.
    """
    rows = [minimal_open(s, 1 << x) for x in range(s.n)]
    return all(
        rows[x] == rows[y] or rows[x] & rows[y] == 0
        for x, y in itertools.combinations(range(s.n), 2)
    )


def is_regular(s: FiniteSpace) -> bool:
    """Disjoint opens around every closed set and outside point.

    On a principal space the smallest open supersets decide the matter, so
    one intersection per (closed set, point) pair suffices.
    """
    for c in s.closed_sets():
        mo_c = minimal_open(s, c)
        for x in range(s.n):
            if not (c >> x & 1) and minimal_open(s, 1 << x) & mo_c:
                return False
    return True


def is_normal(s: FiniteSpace) -> bool:
    """Disjoint opens around every pair of disjoint closed sets."""
    closed = s.closed_sets()
    mo = {c: minimal_open(s, c) for c in closed}
    for a, b in itertools.combinations(closed, 2):
        if a & b == 0 and mo[a] & mo[b]:
            return False
    return True


def is_zero_dimensional(s: FiniteSpace) -> bool:
    """Existence of a clopen basis; the minimal basis is the coarsest basis,
    so checking it decides the question."""
    return all(s.is_closed(b) for b in minimal_basis(s))


def double_negation_is_identity(s: FiniteSpace) -> bool:
    """not(not(U)) = U for every open U, with not(U) = interior(complement)."""
    full = full_mask(s.n)
    for u in s.opens:
        if interior(s, full ^ interior(s, full ^ u)) != u:
            return False
    return True


def irreducible_closed_sets(s: FiniteSpace) -> tuple[int, ...]:
    """Nonempty closed sets that are not a union of two or more smaller
    closed subsets.

    A finite union of smaller closed sets regroups into a union of two, so
    it is enough to compare against the union of all proper closed subsets.
    """
    closed = s.closed_sets()
    out = []
    for c in closed:
        if c == 0:
            continue
        u = 0
        for d in closed:
            if d != c and d & ~c == 0:
                u |= d
        if u != c:
            out.append(c)
    return tuple(out)


def is_sober(s: FiniteSpace) -> bool:
    """Every irreducible closed set has exactly one generic point."""
    for c in irreducible_closed_sets(s):
        generics = sum(1 for x in range(s.n) if closure(s, 1 << x) == c)
        if generics != 1:
            return False
    return True


def is_borel_field(n: int, family: Iterable[int]) -> bool:
    """Nonempty and closed under complement and pairwise union (countable
    closure is the same thing on a finite carrier)."""
    fam = set(family)
    if not fam:
        return False
    full = full_mask(n)
    if any(a & ~full for a in fam):
        raise ValueError("family member contains a point >= n")
    for a in fam:
        if (full ^ a) not in fam:
            return False
    for a, b in itertools.combinations(fam, 2):
        if (a | b) not in fam:
            return False
    return True
