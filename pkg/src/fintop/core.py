"""Finite topological spaces on points {0..n-1}.

A space is stored as its full family of open sets, each open set being an
int bitmask (bit x set <=> point x is a member).  Bitmasks keep membership,
union, intersection and complement at single machine-word cost, which is
what the enumeration loops live on.  The point count is capped at 62 so a
subset always fits one unsigned 64-bit word.

Every value here is immutable and every operation is a pure function, so
everything can be shared freely across worker processes.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_POINTS = 62


class NotATopology(ValueError):
    """The given family of sets is not a topology (message carries a witness)."""


class SizeLimit(ValueError):
    """Input exceeds the supported size bound for this operation."""


# ---------------------------------------------------------------------------
# PointSet helpers (a PointSet is just an int bitmask)
# ---------------------------------------------------------------------------

def mask_of(points: Iterable[int]) -> int:
    """Bitmask of an iterable of point indices."""
    m = 0
    for p in points:
        m |= 1 << p
    return m


def members(mask: int) -> Iterator[int]:
    """Ascending point indices of a bitmask."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


def _canonical_opens(opens: Iterable[int]) -> tuple[int, ...]:
    # ascending cardinality, ties broken by numeric encoding
    return tuple(sorted(set(opens), key=lambda u: (u.bit_count(), u)))


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on {0..n-1}; ``opens`` is canonically ordered and complete."""

    n: int
    opens: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_open_set", frozenset(self.opens))

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set

    def is_closed(self, mask: int) -> bool:
        return (full_mask(self.n) ^ mask) in self._open_set

    def closed_sets(self) -> tuple[int, ...]:
        full = full_mask(self.n)
        return _canonical_opens(full ^ u for u in self.opens)


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation; ``rows[x]`` is the bitmask {y : x <= y}.

    Specialization direction: x <= y  <=>  x lies in the closure of {y}
    <=>  every open set containing x also contains y.  Consequently
    ``rows[x]`` is exactly the minimal open neighborhood of x.
    """

    n: int
    rows: tuple[int, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)


@dataclass(frozen=True)
class PointMap:
    """Total function {0..dom_n-1} -> {0..cod_n-1}."""

    dom_n: int
    cod_n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom_n:
            raise ValueError("table length does not match dom_n")
        if any(not (0 <= v < self.cod_n) for v in self.table):
            raise ValueError("table entry out of codomain range")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def preimage(self, mask: int) -> int:
        out = 0
        for x, v in enumerate(self.table):
            if mask >> v & 1:
                out |= 1 << x
        return out


# ---------------------------------------------------------------------------
# Partitions (doubling as equivalence relations)
# ---------------------------------------------------------------------------

def partition_from_blocks(n: int, blocks: Iterable[int]) -> tuple[int, ...]:
    """Canonical partition of {0..n-1}: disjoint nonempty block masks covering
    the full set, ordered by smallest element."""
    blks = [b for b in blocks]
    if any(b == 0 for b in blks):
        raise ValueError("empty block in partition")
    union = 0
    for b in blks:
        if union & b:
            raise ValueError("overlapping blocks in partition")
        union |= b
    if union != full_mask(n):
        raise ValueError("blocks do not cover {0..n-1}")
    return tuple(sorted(blks, key=lambda b: (b & -b)))


def partition_from_labels(labels: list[int]) -> tuple[int, ...]:
    """Partition of {0..len(labels)-1} grouping equal labels."""
    groups: dict[int, int] = {}
    for x, lab in enumerate(labels):
        groups[lab] = groups.get(lab, 0) | (1 << x)
    return partition_from_blocks(len(labels), groups.values())


def block_index_map(n: int, partition: tuple[int, ...]) -> PointMap:
    """Map sending each point to the index of its block."""
    table = [0] * n
    for i, b in enumerate(partition):
        for x in members(b):
            table[x] = i
    return PointMap(n, len(partition), tuple(table))


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------

def _check_n(n: int) -> None:
    if not (0 <= n <= MAX_POINTS):
        raise SizeLimit(f"point count {n} outside supported range 0..{MAX_POINTS}")


def build_space(n: int, opens: Iterable[int]) -> FiniteSpace:
    """Validate a family of point sets as a topology and canonicalize it.

    Raises NotATopology with a witness when the family misses the empty or
    full set or escapes closure under pairwise union/intersection.
    """
    _check_n(n)
    fam = sorted(set(opens))
    full = full_mask(n)
    if any(u & ~full for u in fam):
        raise NotATopology("open set contains a point >= n")
    if 0 not in fam or full not in fam:
        raise NotATopology("missing empty set or full set")
    have = set(fam)
    for u, v in itertools.combinations(fam, 2):
        if (u | v) not in have:
            raise NotATopology(f"union escape: {u} | {v} = {u | v} not open")
        if (u & v) not in have:
            raise NotATopology(f"intersection escape: {u} & {v} = {u & v} not open")
    return FiniteSpace(n, _canonical_opens(fam))


def generate_topology(n: int, subbasis: Iterable[int]) -> FiniteSpace:
    """Smallest topology containing the subbasis.

    Finite intersections first, then arbitrary (= pairwise, by finiteness)
    unions; distributivity makes one union pass after the intersection pass
    sufficient.
    """
    _check_n(n)
    full = full_mask(n)
    sub = set(subbasis)
    if any(u & ~full for u in sub):
        raise ValueError("subbasis set contains a point >= n")
    inters = {full} | sub
    frontier = set(inters)
    while frontier:
        new = set()
        for a in frontier:
            for b in inters:
                c = a & b
                if c not in inters and c not in new:
                    new.add(c)
        inters |= new
        frontier = new
    opens = {0} | inters
    frontier = set(opens)
    while frontier:
        new = set()
        for a in frontier:
            for b in opens:
                c = a | b
                if c not in opens and c not in new:
                    new.add(c)
        opens |= new
        frontier = new
    return FiniteSpace(n, _canonical_opens(opens))


def space_from_partition(n: int, partition: Iterable[int]) -> FiniteSpace:
    """Topology whose opens are exactly the unions of partition blocks."""
    blocks = partition_from_blocks(n, partition)
    opens = {0}
    for b in blocks:
        opens |= {o | b for o in opens}
    return FiniteSpace(n, _canonical_opens(opens))


def _space_from_rows(n: int, rows: Iterable[int]) -> FiniteSpace:
    """Space whose opens are all unions of the given minimal-open rows.

    Internal fast path shared with the enumeration stream; assumes ``rows``
    already are the rows of a valid preorder.
    """
    opens = {0}
    for r in rows:
        opens |= {o | r for o in opens}
    return FiniteSpace(n, _canonical_opens(opens))


def specialization_preorder(s: FiniteSpace) -> Preorder:
    """x <= y  <=>  x in closure({y})  <=>  y in every open containing x."""
    rows = []
    for x in range(s.n):
        r = full_mask(s.n)
        for u in s.opens:
            if u >> x & 1:
                r &= u
        rows.append(r)
    return Preorder(s.n, tuple(rows))


def space_from_preorder(p: Preorder) -> FiniteSpace:
    """Inverse of specialization_preorder: opens are the up-closed sets,
    i.e. all unions of minimal-open rows."""
    _check_n(p.n)
    if len(p.rows) != p.n:
        raise ValueError("row count does not match n")
    for x in range(p.n):
        if not (p.rows[x] >> x & 1):
            raise ValueError(f"preorder not reflexive at {x}")
        acc = 0
        for y in members(p.rows[x]):
            acc |= p.rows[y]
        if acc & ~p.rows[x]:
            raise ValueError(f"preorder not transitive at row {x}")
    return _space_from_rows(p.n, p.rows)


# ---------------------------------------------------------------------------
# Closure operators
# ---------------------------------------------------------------------------

def interior(s: FiniteSpace, a: int) -> int:
    """Largest open subset of ``a``."""
    out = 0
    for u in s.opens:
        if not (u & ~a):
            out |= u
    return out


def closure(s: FiniteSpace, a: int) -> int:
    """Smallest closed superset of ``a`` (complement-dual of interior)."""
    full = full_mask(s.n)
    return full ^ interior(s, full ^ a)


def minimal_open(s: FiniteSpace, a: int) -> int:
    """Intersection of all opens containing ``a``; open by principality.

    Convention: minimal_open(s, 0) = 0, keeping the operator monotone.
    """
    if a == 0:
        return 0
    out = full_mask(s.n)
    for u in s.opens:
        if not (a & ~u):
            out &= u
    return out


def minimal_basis(s: FiniteSpace) -> tuple[int, ...]:
    """Deduplicated minimal opens of points, canonically ordered."""
    return _canonical_opens(minimal_open(s, 1 << x) for x in range(s.n))


# ---------------------------------------------------------------------------
# Standard constructions
# ---------------------------------------------------------------------------

def _relabel_down(a: int) -> dict[int, int]:
    return {p: i for i, p in enumerate(members(a))}

def subspace(s: FiniteSpace, a: int) -> FiniteSpace:
    """Trace topology on ``a``, points relabeled 0..|a|-1 preserving order."""
    ren = _relabel_down(a)
    traces = set()
    for u in s.opens:
        traces.add(mask_of(ren[p] for p in members(u & a)))
    return FiniteSpace(a.bit_count(), _canonical_opens(traces))


def product_preorder(a: Preorder, b: Preorder) -> Preorder:
    """Componentwise product; point (x, y) is encoded as x*b.n + y."""
    rows = []
    for x in range(a.n):
        for y in range(b.n):
            r = 0
            for x2 in members(a.rows[x]):
                for y2 in members(b.rows[y]):
                    r |= 1 << (x2 * b.n + y2)
            rows.append(r)
    return Preorder(a.n * b.n, tuple(rows))


def product(a: FiniteSpace, b: FiniteSpace) -> FiniteSpace:
    """Product topology, computed via the preorder product (equivalent on
    finite spaces to closing the box subbasis, and far cheaper)."""
    if a.n * b.n > MAX_POINTS:
        raise SizeLimit(f"product would have {a.n * b.n} > {MAX_POINTS} points")
    pa = specialization_preorder(a)
    pb = specialization_preorder(b)
    return space_from_preorder(product_preorder(pa, pb))


def initial_topology(n: int, maps: list[tuple[PointMap, FiniteSpace]]) -> FiniteSpace:
    """Smallest topology on {0..n-1} making every given map continuous."""
    _check_n(n)
    sub = []
    for f, cod in maps:
        if f.dom_n != n or f.cod_n != cod.n:
            raise ValueError("map arity does not match domain/codomain")
        sub.extend(f.preimage(v) for v in cod.opens)
    return generate_topology(n, sub)


def quotient(s: FiniteSpace, partition: Iterable[int]) -> tuple[FiniteSpace, PointMap]:
    """Quotient space and its projection; blocks ordered by least element.

    A set of block indices is open iff its preimage is open, so the opens
    are exactly the images of the saturated opens of ``s``.
    """
    blocks = partition_from_blocks(s.n, partition)
    q = block_index_map(s.n, blocks)
    opens = set()
    for u in s.opens:
        sat = all((u & b == 0) or (u & b == b) for b in blocks)
        if sat:
            opens.add(mask_of(i for i, b in enumerate(blocks) if u & b))
    return FiniteSpace(len(blocks), _canonical_opens(opens)), q


def is_continuous(f: PointMap, dom: FiniteSpace, cod: FiniteSpace) -> bool:
    """Preimage of every open of ``cod`` is open in ``dom``."""
    if f.dom_n != dom.n or f.cod_n != cod.n:
        raise ValueError("map arity does not match domain/codomain")
    return all(dom.is_open(f.preimage(v)) for v in cod.opens)


# ---------------------------------------------------------------------------
# Named examples and JSON documents
# ---------------------------------------------------------------------------

def example_space(name: str) -> FiniteSpace:
    """Canonical named spaces.

    Tokens: ``sierpinski``, ``point``, ``indiscrete:k``, ``discrete:k``,
    and ``partition:0,1|2`` (blocks separated by '|', members by ',').
    """
    if name == "sierpinski":
        return build_space(2, [0, 0b10, 0b11])
    if name == "point":
        return build_space(1, [0, 1])
    kind, _, arg = name.partition(":")
    if kind == "indiscrete" and arg:
        n = int(arg)
        _check_n(n)
        return FiniteSpace(n, _canonical_opens([0, full_mask(n)]))
    if kind == "discrete" and arg:
        n = int(arg)
        if n > 20:
            raise SizeLimit("discrete space too large to materialize")
        return space_from_partition(n, [1 << x for x in range(n)])
    if kind == "partition" and arg:
        blocks = [mask_of(int(tok) for tok in blk.split(",")) for blk in arg.split("|")]
        n = max(max(members(b)) for b in blocks) + 1
        return space_from_partition(n, blocks)
    raise ValueError(f"unknown example space: {name!r}")


def space_to_doc(s: FiniteSpace) -> dict:
    """JSON space document, opens in canonical order, members ascending."""
    return {"points": s.n, "opens": [list(members(u)) for u in s.opens]}


def space_from_doc(doc: dict) -> FiniteSpace:
    """Parse and validate a JSON space document (order is normalized)."""
    if not isinstance(doc, dict) or "points" not in doc or "opens" not in doc:
        raise NotATopology("document must have 'points' and 'opens' keys")
    n = doc["points"]
    if not isinstance(n, int):
        raise NotATopology("'points' must be an integer")
    _check_n(n)
    opens = []
    for arr in doc["opens"]:
        if not all(isinstance(p, int) and 0 <= p < n for p in arr):
            raise NotATopology(f"open set {arr} has out-of-range members")
        opens.append(mask_of(arr))
    return build_space(n, opens)


@functools.lru_cache(maxsize=4096)
def up_rows(s: FiniteSpace) -> tuple[int, ...]:
    """Cached minimal-open rows (specialization preorder rows) of a space."""
    return specialization_preorder(s).rows
