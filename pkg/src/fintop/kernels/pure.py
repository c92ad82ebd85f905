"""Pure-Python reference kernels for preorder enumeration and census tallies.

Same contract as the jitted backend in ``jit.py``; this one exists as the
fallback (and as the readable statement of the algorithm).  Matrices are
emitted in lexicographic order of the row-major off-diagonal bit string,
with 0 tried before 1.

A matrix is packed into one int: bit i*n + j set iff j is in row i, where
row i is the minimal open neighborhood of point i (x <= y iff y in row x).
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def _dfs_rows(n: int, first_row: int):
    """Yield row tuples of every reflexive transitive matrix on n points.

    Depth-first over off-diagonal entries in row-major order.  Each
    assignment is checked against every transitivity triple whose other two
    entries are already assigned, so the leaves are exactly the preorders
    and dead branches are cut as early as possible.
    """
    pos = [(i, j) for i in range(n) for j in range(n) if i != j]
    rows = [1 << i for i in range(n)]
    start = 0
    if first_row >= 0:
        rows[0] = first_row | 1
        start = n - 1
    m = len(pos)
    choice = [0] * (m + 1)
    d = start
    choice[d] = 0
    while d >= start:
        if d == m:
            yield tuple(rows)
            d -= 1
            continue
        i, j = pos[d]
        c = choice[d]
        if c == 0:
            choice[d] = 1
            # value 0: forbidden if some assigned k gives i<=k<=j
            ok = True
            low = rows[i] & ((1 << min(i, j)) - 1)
            while low:
                k = (low & -low).bit_length() - 1
                if rows[k] >> j & 1:
                    ok = False
                    break
                low &= low - 1
            if ok:
                d += 1
                choice[d] = 0
        elif c == 1:
            choice[d] = 2
            rows[i] |= 1 << j
            ok = True
            # triples (k,i),(i,j) -> (k,j) with row k fully assigned
            for k in range(i):
                if rows[k] >> i & 1 and not (rows[k] >> j & 1):
                    ok = False
                    break
            # triples (i,j),(j,k) -> (i,k) with (j,k) and (i,k) assigned
            if ok and j < i:
                assigned = ((1 << (j + 1)) - 1) | (1 << i)
                if rows[j] & assigned & ~rows[i]:
                    ok = False
            if ok:
                d += 1
                choice[d] = 0
            else:
                rows[i] &= ~(1 << j)
        else:
            rows[i] &= ~(1 << j)
            d -= 1


def signature_of_rows(n: int, rows) -> int:
    """10-bit separation signature from minimal-open rows.

    Bit order (MSB first): t0 t1 t2 t01 t02 t12 regular normal zero_dim
    sober.  Uses the preorder reformulations of the predicates; agreement
    with the definitional implementations is asserted exhaustively in tests.
    """
    cl = [0] * n
    for y in range(n):
        r = rows[y]
        while r:
            low = r & -r
            cl[low.bit_length() - 1] |= 1 << y
            r ^= low
    t0 = t1 = t2 = t01 = t02 = t12 = True
    regular = normal = zero_dim = sober = True
    for x in range(n):
        ux = rows[x]
        for y in range(x + 1, n):
            uy = rows[y]
            s0 = ux != uy
            s1 = not (ux >> y & 1) and not (uy >> x & 1)
            s2 = ux & uy == 0
            t0 &= s0
            t1 &= s1
            t2 &= s2
            t01 &= (not s0) or s1
            t02 &= (not s0) or s2
            t12 &= (not s1) or s2
            if cl[x] == cl[y]:
                sober = False
            if cl[x] & cl[y] == 0 and ux & uy:
                normal = False
        for a in range(n):
            if not (ux >> a & 1) and ux & rows[a]:
                regular = False
        r = ux
        while r:
            low = r & -r
            if cl[low.bit_length() - 1] & ~ux:
                zero_dim = False
                break
            r ^= low
    sig = 0
    for b in (t0, t1, t2, t01, t02, t12, regular, normal, zero_dim, sober):
        sig = sig << 1 | int(b)
    return sig


def preorder_matrices(n: int, first_row: int = -1) -> np.ndarray:
    """All preorders on n points as packed int64 matrices, lex order."""
    out = [sum(r << (i * n) for i, r in enumerate(rows))
           for rows in _dfs_rows(n, first_row)]
    return np.array(out, dtype=np.int64)


def signature_counts(n: int, first_row: int = -1) -> np.ndarray:
    """Tally of separation signatures over all preorders on n points."""
    counts = np.zeros(1024, dtype=np.int64)
    for rows in _dfs_rows(n, first_row):
        counts[signature_of_rows(n, rows)] += 1
    return counts
