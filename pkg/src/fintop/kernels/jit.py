"""Numba-jitted kernels; contract identical to ``pure.py``.

The DFS and the signature arithmetic are straight transliterations of the
pure backend onto int64 arrays; ``tests/test_kernels.py`` pins the two
backends to each other bit for bit.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def _signature_from_rows(rows, n):
    cl = np.zeros(n, dtype=np.int64)
    for y in range(n):
        r = rows[y]
        while r:
            low = r & -r
            b = 0
            t = low
            while t > 1:
                t >>= 1
                b += 1
            cl[b] |= 1 << y
            r ^= low
    t0 = t1 = t2 = t01 = t02 = t12 = True
    regular = normal = zero_dim = sober = True
    for x in range(n):
        ux = rows[x]
        for y in range(x + 1, n):
            uy = rows[y]
            s0 = ux != uy
            s1 = (ux >> y & 1) == 0 and (uy >> x & 1) == 0
            s2 = ux & uy == 0
            t0 = t0 and s0
            t1 = t1 and s1
            t2 = t2 and s2
            t01 = t01 and ((not s0) or s1)
            t02 = t02 and ((not s0) or s2)
            t12 = t12 and ((not s1) or s2)
            if cl[x] == cl[y]:
                sober = False
            if cl[x] & cl[y] == 0 and ux & uy != 0:
                normal = False
        for a in range(n):
            if (ux >> a & 1) == 0 and ux & rows[a] != 0:
                regular = False
        r = ux
        while r:
            low = r & -r
            b = 0
            t = low
            while t > 1:
                t >>= 1
                b += 1
            if cl[b] & ~ux != 0:
                zero_dim = False
                break
            r ^= low
    sig = 0
    for flag in (t0, t1, t2, t01, t02, t12, regular, normal, zero_dim, sober):
        sig = sig << 1 | (1 if flag else 0)
    return sig


@njit(cache=True)
def _dfs(n, first_row, collect):
    """DFS over reflexive transitive matrices, lex order on the row-major
    off-diagonal bit string.  When ``collect`` is true, returns the packed
    matrices and a dummy tally; otherwise an empty array and the signature
    tally."""
    m = n * (n - 1)
    pos_i = np.empty(m, dtype=np.int64)
    pos_j = np.empty(m, dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                pos_i[k] = i
                pos_j[k] = j
                k += 1
    rows = np.empty(n, dtype=np.int64)
    for i in range(n):
        rows[i] = 1 << i
    start = 0
    if first_row >= 0:
        rows[0] = first_row | 1
        start = n - 1
    choice = np.zeros(m + 1, dtype=np.int64)
    counts = np.zeros(1024, dtype=np.int64)
    cap = 1024
    out = np.empty(cap, dtype=np.int64)
    n_out = 0
    d = start
    choice[d] = 0
    while d >= start:
        if d == m:
            if collect:
                if n_out == cap:
                    cap *= 2
                    grown = np.empty(cap, dtype=np.int64)
                    grown[:n_out] = out[:n_out]
                    out = grown
                packed = np.int64(0)
                for i in range(n):
                    packed |= rows[i] << (i * n)
                out[n_out] = packed
                n_out += 1
            else:
                counts[_signature_from_rows(rows, n)] += 1
            d -= 1
            continue
        i = pos_i[d]
        j = pos_j[d]
        c = choice[d]
        if c == 0:
            choice[d] = 1
            ok = True
            lim = i if i < j else j
            low = rows[i] & ((1 << lim) - 1)
            while low:
                lsb = low & -low
                b = 0
                t = lsb
                while t > 1:
                    t >>= 1
                    b += 1
                if rows[b] >> j & 1:
                    ok = False
                    break
                low ^= lsb
            if ok:
                d += 1
                choice[d] = 0
        elif c == 1:
            choice[d] = 2
            rows[i] |= 1 << j
            ok = True
            for k2 in range(i):
                if (rows[k2] >> i & 1) and (rows[k2] >> j & 1) == 0:
                    ok = False
                    break
            if ok and j < i:
                assigned = ((1 << (j + 1)) - 1) | (1 << i)
                if rows[j] & assigned & ~rows[i] != 0:
                    ok = False
            if ok:
                d += 1
                choice[d] = 0
            else:
                rows[i] &= ~(1 << j)
        else:
            rows[i] &= ~(1 << j)
            d -= 1
    return out[:n_out].copy(), counts


def signature_of_rows(n: int, rows) -> int:
    arr = np.array(rows, dtype=np.int64)
    return int(_signature_from_rows(arr, n))


def preorder_matrices(n: int, first_row: int = -1) -> np.ndarray:
    """All preorders on n points as packed int64 matrices, lex order."""
    out, _ = _dfs(n, first_row, True)
    return out


def signature_counts(n: int, first_row: int = -1) -> np.ndarray:
    """Tally of separation signatures over all preorders on n points."""
    _, counts = _dfs(n, first_row, False)
    return counts
