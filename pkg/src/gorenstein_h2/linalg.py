"""Exact matrix rank over GF(p) and over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

# p - 1 squared must fit in int64 for the vectorised row updates
MAX_PRIME = 2**31 - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > MAX_PRIME:
        raise ValueError(f"prime {p} exceeds the supported maximum {MAX_PRIME}")
    return p


def rank_mod_p(matrix, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    a = np.asarray(matrix, dtype=np.int64)
    if a.ndim != 2 or a.size == 0:
        return 0
    a = a % p
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        below = a[rank + 1:, col]
        if below.any():
            a[rank + 1:, col:] = (a[rank + 1:, col:] - np.outer(below, a[rank, col:])) % p
        rank += 1
    return rank


def rank_rational(matrix: Sequence[Sequence]) -> int:
    """Rank over Q by elimination on sparse rows of Fractions."""
    rows = []
    for row in matrix:
        d = {j: Fraction(x) for j, x in enumerate(row) if x}
        if d:
            rows.append(d)
    rank = 0
    while rows:
        # sparsest row as pivot keeps fill-in down
        k = min(range(len(rows)), key=lambda t: len(rows[t]))
        pivot = rows.pop(k)
        col = min(pivot)
        pv = pivot[col]
        rank += 1
        nxt = []
        for row in rows:
            f = row.get(col)
            if f is not None:
                f = f / pv
                for j, x in pivot.items():
                    v = row.get(j, 0) - f * x
                    if v:
                        row[j] = v
                    else:
                        row.pop(j, None)
            if row:
                nxt.append(row)
        rows = nxt
    return rank
