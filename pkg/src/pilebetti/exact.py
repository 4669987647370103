"""Exact matrix rank over the rationals and prime fields.

Matrices are given sparsely as a list of rows, each a ``{col: value}`` dict
with integer values. Narrow matrices go through a dense routine (Bareiss over
Q, plain modular elimination over GF(p)); wider ones through sparse
elimination with a Markowitz-style pivot choice.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Sequence

DENSE_CUTOFF = 64

SparseRows = Sequence[dict[int, int]]


def rank(rows: SparseRows, ncols: int, p: int | None = None) -> int:
    """Rank of the matrix over Q (``p is None``) or GF(p)."""
    if p is not None:
        rows = [{j: v % p for j, v in r.items() if v % p} for r in rows]
    rows = [r for r in rows if r]
    if not rows:
        return 0
    if ncols < DENSE_CUTOFF:
        dense = [[r.get(j, 0) for j in range(ncols)] for r in rows]
        return bareiss_rank(dense) if p is None else dense_rank_mod(dense, p)
    return sparse_rank(rows, p)


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Fraction-free (Bareiss) elimination over the integers."""
    A = [row[:] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    prev = 1
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][col]
        for i in range(r + 1, m):
            a = A[i][col]
            row_r = A[r]
            A[i] = [(pv * x - a * y) // prev for x, y in zip(A[i], row_r)]
        prev = pv
        r += 1
        if r == m:
            break
    return r


def dense_rank_mod(matrix: list[list[int]], p: int) -> int:
    A = [[x % p for x in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][col], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(r + 1, m):
            a = A[i][col]
            if a:
                A[i] = [(x - a * y) % p for x, y in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return r


def sparse_rank(rows: SparseRows, p: int | None = None) -> int:
    active = {i: dict(r) for i, r in enumerate(rows) if r}
    col_rows: dict[int, set[int]] = defaultdict(set)
    for i, r in active.items():
        for j in r:
            col_rows[j].add(i)

    rk = 0
    while active:
        # cheapest pivot row, then its sparsest column: (r-1)(c-1) fill bound
        i = min(active, key=lambda k: (len(active[k]), k))
        prow = active.pop(i)
        for j in prow:
            col_rows[j].discard(i)
        j = min(prow, key=lambda c: (len(col_rows[c]), c))
        pv = prow[j]
        rk += 1
        if p is not None:
            inv = pow(pv, -1, p)
        for k in list(col_rows[j]):
            other = active[k]
            ov = other[j]
            if p is None:
                new = {c: pv * v for c, v in other.items()}
                for c, v in prow.items():
                    new[c] = new.get(c, 0) - ov * v
                new = {c: v for c, v in new.items() if v}
                g = math.gcd(*new.values()) if new else 1
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
            else:
                f = ov * inv % p
                new = dict(other)
                for c, v in prow.items():
                    x = (new.get(c, 0) - f * v) % p
                    if x:
                        new[c] = x
                    else:
                        new.pop(c, None)
            for c in other:
                if c not in new:
                    col_rows[c].discard(k)
            for c in new:
                if c not in other:
                    col_rows[c].add(k)
            if new:
                active[k] = new
            else:
                del active[k]
    return rk
