"""Smith normal form of integer matrices.

Only the column transform is tracked. For a matrix M with D = U M V, a row
vector c lies in the integer row span of M iff y = c V has y[j] divisible by
D[j][j] for j < rank and y[j] == 0 beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class SmithData:
    """Invariant factors and the unimodular column transform V."""

    diagonal: tuple[int, ...]
    transform: tuple[tuple[int, ...], ...]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def contains(self, vector: Sequence[int]) -> bool:
        """Whether ``vector`` lies in the integer row span of the factored matrix."""
        if len(vector) != self.ncols:
            raise ValueError("length mismatch")
        for j in range(self.ncols):
            y = sum(vector[i] * self.transform[i][j] for i in range(self.ncols))
            if j < self.rank:
                if y % self.diagonal[j]:
                    return False
            elif y:
                return False
        return True


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithData:
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    A = [list(map(int, row)) for row in matrix]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_cols(j1, j2):
        for row in A:
            row[j1], row[j2] = row[j2], row[j1]
        for row in V:
            row[j1], row[j2] = row[j2], row[j1]

    def add_col(src, dst, k):
        # column dst += k * column src
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    diagonal = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        A[t], A[i0] = A[i0], A[t]
        if j0 != t:
            swap_cols(t, j0)

        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        add_col(t, j, -q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                # remainders left; move the smallest one onto the pivot and repeat
                best = None
                for i in range(t + 1, m):
                    v = A[i][t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), "row", i)
                for j in range(t + 1, n):
                    v = A[t][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), "col", j)
                _, kind, k = best
                if kind == "row":
                    A[t], A[k] = A[k], A[t]
                else:
                    swap_cols(t, k)
                continue
            # row and column cleared; enforce divisibility on the trailing block
            bad = None
            for i in range(t + 1, m):
                if any(A[i][j] % p for j in range(t + 1, n)):
                    bad = i
                    break
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]

        if A[t][t] < 0:
            A[t][t] = -A[t][t]
            for row in V:
                row[t] = -row[t]
        diagonal.append(A[t][t])
        t += 1

    return SmithData(tuple(diagonal), tuple(tuple(row) for row in V), n)
