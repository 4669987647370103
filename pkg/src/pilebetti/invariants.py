"""Closed-form and counting invariants of Veronese rings of weighted projective spaces."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .betti import BettiTable
from .errors import IncompleteTable
from .lattice import GeneratorSet, WeightsVector, make_weights, veronese_generators


def _weights(q) -> WeightsVector:
    return q if isinstance(q, WeightsVector) else make_weights(q)


def projective_dimension(A: GeneratorSet) -> int:
    return A.N - A.n


def projective_dimension_from_table(table: BettiTable) -> int:
    """Largest homological index carrying a nonzero Betti number; checked against N - n."""
    p = table.projective_dimension
    expected = projective_dimension(table.generators)
    if p != expected:
        raise AssertionError(f"table has projective dimension {p}, closed form gives {expected}")
    return p


@dataclass(frozen=True)
class RegularityReport:
    bound: int
    rho: int
    equality_certified: bool
    lower_bound_from_top_syzygy: int | None = None

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "rho": self.rho,
            "equality_certified": self.equality_certified,
            "lower_bound_from_top_syzygy": self.lower_bound_from_top_syzygy,
        }


def regularity_bound(q, d: int, with_top_syzygy: bool = True) -> RegularityReport:
    """Upper bound on the regularity, the remainder rho and the equality certificate.

    Equality is certified when some b in N^{n+1} has q . b == rho. The top
    syzygy gives a lower bound max(zdeg) - (N - n) that needs no homology.
    """
    q = _weights(q)
    dr = d * q.r
    s = sum(q.q)
    ceil = -(-s // dr)
    rho = ceil * dr - s
    certified = partition_count(q.q, rho) > 0
    lower = None
    if with_top_syzygy:
        rep = highest_syzygy(q, d)
        lower = max(z for _, z in rep.generators) - rep.homological_index
    return RegularityReport(q.n + 1 - ceil, rho, certified, lower)


def gorenstein_condition(q, d: int) -> bool:
    """Sufficient (not necessary) criterion: dr divides the weight sum."""
    q = _weights(q)
    return sum(q.q) % (d * q.r) == 0


def gorenstein_symmetry_check(table: BettiTable) -> bool:
    """Stanley's symmetry of the Z-graded Betti diagram.

    In diagram coordinates (i, k = j - i) the check is
    beta[i][k] == beta[p - i][reg - k] with p the projective dimension and reg
    the regularity read off the table.
    """
    if not table.generators.homogeneous:
        raise IncompleteTable("symmetry check needs a Z-graded table")
    zg = table.zgraded()
    if not zg or (0, 0, 1) not in zg:
        raise IncompleteTable("table lacks the generator beta_{0,0}")
    diagram = {(i, j - i): b for i, j, b in zg}
    p = max(i for i, _ in diagram)
    reg = max(k for _, k in diagram)
    return all(diagram.get((p - i, reg - k), 0) == b for (i, k), b in diagram.items())


@dataclass(frozen=True)
class HighestSyzygyReport:
    generators: tuple[tuple[tuple[int, ...], int], ...]  # (multidegree, Z-degree)
    homological_index: int

    @property
    def rank(self) -> int:
        return len(self.generators)

    def zdeg_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(z for _, z in self.generators).items()))

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "homological_index": self.homological_index,
            "generators": [{"c": list(c), "zdeg": z} for c, z in self.generators],
        }


def _reaches(q: Sequence[int], caps: Sequence[int], target: int) -> bool:
    """Whether q . a == target for some 0 <= a <= caps (bounded knapsack on a bitmask)."""
    limit = (1 << (target + 1)) - 1
    reach = 1
    for qi, cap in zip(q, caps):
        acc = reach
        shifted = reach
        for _ in range(min(cap, target // qi)):
            shifted = (shifted << qi) & limit
            acc |= shifted
        reach = acc
        if (reach >> target) & 1:
            return True
    return bool((reach >> target) & 1)


def highest_syzygy(q, d: int, A: GeneratorSet | None = None) -> HighestSyzygyReport:
    """Generators of the top syzygy by lattice counting alone.

    Scans b over b_i < dr/q_i (anything larger dominates an axis point of A),
    keeps b with dr | q . (t - b - 1) and b not dominating any point of A, and
    reports c = t - b - 1.
    """
    q = _weights(q)
    dr = d * q.r
    if A is None:
        A = veronese_generators(q, d)
    t = A.t
    qt = sum(x * y for x, y in zip(q.q, t))
    s = sum(q.q)
    out = []
    for b in itertools.product(*(range(dr // qi) for qi in q.q)):
        qb = sum(x * y for x, y in zip(q.q, b))
        # q . c = q . t - q . b - sum(q)
        qc = qt - qb - s
        if qc % dr:
            continue
        if _reaches(q.q, b, dr):
            continue
        c = tuple(ti - bi - 1 for ti, bi in zip(t, b))
        out.append((c, qc // dr))
    out.sort()
    return HighestSyzygyReport(tuple(out), A.N - A.n)


def pn_highest_rank(n: int, d: int) -> int:
    """Rank of the top syzygy of the d-th Veronese ring of P^n."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    delta = n + 1 - -(-(n + 1) // d)
    m = d * n - d * delta + d - 1
    return math.comb(m, n) if m >= n else 0


def partition_count(q: Sequence[int], k: int) -> int:
    """Number of b in N^{len(q)} with q . b == k (restricted partitions)."""
    if k < 0:
        return 0
    coeffs = [1] + [0] * k
    for qi in q:
        for m in range(qi, k + 1):
            coeffs[m] += coeffs[m - qi]
    return coeffs[k]
