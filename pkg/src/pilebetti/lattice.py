"""Weights vectors, generator sets and lattice/semigroup queries on multidegrees."""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DimensionMismatch,
    DuplicatePoint,
    GcdNotOne,
    InhomogeneousSet,
    NegativeCoordinate,
    NonPositiveWeight,
    ValidationError,
)
from .smith import SmithData, smith_normal_form

Vector = tuple[int, ...]


@dataclass(frozen=True)
class WeightsVector:
    q: Vector

    @property
    def r(self) -> int:
        return math.lcm(*self.q)

    @property
    def n(self) -> int:
        return len(self.q) - 1

    def __len__(self):
        return len(self.q)

    def __iter__(self):
        return iter(self.q)


def make_weights(raw: Iterable[int]) -> WeightsVector:
    q = tuple(int(x) for x in raw)
    if not q:
        raise ValidationError("weights vector must be nonempty")
    if any(x <= 0 for x in q):
        raise NonPositiveWeight(f"weights must be positive, got {q}")
    if math.gcd(*q) != 1:
        raise GcdNotOne(f"gcd of weights {q} is {math.gcd(*q)}, expected 1")
    return WeightsVector(q)


class _SemigroupMemo:
    """Thread-safe memo for semigroup membership; dropped on pickling."""

    def __init__(self):
        self.lock = threading.Lock()
        self.table: dict[Vector, bool] = {}

    def __getstate__(self):
        return {}

    def __setstate__(self, state):
        self.__init__()


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """An ordered finite set A of points in N^{n+1}.

    Points are kept in lexicographically descending order so vertex indices of
    every complex built on A are deterministic. ``weights``/``d`` are set only
    for standard Veronese sets.
    """

    points: tuple[Vector, ...]
    weights: WeightsVector | None = None
    d: int | None = None
    _memo: _SemigroupMemo = field(default_factory=_SemigroupMemo, repr=False, compare=False)

    def __eq__(self, other):
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return (self.points, self.weights, self.d) == (other.points, other.weights, other.d)

    def __hash__(self):
        return hash((self.points, self.weights, self.d))

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.points)

    @property
    def dim(self) -> int:
        """Ambient dimension n+1."""
        return len(self.points[0])

    @property
    def n(self) -> int:
        return self.dim - 1

    @property
    def N(self) -> int:
        return len(self.points) - 1

    @property
    def provenance(self):
        if self.weights is None:
            return "custom"
        return (self.weights.q, self.d)

    @property
    def is_standard(self) -> bool:
        return self.weights is not None

    @cached_property
    def t(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.points))

    @cached_property
    def omega(self) -> tuple[Fraction, ...] | None:
        """Rational vector with omega . a == 1 for all a, or None if inhomogeneous."""
        if self.weights is not None:
            dr = self.d * self.weights.r
            return tuple(Fraction(qi, dr) for qi in self.weights.q)
        return _solve_homogenizer(self.points)

    @property
    def homogeneous(self) -> bool:
        return self.omega is not None

    @cached_property
    def lattice_data(self) -> SmithData:
        return smith_normal_form(self.points)

    def to_json(self) -> dict:
        return {
            "points": [list(p) for p in self.points],
            "weights": list(self.weights.q) if self.weights is not None else None,
            "d": self.d,
        }

    @cached_property
    def canonical_key(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)


def _solve_homogenizer(points: Sequence[Vector]) -> tuple[Fraction, ...] | None:
    """Solve points . omega = 1 exactly; None when the system is inconsistent."""
    ncols = len(points[0])
    rows = [[Fraction(x) for x in p] + [Fraction(1)] for p in points]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    # free variables set to zero
    omega = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        omega[col] = rows[i][-1]
    return tuple(omega)


def _lex_desc(points: Iterable[Vector]) -> tuple[Vector, ...]:
    return tuple(sorted(points, reverse=True))


def enumerate_weighted(q: Sequence[int], total: int) -> Iterator[Vector]:
    """All b in N^{len(q)} with q . b == total, lexicographically descending."""
    k = len(q)

    def rec(i, rem):
        if i == k - 1:
            if rem % q[i] == 0:
                yield (rem // q[i],)
            return
        for x in range(rem // q[i], -1, -1):
            for tail in rec(i + 1, rem - x * q[i]):
                yield (x,) + tail

    if total < 0:
        return iter(())
    return rec(0, total)


def veronese_generators(q: WeightsVector | Sequence[int], d: int) -> GeneratorSet:
    """Lattice points of d times the standard simplex of the weights ``q``."""
    if not isinstance(q, WeightsVector):
        q = make_weights(q)
    if d < 1:
        raise ValidationError(f"Veronese degree must be positive, got {d}")
    points = tuple(enumerate_weighted(q.q, d * q.r))
    return GeneratorSet(points=points, weights=q, d=int(d))


def custom_generators(points: Iterable[Sequence[int]]) -> GeneratorSet:
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise ValidationError("generator set must be nonempty")
    dim = len(pts[0])
    if dim == 0 or any(len(p) != dim for p in pts):
        raise DimensionMismatch("all points must have the same positive length")
    for p in pts:
        if any(x < 0 for x in p):
            raise NegativeCoordinate(f"point {p} has a negative coordinate")
    if len(set(pts)) != len(pts):
        dup = next(p for p in pts if pts.count(p) > 1)
        raise DuplicatePoint(f"point {dup} appears more than once")
    return GeneratorSet(points=_lex_desc(pts))


def generators_from_json(obj: dict) -> GeneratorSet:
    """Inverse of ``GeneratorSet.to_json``; standard sets are re-enumerated and checked."""
    weights, d = obj.get("weights"), obj.get("d")
    if weights is not None and d is not None:
        A = veronese_generators(weights, d)
        if "points" in obj and obj["points"] is not None:
            given = _lex_desc(tuple(p) for p in obj["points"])
            if given != A.points:
                raise ValidationError("points do not match the Veronese set of the given weights and d")
        return A
    return custom_generators(obj["points"])


def _check_length(A: GeneratorSet, c: Sequence[int]) -> Vector:
    c = tuple(int(x) for x in c)
    if len(c) != A.dim:
        raise DimensionMismatch(f"multidegree {c} has length {len(c)}, expected {A.dim}")
    return c


def check_complement(A: GeneratorSet, c: Sequence[int]) -> Vector:
    """The dual multidegree t - c - (1,...,1)."""
    c = _check_length(A, c)
    return tuple(ti - ci - 1 for ti, ci in zip(A.t, c))


def cone_contains_orthant(A: GeneratorSet) -> bool:
    found = [False] * A.dim
    for a in A.points:
        nz = [i for i, x in enumerate(a) if x]
        if len(nz) == 1:
            found[nz[0]] = True
    return all(found)


def in_lattice(A: GeneratorSet, c: Sequence[int]) -> bool:
    c = _check_length(A, c)
    return A.lattice_data.contains(c)


def in_semigroup(A: GeneratorSet, b: Sequence[int]) -> bool:
    """Whether b is an N-linear combination of the points of A."""
    b = _check_length(A, b)
    memo = A._memo
    with memo.lock:
        return _semigroup_descent(A.points, b, memo.table)


def _semigroup_descent(points, b, table) -> bool:
    if any(x < 0 for x in b):
        return False
    if not any(b):
        return True
    hit = table.get(b)
    if hit is not None:
        return hit
    result = False
    for a in points:
        if not any(a):
            continue
        if all(ai <= bi for ai, bi in zip(a, b)):
            if _semigroup_descent(points, tuple(bi - ai for ai, bi in zip(a, b)), table):
                result = True
                break
    table[b] = result
    return result


def zdegree(A: GeneratorSet, c: Sequence[int]) -> Fraction:
    """Z-grading omega . c of a multidegree."""
    c = _check_length(A, c)
    if A.omega is None:
        raise InhomogeneousSet("generator set has no homogenizing functional")
    return sum((w * x for w, x in zip(A.omega, c)), Fraction(0))


def box(lo: Sequence[int], hi: Sequence[int]) -> Iterator[Vector]:
    """Integer points of the box [lo, hi] in lexicographic order."""
    import itertools

    return itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))
