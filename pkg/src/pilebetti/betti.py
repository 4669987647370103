"""Multigraded and Z-graded Betti tables from pile and divisor complex homology.

Two independent routes compute the same numbers:

* ``bh``:   beta_{i,c} = dim H~_{i-1}(Delta_c(A))       (squarefree divisor complex)
* ``dual``: beta_{i,c} = dim H~_{N-n-i-1}(Gamma_{t-c-1}(A))  (pile complex of the dual degree)

The dual route needs A to satisfy the saturation conditions; standard Veronese
sets always do. Every nonzero Betti number lives in the box [0, t-1].
"""

from __future__ import annotations

import math
import warnings
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .cache import DiskCache
from .complex import divisor_complex, pile_complex
from .errors import BoxTooLarge, ConditionsUnverified, InhomogeneousSet, NotInLattice, ValidationError
from .homology import RATIONALS, FieldSpec, HomologyProfile, reduced_betti_dims
from .lattice import GeneratorSet, Vector, _check_length, box, check_complement, in_lattice, zdegree

METHODS = ("bruns-herzog", "dual", "both")
_METHOD_ALIASES = {"bh": "bruns-herzog", "bruns-herzog": "bruns-herzog", "dual": "dual", "both": "both"}

DEFAULT_CELL_BUDGET = 200_000

_profile_memo: dict[tuple, HomologyProfile] = {}
_conditions_memo: dict[str, bool] = {}


def normalize_method(method: str) -> str:
    try:
        return _METHOD_ALIASES[method]
    except KeyError:
        raise ValidationError(f"unknown method {method!r}; use bh, dual or both") from None


def _degree_profile(A: GeneratorSet, c: Vector, field: FieldSpec, kind: str, cache: DiskCache | None = None) -> HomologyProfile:
    memo_key = (A.canonical_key, c, field.name, kind)
    hit = _profile_memo.get(memo_key)
    if hit is not None:
        return hit
    disk_key = None
    if cache is not None:
        disk_key = DiskCache.key(A.canonical_key, c, field.name)
        stored = cache.get(disk_key, kind)
        if stored is not None:
            prof = HomologyProfile.from_json(stored)
            _profile_memo[memo_key] = prof
            return prof
    if kind == "bh":
        K = divisor_complex(A, c)
    else:
        K = pile_complex(A, check_complement(A, c))
    prof = reduced_betti_dims(K, field)
    _profile_memo[memo_key] = prof
    if cache is not None:
        cache.put(disk_key, kind, prof.to_json())
    return prof


def _bh_numbers(prof: HomologyProfile) -> dict[int, int]:
    return {k + 1: v for k, v in prof.support().items()}


def _dual_numbers(A: GeneratorSet, prof: HomologyProfile) -> dict[int, int]:
    top = A.N - A.n
    return {top - k - 1: v for k, v in prof.support().items()}


def satisfies_conditions(A: GeneratorSet) -> bool:
    """Whether the dual formula applies to A (checked on the box [0, t] for custom sets)."""
    if A.is_standard:
        return True
    key = A.canonical_key
    if key not in _conditions_memo:
        from .lattice import cone_contains_orthant
        from .verify import verify_equivalence

        _conditions_memo[key] = cone_contains_orthant(A) and verify_equivalence(A)
    return _conditions_memo[key]


def betti_bh(A: GeneratorSet, c: Sequence[int], i: int, field: FieldSpec = RATIONALS) -> int:
    """beta_{i,c} from the squarefree divisor complex."""
    c = _check_length(A, c)
    if not in_lattice(A, c):
        warnings.warn(f"{c} is not in the lattice ZA; Betti number reported as 0", NotInLattice, stacklevel=2)
        return 0
    return _degree_profile(A, c, field, "bh")[i - 1]


def betti_dual(A: GeneratorSet, c: Sequence[int], i: int, field: FieldSpec = RATIONALS) -> int:
    """beta_{i,c} from the pile complex of the dual degree t - c - 1."""
    c = _check_length(A, c)
    if not satisfies_conditions(A):
        warnings.warn("generator set fails the saturation conditions; dual formula may not apply", ConditionsUnverified, stacklevel=2)
    if not in_lattice(A, c):
        warnings.warn(f"{c} is not in the lattice ZA; Betti number reported as 0", NotInLattice, stacklevel=2)
        return 0
    return _degree_profile(A, c, field, "dual")[A.N - A.n - i - 1]


@dataclass
class BettiTable:
    generators: GeneratorSet
    field: FieldSpec
    method: str
    entries: dict[tuple[int, Vector], int]
    disagreements: list[dict] = field(default_factory=list)

    def beta(self, i: int, c: Sequence[int]) -> int:
        return self.entries.get((i, tuple(c)), 0)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def totals(self) -> list[int]:
        out = [0] * (self.projective_dimension + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def at_index(self, i: int) -> dict[Vector, int]:
        return {c: b for (k, c), b in self.entries.items() if k == i}

    def zgraded(self) -> list[tuple[int, int, int]]:
        return zgraded(self)

    def to_json(self) -> dict:
        return {
            "generators": self.generators.to_json(),
            "field": self.field.name,
            "method": self.method,
            "multigraded": [{"i": i, "c": list(c), "beta": b} for (i, c), b in sorted(self.entries.items())],
            "zgraded": [list(x) for x in zgraded(self)] if self.generators.homogeneous else None,
            "disagreements": self.disagreements,
        }

    def render(self) -> str:
        """Betti diagram: row j-i, column i."""
        return render_diagram(zgraded(self))


def zgraded(table: BettiTable) -> list[tuple[int, int, int]]:
    """Aggregate multigraded entries by total degree j = omega . c."""
    A = table.generators
    if not A.homogeneous:
        raise InhomogeneousSet("Z-grading needs a homogeneous generator set")
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for (i, c), b in table.entries.items():
        j = zdegree(A, c)
        if j.denominator != 1:
            raise ValidationError(f"degree {c} has non-integral Z-degree {j}")
        acc[(i, int(j))] += b
    return [(i, j, b) for (i, j), b in sorted(acc.items())]


def render_diagram(zg: Sequence[tuple[int, int, int]]) -> str:
    if not zg:
        return "(empty)"
    cells = {(i, j - i): b for i, j, b in zg}
    cols = range(0, max(i for i, _, _ in zg) + 1)
    rows = range(min(k for _, k in cells), max(k for _, k in cells) + 1)
    totals = [sum(b for (i, _), b in cells.items() if i == col) for col in cols]
    width = max(len(str(x)) for x in list(cells.values()) + totals + [max(cols)]) + 1
    label = max(len("total:"), max(len(f"{k}:") for k in rows)) + 1
    lines = [" " * label + "".join(str(c).rjust(width) for c in cols)]
    lines.append("total:".rjust(label) + "".join(str(t).rjust(width) for t in totals))
    for k in rows:
        lines.append(f"{k}:".rjust(label) + "".join(str(cells.get((i, k), ".")).rjust(width) for i in cols))
    return "\n".join(lines)


def degree_box(A: GeneratorSet) -> list[Vector]:
    """Multidegrees in ZA within [0, t-1], the support of every nonzero Betti number."""
    hi = tuple(x - 1 for x in A.t)
    return [c for c in box((0,) * A.dim, hi) if in_lattice(A, c)]


def _degree_task(args):
    A, c, field, kinds, cache_root = args
    cache = DiskCache(cache_root) if cache_root is not None else None
    return {kind: _degree_profile(A, c, field, kind, cache).to_json() for kind in kinds}


def betti_table(
    A: GeneratorSet,
    field: FieldSpec = RATIONALS,
    method: str = "both",
    *,
    jobs: int = 1,
    cache: DiskCache | None = None,
    budget: int = DEFAULT_CELL_BUDGET,
) -> BettiTable:
    """Full multigraded Betti table of R_A over ``field``.

    With ``method="both"`` the two formulas are compared degree by degree and any
    mismatch is recorded in ``disagreements`` (entries then follow Bruns-Herzog).
    """
    method = normalize_method(method)
    cells = math.prod(A.t)
    if cells > budget:
        raise BoxTooLarge(f"degree box has {cells} cells, budget is {budget}")
    if method != "bruns-herzog" and not satisfies_conditions(A):
        warnings.warn("generator set fails the saturation conditions; dual formula may not apply", ConditionsUnverified, stacklevel=2)

    kinds = {"bruns-herzog": ("bh",), "dual": ("dual",), "both": ("bh", "dual")}[method]
    degrees = degree_box(A)
    cache_root = str(cache.root) if cache is not None else None
    tasks = [(A, c, field, kinds, cache_root) for c in degrees]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_degree_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_degree_task(t) for t in tasks]

    entries: dict[tuple[int, Vector], int] = {}
    disagreements = []
    for c, res in zip(degrees, results):
        numbers = {}
        if "bh" in res:
            numbers["bh"] = _bh_numbers(HomologyProfile.from_json(res["bh"]))
        if "dual" in res:
            numbers["dual"] = _dual_numbers(A, HomologyProfile.from_json(res["dual"]))
        if len(numbers) == 2 and numbers["bh"] != numbers["dual"]:
            disagreements.append({"c": list(c), "bh": numbers["bh"], "dual": numbers["dual"]})
        chosen = numbers.get("bh", numbers.get("dual"))
        for i, b in chosen.items():
            entries[(i, c)] = b
    entries = dict(sorted(entries.items()))
    return BettiTable(A, field, method, entries, disagreements)
