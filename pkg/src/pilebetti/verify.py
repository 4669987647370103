"""Executable checks of the duality theorem and its supporting facts.

Checks that quantify over infinitely many multidegrees are restricted to the
box [0, t]; that box contains every degree any Betti computation looks at.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .complex import SimplicialComplex, alexander_dual, divisor_complex, pile_complex
from .errors import ConeConditionFailed, HypothesisNotMet, NotSpanning
from .homology import RATIONALS, FieldSpec, HomologyProfile, reduced_betti_dims, reduced_cohomology_dims
from .lattice import (
    GeneratorSet,
    Vector,
    _check_length,
    box,
    check_complement,
    cone_contains_orthant,
    custom_generators,
    in_lattice,
    in_semigroup,
)


@dataclass(frozen=True)
class DualityCheck:
    holds: bool
    lhs: HomologyProfile  # homology of the pile complex at c
    rhs: HomologyProfile  # homology of the pile complex at t - c - 1

    def __bool__(self):
        return self.holds


def verify_duality(A: GeneratorSet, c: Sequence[int], field: FieldSpec = RATIONALS) -> DualityCheck:
    """dim H~_{i-1}(Gamma_c) == dim H~_{N-n-i-1}(Gamma_{t-c-1}) for every i."""
    if not cone_contains_orthant(A):
        raise ConeConditionFailed("A must contain a positive multiple of every basis vector")
    c = _check_length(A, c)
    lhs = reduced_betti_dims(pile_complex(A, c), field)
    rhs = reduced_betti_dims(pile_complex(A, check_complement(A, c)), field)
    shift = A.N - A.n - 2
    # lhs index k = i-1 pairs with rhs index N-n-i-1 = shift - k
    indices = set(lhs.support()) | {shift - k for k in rhs.support()}
    holds = all(lhs[k] == rhs[shift - k] for k in indices)
    return DualityCheck(holds, lhs, rhs)


@dataclass(frozen=True)
class FuzzConfig:
    max_n: int = 2
    max_points: int = 7
    max_coordinate: int = 4
    trials: int = 200
    seed: int = 1
    field: FieldSpec = RATIONALS

    def __post_init__(self):
        if self.max_n < 0 or self.max_points < 1 or self.max_coordinate < 1 or self.trials < 0:
            raise ValueError("fuzz bounds must be positive")


@dataclass
class FuzzReport:
    trials: int
    seed: int
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"trials": self.trials, "failures": self.failures, "seed": self.seed}


def fuzz_corpus(config: FuzzConfig) -> Iterator[tuple[GeneratorSet, Vector]]:
    """Seeded random (A, c) pairs satisfying the cone hypothesis, c in [-1, t]."""
    rng = random.Random(config.seed)
    for _ in range(config.trials):
        dim = rng.randint(1, config.max_n + 1)
        pts = {tuple(config.max_coordinate if j == i else 0 for j in range(dim)) for i in range(dim)}
        extra = rng.randint(0, max(0, config.max_points - dim))
        for _ in range(extra):
            pts.add(tuple(rng.randint(0, config.max_coordinate) for _ in range(dim)))
        A = custom_generators(sorted(pts))
        c = tuple(rng.randint(-1, ti) for ti in A.t)
        yield A, c


def fuzz_duality(config: FuzzConfig) -> FuzzReport:
    report = FuzzReport(config.trials, config.seed)
    for A, c in fuzz_corpus(config):
        check = verify_duality(A, c, config.field)
        if not check.holds:
            report.failures.append(
                {
                    "A": A.to_json(),
                    "c": list(c),
                    "lhs_dims": check.lhs.to_json()["dims"],
                    "rhs_dims": check.rhs.to_json()["dims"],
                }
            )
    return report


def verify_star_lemma(A: GeneratorSet, b: Sequence[int], field: FieldSpec = RATIONALS) -> bool:
    """Gamma_b is acyclic whenever some b_j equals t_j."""
    if not cone_contains_orthant(A):
        raise ConeConditionFailed("A must contain a positive multiple of every basis vector")
    b = _check_length(A, b)
    if not any(bj == tj for bj, tj in zip(b, A.t)):
        raise HypothesisNotMet(f"{b} agrees with t={A.t} in no coordinate")
    return reduced_betti_dims(pile_complex(A, b), field).is_acyclic()


def equivalence_witness(A: GeneratorSet) -> Vector | None:
    """First c in ZA within [0, t] with Delta_c != Gamma_c, or None."""
    for c in box((0,) * A.dim, A.t):
        if not in_lattice(A, c):
            continue
        if divisor_complex(A, c).masks != pile_complex(A, c).masks:
            return c
    return None


def verify_equivalence(A: GeneratorSet) -> bool:
    """Delta_c(A) == Gamma_c(A) for every c in ZA within the box [0, t]."""
    return equivalence_witness(A) is None


def verify_alexander(K: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """dim H~_i(K*) == dim H~^{M-i-3}(K) for all i."""
    M = K.vertex_count
    dual = reduced_betti_dims(alexander_dual(K), field)
    co = reduced_cohomology_dims(K, field)
    indices = set(dual.support()) | {M - 3 - i for i in co.support()}
    return all(dual[i] == co[M - 3 - i] for i in indices)


@dataclass(frozen=True)
class ConditionReport:
    homogeneous: bool
    saturated: bool  # NA == ZA meet N^{n+1}, on the box [0, t]
    complexes_agree: bool  # Delta_c == Gamma_c, on the box [0, t]
    saturation_witness: Vector | None = None
    equivalence_witness: Vector | None = None

    @property
    def consistent(self) -> bool:
        return self.saturated == self.complexes_agree

    def to_json(self) -> dict:
        return {
            "homogeneous": self.homogeneous,
            "saturated": self.saturated,
            "complexes_agree": self.complexes_agree,
            "consistent": self.consistent,
            "saturation_witness": list(self.saturation_witness) if self.saturation_witness else None,
            "equivalence_witness": list(self.equivalence_witness) if self.equivalence_witness else None,
        }


def verify_conditions(A: GeneratorSet) -> ConditionReport:
    """Evaluate the saturation condition and the Delta == Gamma condition side by side.

    Inhomogeneous sets are evaluated anyway and flagged in the report.
    """
    if A.lattice_data.rank < A.dim:
        raise NotSpanning(f"points span a rank {A.lattice_data.rank} lattice in dimension {A.dim}")
    sat_witness = None
    for b in box((0,) * A.dim, A.t):
        if in_lattice(A, b) and not in_semigroup(A, b):
            sat_witness = b
            break
    eq_witness = equivalence_witness(A)
    return ConditionReport(
        homogeneous=A.homogeneous,
        saturated=sat_witness is None,
        complexes_agree=eq_witness is None,
        saturation_witness=sat_witness,
        equivalence_witness=eq_witness,
    )
