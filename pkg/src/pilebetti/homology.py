"""Reduced simplicial homology over Q or GF(p)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import exact
from .complex import SimplicialComplex
from .errors import ValidationError, VoidComplex


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValidationError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls()
        for prefix in ("fp:", "gf:", "prime:"):
            if t.startswith(prefix):
                return cls(int(t[len(prefix):]))
        raise ValidationError(f"unknown field {text!r}; use q or fp:<p>")

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    def __str__(self):
        return self.name


RATIONALS = FieldSpec()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class BoundaryMatrix:
    """Reduced boundary map from k-chains to (k-1)-chains, stored by row."""

    k: int
    rows: tuple[tuple[int, ...], ...]  # faces of dimension k-1
    cols: tuple[tuple[int, ...], ...]  # faces of dimension k
    entries: tuple[dict[int, int], ...]  # one {col: sign} per row

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        return [[r.get(j, 0) for j in range(len(self.cols))] for r in self.entries]

    def transpose_entries(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in self.cols]
        for i, r in enumerate(self.entries):
            for j, v in r.items():
                out[j][i] = v
        return out


def boundary_matrix(K: SimplicialComplex, k: int) -> BoundaryMatrix:
    if K.is_void:
        raise VoidComplex("the void complex has no chain complex")
    rows = K.faces_of_dim(k - 1)
    cols = K.faces_of_dim(k)
    index = {f: i for i, f in enumerate(rows)}
    entries: list[dict[int, int]] = [{} for _ in rows]
    if k >= 0:
        for j, face in enumerate(cols):
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1:]
                entries[index[sub]][j] = -1 if pos % 2 else 1
    return BoundaryMatrix(k, rows, cols, tuple(entries))


@dataclass(frozen=True)
class HomologyProfile:
    """dim H~_i for -1 <= i <= dim K; missing indices are zero."""

    dims: Mapping[int, int]
    field: FieldSpec = field(default=RATIONALS)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def support(self) -> dict[int, int]:
        return {i: v for i, v in sorted(self.dims.items()) if v}

    def is_acyclic(self) -> bool:
        return not any(self.dims.values())

    def to_json(self) -> dict:
        return {"field": self.field.name, "dims": {str(i): v for i, v in self.support().items()}}

    @classmethod
    def from_json(cls, obj: dict) -> "HomologyProfile":
        name = obj["field"]
        fs = RATIONALS if name == "Q" else FieldSpec(int(name.split(":")[1]))
        return cls({int(k): int(v) for k, v in obj["dims"].items()}, fs)


def _ranks(K: SimplicialComplex, field: FieldSpec, transpose: bool) -> dict[int, int]:
    ranks = {}
    for k in range(0, K.dimension + 1):
        B = boundary_matrix(K, k)
        if transpose:
            ranks[k] = exact.rank(B.transpose_entries(), len(B.rows), field.p)
        else:
            ranks[k] = exact.rank(B.entries, len(B.cols), field.p)
    return ranks


def _profile(K: SimplicialComplex, field: FieldSpec, transpose: bool) -> HomologyProfile:
    if K.is_void:
        return HomologyProfile({}, field)
    ranks = _ranks(K, field, transpose)
    dims = {}
    for k in range(-1, K.dimension + 1):
        nfaces = len(K.faces_of_dim(k))
        dims[k] = nfaces - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return HomologyProfile(dims, field)


def reduced_betti_dims(K: SimplicialComplex, field: FieldSpec = RATIONALS) -> HomologyProfile:
    """Reduced homology dimensions; all zero for the void complex."""
    return _profile(K, field, transpose=False)


def reduced_cohomology_dims(K: SimplicialComplex, field: FieldSpec = RATIONALS) -> HomologyProfile:
    """Reduced cohomology dimensions, computed from the coboundary (transposed) maps."""
    return _profile(K, field, transpose=True)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic from the f-vector (empty face included)."""
    return sum((-1) ** (k - 1) * len(level) for k, level in enumerate(K.faces))
