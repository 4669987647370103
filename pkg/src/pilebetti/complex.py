"""Pile complexes, squarefree divisor complexes and Alexander duals.

Faces are bitsets over vertex indices (bit v set means vertex v, i.e. the
v-th point of the generator set, is in the face).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import TooManyVertices
from .lattice import GeneratorSet, _check_length, in_semigroup

MAX_VERTICES = 63
MAX_DUAL_VERTICES = 24


def mask_to_face(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_to_mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex on vertices 0..vertex_count-1.

    ``faces[k]`` holds the k-dimensional faces (k >= -1) as sorted vertex tuples.
    The void complex has no faces at all; ``{()}`` (only the empty face) is a
    different, nonvoid complex.
    """

    vertex_count: int
    faces: tuple[tuple[tuple[int, ...], ...], ...]  # index k+1 holds dimension k

    @classmethod
    def from_masks(cls, vertex_count: int, masks: Iterable[int]) -> "SimplicialComplex":
        by_dim: dict[int, list[tuple[int, ...]]] = {}
        for m in masks:
            f = mask_to_face(m)
            by_dim.setdefault(len(f) - 1, []).append(f)
        if not by_dim:
            return cls(vertex_count, ())
        top = max(by_dim)
        faces = tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(-1, top + 1))
        return cls(vertex_count, faces)

    @classmethod
    def from_maximal_faces(cls, vertex_count: int, maximal: Iterable[Sequence[int]]) -> "SimplicialComplex":
        masks: set[int] = set()
        for f in maximal:
            m = face_to_mask(f)
            sub = m
            # all submasks of m, including 0
            while True:
                masks.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & m
        return cls.from_masks(vertex_count, masks)

    @classmethod
    def void(cls, vertex_count: int) -> "SimplicialComplex":
        return cls(vertex_count, ())

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        """Largest face dimension; -2 for the void complex."""
        return len(self.faces) - 2

    def faces_of_dim(self, k: int) -> tuple[tuple[int, ...], ...]:
        if k < -1 or k + 1 >= len(self.faces):
            return ()
        return self.faces[k + 1]

    def all_faces(self) -> Iterable[tuple[int, ...]]:
        for level in self.faces:
            yield from level

    @cached_property
    def masks(self) -> frozenset[int]:
        return frozenset(face_to_mask(f) for f in self.all_faces())

    def __contains__(self, face) -> bool:
        return face_to_mask(face) in self.masks

    def maximal_faces(self) -> list[tuple[int, ...]]:
        out = []
        masks = self.masks
        for f in self.all_faces():
            m = face_to_mask(f)
            if not any(not (m >> v) & 1 and (m | (1 << v)) in masks for v in range(self.vertex_count)):
                out.append(f)
        return sorted(out)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.masks <= other.masks

    def to_json(self, expanded: bool = False) -> dict:
        out = {"vertices": self.vertex_count, "maximal_faces": [list(f) for f in self.maximal_faces()]}
        if expanded:
            out["faces"] = {str(k - 1): [list(f) for f in level] for k, level in enumerate(self.faces)}
        return out


def _grow(vertex_count: int, admits_empty: bool, extend: Callable[[int, object, int], object | None], seed) -> SimplicialComplex:
    """Breadth-first face enumeration.

    ``extend(mask, state, v)`` returns the state of mask | {v} when that set is
    a face, else None. Only v greater than every vertex of the face is tried.
    """
    if vertex_count > MAX_VERTICES:
        raise TooManyVertices(f"{vertex_count} vertices exceeds the cap of {MAX_VERTICES}")
    if not admits_empty:
        return SimplicialComplex.void(vertex_count)
    levels = [[(0, seed, -1)]]
    while levels[-1]:
        nxt = []
        for mask, state, top in levels[-1]:
            for v in range(top + 1, vertex_count):
                s = extend(mask, state, v)
                if s is not None:
                    nxt.append((mask | (1 << v), s, v))
        levels.append(nxt)
    return SimplicialComplex.from_masks(vertex_count, (m for level in levels for m, _, _ in level))


def pile_complex(A: GeneratorSet, c: Sequence[int]) -> SimplicialComplex:
    """Subsets of A whose coordinatewise sum is at most c."""
    c = _check_length(A, c)
    pts = A.points

    def extend(mask, total, v):
        new = tuple(x + y for x, y in zip(total, pts[v]))
        if all(x <= y for x, y in zip(new, c)):
            return new
        return None

    return _grow(len(pts), all(x >= 0 for x in c), extend, (0,) * A.dim)


def divisor_complex(A: GeneratorSet, c: Sequence[int]) -> SimplicialComplex:
    """Subsets S of A with c minus the sum of S in the semigroup NA."""
    c = _check_length(A, c)
    pts = A.points

    def extend(mask, rest, v):
        new = tuple(x - y for x, y in zip(rest, pts[v]))
        if in_semigroup(A, new):
            return new
        return None

    return _grow(len(pts), in_semigroup(A, c), extend, c)


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """Complements of non-faces of K within its vertex set."""
    M = K.vertex_count
    if M > MAX_DUAL_VERTICES:
        raise TooManyVertices(f"{M} vertices exceeds the Alexander dual cap of {MAX_DUAL_VERTICES}")
    full = (1 << M) - 1
    masks = K.masks
    return SimplicialComplex.from_masks(M, (s for s in range(full + 1) if (full ^ s) not in masks))


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """Face counts by dimension, starting at -1."""
    return tuple(len(level) for level in K.faces)
