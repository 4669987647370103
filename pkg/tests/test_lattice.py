import itertools
import math
import pickle
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from pilebetti.errors import (
    DimensionMismatch,
    DuplicatePoint,
    GcdNotOne,
    InhomogeneousSet,
    NegativeCoordinate,
    NonPositiveWeight,
)
from pilebetti.lattice import (
    box,
    check_complement,
    cone_contains_orthant,
    custom_generators,
    generators_from_json,
    in_lattice,
    in_semigroup,
    make_weights,
    veronese_generators,
    zdegree,
)
from pilebetti.smith import smith_normal_form

from .conftest import SUBLATTICE_EXAMPLE, VERONESE_CORPUS


def semigroup_closure(points, hi):
    """Forward generation of every N-combination of points inside [0, hi]."""
    seen = {tuple(0 for _ in hi)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for a in points:
                w = tuple(x + y for x, y in zip(v, a))
                if w not in seen and all(x <= h for x, h in zip(w, hi)):
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


class TestWeights:
    def test_unit(self):
        q = make_weights((1, 1, 1))
        assert q.q == (1, 1, 1)
        assert q.r == 1

    def test_lcm_from_final_example(self):
        assert make_weights((3, 2, 1, 1, 1, 1, 1, 1)).r == 6

    def test_gcd(self):
        with pytest.raises(GcdNotOne):
            make_weights((2, 4))

    def test_nonpositive(self):
        with pytest.raises(NonPositiveWeight):
            make_weights((1, 0))

    @given(st.lists(st.integers(1, 12), min_size=1, max_size=5))
    def test_r_is_least_common_multiple(self, raw):
        if math.gcd(*raw) != 1:
            return
        r = make_weights(raw).r
        assert all(r % x == 0 for x in raw)
        assert not any(all(m % x == 0 for x in raw) for m in range(1, r))


class TestVeroneseGenerators:
    def test_surface(self, surface):
        assert surface.points == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
        assert surface.N == 5
        assert surface.t == (4, 4, 4)

    def test_weighted_line(self):
        A = veronese_generators((1, 2), 1)
        # direct enumeration of a0 + 2 a1 == 2
        expected = {(a, b) for a in range(3) for b in range(2) if a + 2 * b == 2}
        assert set(A.points) == expected == {(2, 0), (0, 1)}

    def test_single_variable(self):
        A = veronese_generators((1,), 5)
        assert A.points == ((5,),)
        assert A.N == 0

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_defining_condition_closed(self, q, d):
        A = veronese_generators(q, d)
        dr = d * A.weights.r
        assert all(sum(x * y for x, y in zip(q, a)) == dr for a in A.points)
        brute = {a for a in itertools.product(*(range(dr // qi + 1) for qi in q)) if sum(x * y for x, y in zip(q, a)) == dr}
        assert set(A.points) == brute
        assert list(A.points) == sorted(A.points, reverse=True)
        assert A.t == tuple(map(sum, zip(*A.points)))
        assert all(sum(w * x for w, x in zip(A.omega, a)) == 1 for a in A.points)

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_cone_contains_orthant(self, q, d):
        A = veronese_generators(q, d)
        r = A.weights.r
        for i, qi in enumerate(q):
            assert tuple((d * r // qi) if j == i else 0 for j in range(len(q))) in A.points
        assert cone_contains_orthant(A)


class TestCustomGenerators:
    def test_sublattice_example_homogeneous(self):
        A = custom_generators(SUBLATTICE_EXAMPLE)
        # (4,0,0) and (0,0,2) force omega = (1/4, 1/4, 1/2)
        assert A.omega == (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2))
        assert A.provenance == "custom"

    def test_inhomogeneous(self):
        A = custom_generators([(2,), (3,)])
        assert A.omega is None
        with pytest.raises(InhomogeneousSet):
            zdegree(A, (5,))

    def test_duplicate(self):
        with pytest.raises(DuplicatePoint):
            custom_generators([(1, 0), (1, 0)])

    def test_negative(self):
        with pytest.raises(NegativeCoordinate):
            custom_generators([(1, -1)])

    def test_json_roundtrip(self, surface):
        assert generators_from_json(surface.to_json()) == surface
        A = custom_generators(SUBLATTICE_EXAMPLE)
        assert generators_from_json(A.to_json()) == A

    def test_pickle_drops_memo(self, surface):
        in_semigroup(surface, (2, 2, 2))
        clone = pickle.loads(pickle.dumps(surface))
        assert clone == surface
        assert in_semigroup(clone, (2, 2, 2))


class TestComplementAndCone:
    def test_surface_complement(self, surface):
        assert check_complement(surface, (2, 2, 2)) == (1, 1, 1)

    def test_top(self, surface):
        assert check_complement(surface, (3, 3, 3)) == (0, 0, 0)

    @given(st.tuples(*[st.integers(-20, 20)] * 3))
    def test_involution(self, c):
        A = veronese_generators((1, 1, 1), 2)
        assert check_complement(A, check_complement(A, c)) == c

    def test_dimension_mismatch(self, surface):
        with pytest.raises(DimensionMismatch):
            check_complement(surface, (1, 1))

    def test_cone_false(self):
        assert not cone_contains_orthant(custom_generators([(1, 1)]))


class TestSmith:
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=6))
    @settings(max_examples=60, deadline=None)
    def test_invariant_factors_match_sympy(self, rows):
        data = smith_normal_form(rows)
        D = sympy_snf(Matrix(rows), domain=ZZ)
        expected = [abs(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0]
        assert list(data.diagonal) == expected
        # transform is unimodular
        assert abs(Matrix(data.transform).det()) == 1

    def test_sublattice_example(self):
        A = custom_generators(SUBLATTICE_EXAMPLE)
        # ZA = {v0 - v1 = 0 mod 4, v2 = (v0 + v1)/2 mod 2} has index 8
        assert math.prod(A.lattice_data.diagonal) == 8
        assert A.lattice_data.rank == 3
        # the index-4 lattice {v0 = v1 mod 4} cuts 2 P_(1,1,2) exactly in A
        simplex = veronese_generators((1, 1, 2), 2).points
        assert {a for a in simplex if (a[0] - a[1]) % 4 == 0} == set(A.points)


class TestLatticeMembership:
    def test_surface(self, surface):
        assert in_lattice(surface, (2, 2, 2))
        assert not in_lattice(surface, (1, 1, 1))
        assert in_lattice(surface, (0, 0, 0))

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_divisibility_criterion(self, q, d):
        A = veronese_generators(q, d)
        dr = d * A.weights.r
        for c in box((-1,) * A.dim, A.t):
            assert in_lattice(A, c) == (sum(x * y for x, y in zip(q, c)) % dr == 0)

    def test_sublattice_membership_by_enumeration(self):
        A = custom_generators(SUBLATTICE_EXAMPLE)
        # integer combinations with small coefficients cover all members of a small box
        span = set()
        for coeffs in itertools.product(range(-3, 4), repeat=5):
            v = tuple(sum(k * a[j] for k, a in zip(coeffs, A.points)) for j in range(3))
            if all(0 <= x <= 4 for x in v):
                span.add(v)
        for c in box((0, 0, 0), (4, 4, 4)):
            assert in_lattice(A, c) == (c in span)


class TestSemigroup:
    def test_numerical_semigroup(self):
        A = custom_generators([(2,), (3,)])
        assert not in_semigroup(A, (1,))
        assert in_semigroup(A, (0,))
        assert [b for b in range(10) if in_semigroup(A, (b,))] == [0, 2, 3, 4, 5, 6, 7, 8, 9]

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS[:10])
    def test_matches_forward_generation(self, q, d):
        A = veronese_generators(q, d)
        closure = semigroup_closure(A.points, A.t)
        for b in box((0,) * A.dim, A.t):
            assert in_semigroup(A, b) == (b in closure)

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_saturated_for_veronese(self, q, d):
        A = veronese_generators(q, d)
        for b in box((-1,) * A.dim, A.t):
            expected = in_lattice(A, b) and min(b) >= 0
            assert in_semigroup(A, b) == expected

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=5, unique=True), st.tuples(st.integers(-1, 8), st.integers(-1, 8)))
    @settings(max_examples=80, deadline=None)
    def test_semigroup_implies_lattice(self, pts, b):
        pts = [p for p in pts if any(p)]
        if not pts:
            return
        A = custom_generators(pts)
        if in_semigroup(A, b):
            assert in_lattice(A, b) and min(b) >= 0


class TestZdegree:
    def test_surface(self, surface):
        assert zdegree(surface, (2, 2, 2)) == 3
        assert zdegree(surface, surface.t) == 6 == surface.N + 1
        for a in surface.points:
            assert zdegree(surface, a) == 1
