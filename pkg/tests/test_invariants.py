import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pilebetti.betti import betti_table, zgraded
from pilebetti.invariants import (
    gorenstein_condition,
    gorenstein_symmetry_check,
    highest_syzygy,
    partition_count,
    pn_highest_rank,
    projective_dimension,
    projective_dimension_from_table,
    regularity_bound,
)
from pilebetti.lattice import veronese_generators, zdegree

from .conftest import VERONESE_CORPUS


def enumerate_count(q, k):
    return sum(1 for b in itertools.product(*(range(k // qi + 1) for qi in q)) if sum(x * y for x, y in zip(q, b)) == k)


class TestProjectiveDimension:
    @pytest.mark.parametrize("q,d,expected", [((1, 1, 1), 2, 3), ((3, 3, 3, 2, 2, 2, 2), 1, 19), ((1, 1, 2), 1, 1)])
    def test_closed_form(self, q, d, expected):
        assert projective_dimension(veronese_generators(q, d)) == expected

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_table_agrees(self, q, d):
        T = betti_table(veronese_generators(q, d))
        assert projective_dimension_from_table(T) == projective_dimension(T.generators)


class TestRegularity:
    def test_projective_space(self):
        for n in range(0, 4):
            for d in range(1, 5):
                rep = regularity_bound((1,) * (n + 1), d, with_top_syzygy=False)
                assert rep.bound == n + 1 - math.ceil((n + 1) / d)
                assert rep.equality_certified

    def test_first_counterexample(self):
        rep = regularity_bound((3, 3, 3, 2, 2, 2, 2), 1)
        assert (rep.bound, rep.rho, rep.equality_certified) == (4, 1, False)
        assert rep.lower_bound_from_top_syzygy == 3

    def test_second_counterexample(self):
        rep = regularity_bound((3, 2, 1, 1, 1, 1, 1, 1), 1)
        assert rep.equality_certified
        assert rep.bound == 6 == rep.lower_bound_from_top_syzygy

    @given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(1, 4))
    @settings(max_examples=60, deadline=None)
    def test_rho_identity(self, raw, d):
        if math.gcd(*raw) != 1:
            return
        rep = regularity_bound(raw, d, with_top_syzygy=False)
        dr = d * math.lcm(*raw)
        assert 0 <= rep.rho < dr
        assert math.ceil(sum(raw) / dr) * dr == sum(raw) + rep.rho

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_bound_dominates_tables(self, q, d):
        T = betti_table(veronese_generators(q, d))
        reg = max(j - i for i, j, _ in zgraded(T))
        rep = regularity_bound(q, d)
        assert reg <= rep.bound
        assert rep.lower_bound_from_top_syzygy <= reg
        if rep.equality_certified:
            assert reg == rep.bound


class TestGorenstein:
    @pytest.mark.parametrize("q,d,expected", [((1, 1, 1, 1), 2, True), ((1, 1), 3, False), ((1, 1, 1), 3, True)])
    def test_condition(self, q, d, expected):
        assert gorenstein_condition(q, d) is expected

    def test_conic_symmetric(self):
        assert gorenstein_symmetry_check(betti_table(veronese_generators((1, 1), 2)))

    def test_twisted_cubic_asymmetric(self):
        T = betti_table(veronese_generators((1, 1), 3))
        assert T.totals() == [1, 3, 2]
        assert not gorenstein_symmetry_check(T)

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_condition_implies_symmetry(self, q, d):
        if gorenstein_condition(q, d):
            assert gorenstein_symmetry_check(betti_table(veronese_generators(q, d)))


class TestHighestSyzygy:
    def test_first_counterexample(self):
        rep = highest_syzygy((3, 3, 3, 2, 2, 2, 2), 1)
        assert rep.rank == 30
        assert rep.zdeg_histogram() == {22: 30}
        assert rep.homological_index == 19

    def test_second_counterexample(self):
        rep = highest_syzygy((3, 2, 1, 1, 1, 1, 1, 1), 1)
        assert rep.zdeg_histogram() == {671: 6, 670: 1}

    def test_surface(self):
        rep = highest_syzygy((1, 1, 1), 2)
        assert rep.rank == 3 == math.comb(3, 2)

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_matches_table(self, q, d):
        A = veronese_generators(q, d)
        T = betti_table(A)
        rep = highest_syzygy(q, d)
        top = T.at_index(A.N - A.n)
        assert top == {c: 1 for c, _ in rep.generators}
        for c, z in rep.generators:
            assert zdegree(A, c) == z

    @pytest.mark.parametrize("q,d", VERONESE_CORPUS)
    def test_report_invariants(self, q, d):
        A = veronese_generators(q, d)
        dr = d * A.weights.r
        rep = highest_syzygy(q, d)
        assert rep.rank >= 1
        for c, _ in rep.generators:
            b = tuple(t - x - 1 for t, x in zip(A.t, c))
            assert sum(x * y for x, y in zip(q, c)) % dr == 0
            assert min(b) >= 0
            assert not any(all(x >= y for x, y in zip(b, a)) for a in A.points)

    def test_json(self):
        obj = highest_syzygy((1, 1, 1), 2).to_json()
        assert obj["rank"] == 3 and obj["homological_index"] == 3
        assert all(g["zdeg"] == 4 for g in obj["generators"])


class TestPnRank:
    def test_plane(self):
        assert pn_highest_rank(2, 2) == 3

    @pytest.mark.parametrize("d", range(2, 9))
    def test_line(self, d):
        assert pn_highest_rank(1, d) == d - 1

    def test_degree_one(self):
        # zero ideal: the top (0th) syzygy is R itself, one generator
        assert pn_highest_rank(1, 1) == 1 == highest_syzygy((1, 1), 1).rank

    @pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 4) for d in range(2, 6)])
    def test_matches_counting(self, n, d):
        assert pn_highest_rank(n, d) == highest_syzygy((1,) * (n + 1), d).rank


class TestPartitionCount:
    def test_basics(self):
        assert partition_count((5, 7), 0) == 1
        assert [partition_count((1, 1), k) for k in range(6)] == [1, 2, 3, 4, 5, 6]
        assert partition_count((1, 2), 4) == 3

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.integers(0, 30))
    @settings(max_examples=100, deadline=None)
    def test_matches_enumeration(self, q, k):
        assert partition_count(q, k) == enumerate_count(q, k)


def _enumerated(q, k):
    if len(q) == 1:
        return 1 if k % q[0] == 0 else 0
    return sum(_enumerated(q[1:], k - x * q[0]) for x in range(k // q[0] + 1))


@pytest.mark.parametrize("k", range(16))
def test_partition_count_eight_weights_small_k(k):
    q = (3, 2, 1, 1, 1, 1, 1, 1)
    assert partition_count(q, k) == _enumerated(q, k)
