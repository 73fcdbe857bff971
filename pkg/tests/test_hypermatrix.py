from fractions import Fraction as F
from itertools import combinations, product
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majorhull import (FLOAT, SINGLETON, InfeasibleError, SymHypermatrix, constraint_rank, entry,
                       extreme_reduce, is_extreme, is_realizable, polytope_dimension, realize,
                       singleton_solution, slice_sums)
from majorhull.hypermatrix import constraint_matrix, realizability

from oracles import (brute_force_feasible, exact_rank, full_array_positive_count, gauss_jordan,
                     incidence, slice_sums_dense)


def random_support(n, d, rng, size, hi=9):
    tuples = list(combinations(range(1, n + 1), d))
    picks = rng.choice(len(tuples), size=min(size, len(tuples)), replace=False)
    return {tuples[int(i)]: F(int(rng.integers(1, hi)), int(rng.integers(1, 5))) for i in picks}


class TestSymHypermatrix:
    def test_symmetric_lookup(self):
        A = SymHypermatrix(2, 2, {(1, 2): 1})
        assert entry(A, 2, 1) == 1

    def test_repeated_index_is_zero(self):
        A = SymHypermatrix(3, 3, {(1, 2, 3): 5})
        assert entry(A, 1, 1, 3) == 0
        assert entry(A, 3, 1, 2) == 5

    def test_absent_is_zero(self):
        assert entry(SymHypermatrix(4, 2, {(1, 2): 1}), 3, 4) == 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            entry(SymHypermatrix(3, 2, {}), 1, 4)

    @pytest.mark.parametrize("support", [{(2, 1): 1}, {(1, 1): 1}, {(1, 5): 1}, {(1, 2): -1},
                                         {(1, 2, 3): 1}])
    def test_rejects_bad_keys(self, support):
        with pytest.raises(ValueError):
            SymHypermatrix(4, 2, support)

    def test_zeros_are_dropped(self):
        assert SymHypermatrix(3, 2, {(1, 2): 0, (1, 3): 2}).support == {(1, 3): 2}


class TestSliceSums:
    def test_two_edges(self):
        assert slice_sums(SymHypermatrix(3, 2, {(1, 2): 1, (1, 3): 1})) == [2, 1, 1]

    def test_empty(self):
        assert slice_sums(SymHypermatrix(4, 3, {})) == [0, 0, 0, 0]

    def test_single_triple(self):
        assert slice_sums(SymHypermatrix(3, 3, {(1, 2, 3): 1})) == [2, 2, 2]

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 2**32))
    def test_matches_dense_expansion(self, d, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(d, 7))
        support = random_support(n, d, rng, int(rng.integers(0, 6)))
        A = SymHypermatrix(n, d, support)
        assert slice_sums(A) == slice_sums_dense(n, d, support)


class TestRealizability:
    def test_paper_counterexample(self):
        assert not is_realizable(2, [2, 1])
        assert realizability(2, [2, 1]) == (False, 4, 3)

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_single_vertex(self, d):
        assert not is_realizable(d, [1])

    def test_single_edge(self):
        assert is_realizable(2, [1, 1])

    def test_fewer_vertices_than_order(self):
        assert is_realizable(3, [0, 0])
        assert not is_realizable(3, [1, 1])

    @pytest.mark.parametrize("d", [2, 3])
    def test_grid_against_brute_force(self, d):
        for n in range(1, 5):
            for R in product(range(5) if n <= 3 else range(4), repeat=n):
                assert is_realizable(d, R) == brute_force_feasible(d, R), (d, R)

    def test_rejects_negative_and_bad_order(self):
        with pytest.raises(ValueError):
            is_realizable(2, [1, -1])
        with pytest.raises(ValueError):
            is_realizable(1, [1, 1])


class TestRealize:
    def test_all_triples_of_three(self):
        assert realize(3, [2, 2, 2]).support == {(1, 2, 3): 1}

    def test_n_equals_d_plus_one(self):
        # oracle: the 4x4 system (d-1)! B w = R
        tuples, B = incidence(4, 3)
        sol, rank = gauss_jordan(B, [F(3, 2)] * 4)
        assert rank == 4 and sol == [F(1, 2)] * 4
        assert realize(3, [3, 3, 3, 3]).support == dict(zip(tuples, sol))

    def test_greedy_trace(self):
        assert realize(2, [2, 1, 1]).support == {(1, 2): 1, (1, 3): 1}

    def test_zero(self):
        assert realize(3, [0, 0, 0, 0]).support == {}
        assert realize(4, [0, 0]).support == {}

    def test_infeasible_carries_inequality(self):
        with pytest.raises(InfeasibleError) as info:
            realize(2, [2, 1])
        assert (info.value.lhs, info.value.rhs) == (4, 3)

    def test_unsorted_input(self):
        A = realize(3, [2, 3, 3, 2])
        assert slice_sums(A) == [2, 3, 3, 2]

    @settings(max_examples=200, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 2**32))
    def test_constructive_soundness(self, d, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(d, 10))
        R = slice_sums(SymHypermatrix(n, d, random_support(n, d, rng, int(rng.integers(0, 8)))))
        A = realize(d, R)
        assert slice_sums(A) == R
        assert len(A.support) <= n
        assert full_array_positive_count(A.support, d) <= n * factorial(d)

    def test_float_mode(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            d = int(rng.integers(2, 5))
            n = int(rng.integers(d, 10))
            w = rng.uniform(0, 1, size=comb(n, d))
            tuples, B = constraint_matrix(d, n)
            R = list(factorial(d - 1) * np.array(B) @ w)
            A = realize(d, R, FLOAT)
            assert np.max(np.abs(np.array(slice_sums(A)) - R)) <= 1e-9 * (1 + max(R))
            assert len(A.support) <= n and all(v > 0 for v in A.support.values())


class TestSingleton:
    def test_edge(self):
        assert singleton_solution(2, 2, [1, 1]).support == {(1, 2): 1}

    def test_triples(self):
        assert singleton_solution(3, 4, [3, 3, 3, 3]).support == {
            t: F(1, 2) for t in combinations(range(1, 5), 3)}

    def test_zero_entry_closed_form(self):
        A = singleton_solution(2, 3, [2, 1, 1])
        assert entry(A, 2, 3) == 0
        assert A.support == realize(2, [2, 1, 1]).support

    def test_wrong_n(self):
        with pytest.raises(ValueError):
            singleton_solution(2, 4, [1, 1, 1, 1])

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            singleton_solution(3, 3, [2, 2, 1])

    @settings(max_examples=100, deadline=None)
    @given(st.integers(2, 5), st.integers(0, 2**32))
    def test_nonnegative_and_agrees_with_realize(self, d, seed):
        rng = np.random.default_rng(seed)
        n = d + 1
        R = [F(int(v), int(rng.integers(1, 4))) for v in rng.integers(0, 12, size=n)]
        if not is_realizable(d, R):
            return
        A = singleton_solution(d, n, R)
        assert all(v >= 0 for v in A.support.values())
        assert A.support == realize(d, R).support
        assert slice_sums(A) == R


class TestPolytope:
    @pytest.mark.parametrize("d,n,expected", [(2, 4, 2), (2, 5, 5), (3, 4, SINGLETON),
                                              (3, 3, SINGLETON), (3, 6, 14)])
    def test_dimension(self, d, n, expected):
        assert polytope_dimension(d, n) == expected

    def test_dimension_needs_n_at_least_d(self):
        with pytest.raises(ValueError):
            polytope_dimension(3, 2)

    @pytest.mark.parametrize("d,n,expected", [(2, 3, 3), (3, 3, 1), (3, 5, 5)])
    def test_rank_examples(self, d, n, expected):
        assert constraint_rank(d, n) == expected

    def test_rank_against_oracle(self):
        for d in range(2, 6):
            for n in range(d, 9):
                _, B = incidence(n, d)
                assert constraint_rank(d, n) == exact_rank(B) == (1 if n == d else n)

    @pytest.mark.parametrize("d,n", [(2, 4), (2, 5), (3, 5), (3, 6), (4, 6)])
    def test_interior_dimension(self, d, n):
        # w = all ones is strictly interior, so the feasible set is a full
        # ball in the affine solution space and its dimension is C(n,d) - rank
        tuples, B = constraint_matrix(d, n)
        R = slice_sums(SymHypermatrix(n, d, {t: 1 for t in tuples}))
        assert is_realizable(d, R)
        assert polytope_dimension(d, n) == len(tuples) - exact_rank(B)
        rng = np.random.default_rng(n * 10 + d)
        null = np.linalg.svd(np.array(B, dtype=float))[2][n:]
        assert null.shape[0] == polytope_dimension(d, n)
        for _ in range(20):
            step = 0.5 * rng.uniform(-1, 1, size=null.shape[0]) @ null
            step *= 0.5 / max(1e-12, np.abs(step).max())
            w = 1 + step
            assert np.all(w > 0)
            assert np.allclose(factorial(d - 1) * np.array(B) @ w,
                               np.array(R, dtype=float))


class TestExtreme:
    def test_disjoint(self):
        assert is_extreme(SymHypermatrix(4, 2, {(1, 2): 1, (3, 4): 1}))

    def test_four_cycle_dependent(self):
        cycle = SymHypermatrix(4, 2, {(1, 2): 1, (2, 3): 1, (3, 4): 1, (1, 4): 1})
        assert not is_extreme(cycle)
        reduced = extreme_reduce(cycle)
        assert reduced.support == {(1, 4): 2, (2, 3): 2}
        assert slice_sums(reduced) == [2, 2, 2, 2]
        assert is_extreme(reduced)

    def test_single_tuple(self):
        assert is_extreme(SymHypermatrix(5, 3, {(1, 2, 3): 4}))
        assert is_extreme(SymHypermatrix(5, 3, {}))

    def test_extreme_unchanged(self):
        A = SymHypermatrix(4, 2, {(1, 2): 3, (3, 4): 1})
        assert extreme_reduce(A) == A

    @settings(max_examples=150, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 2**32))
    def test_reduce_properties(self, d, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(d, 9))
        A = SymHypermatrix(n, d, random_support(n, d, rng, int(rng.integers(1, 20))))
        B = extreme_reduce(A)
        assert slice_sums(B) == slice_sums(A)
        assert is_extreme(B)
        assert len(B.support) <= min(n, len(A.support))
        assert set(B.support) <= set(A.support)
        assert extreme_reduce(B) == B
        assert extreme_reduce(realize(d, slice_sums(A))) == realize(d, slice_sums(A))

    def test_float_values(self):
        A = SymHypermatrix(4, 2, {(1, 2): 0.5, (2, 3): 1.5, (3, 4): 0.5, (1, 4): 1.5})
        B = extreme_reduce(A)
        assert np.allclose(slice_sums(B), slice_sums(A), atol=1e-12)
        assert is_extreme(B)
