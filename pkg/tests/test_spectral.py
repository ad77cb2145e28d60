from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import CYCLE3, EQ12, SKEW3, matrices
from oracles import eigenpair_residual_zero, longest_path, path_weight, simple_paths, walk_star
from tropeig.core import TropMatrix, kleene_star, tp_equal, trop_apply
from tropeig.errors import DimensionTooLarge, NonUniqueEigenvector
from tropeig.spectral import (
    critical_data,
    eigenspace,
    eigenvalue,
    eigenvalue_oracle,
    eigenvector,
    in_tropical_span,
    maximal_path,
    normalize,
    simple_cycles,
)


def test_simple_cycle_count_on_three_vertices():
    # two 3-cycles, three 2-cycles, three loops
    cycles = list(simple_cycles(3, lambda v: range(3)))
    assert len(cycles) == 8
    assert sorted(map(len, cycles)) == [1, 1, 1, 2, 2, 2, 3, 3]


class TestEigenvalue:
    @pytest.mark.parametrize("c", [0, 5, Fraction(-7, 3)])
    def test_constant_matrix(self, c):
        assert eigenvalue(TropMatrix.constant(4, c)) == c

    def test_eq12(self):
        assert eigenvalue(EQ12) == 0
        assert eigenvalue_oracle(EQ12) == 0

    def test_skew_example(self):
        assert eigenvalue(SKEW3) == 4
        assert eigenvalue_oracle(SKEW3) == 4

    def test_oracle_single_loop(self):
        assert eigenvalue_oracle(TropMatrix([[5]])) == 5

    def test_oracle_guard(self):
        with pytest.raises(DimensionTooLarge):
            eigenvalue_oracle(TropMatrix.zeros(9))

    @settings(max_examples=150, deadline=None)
    @given(matrices(1, 5))
    def test_karp_matches_cycle_enumeration(self, A):
        assert eigenvalue(A) == eigenvalue_oracle(A)

    @settings(max_examples=50, deadline=None)
    @given(matrices(1, 4))
    def test_shift_by_constant(self, A):
        c = Fraction(7, 3)
        assert eigenvalue(A.shift(c)) == eigenvalue(A) + c


class TestNormalize:
    def test_zero(self):
        assert normalize(TropMatrix.zeros(3)) == TropMatrix.zeros(3)

    def test_constant(self):
        assert normalize(TropMatrix.constant(3, 4)) == TropMatrix.zeros(3)

    def test_eq12(self):
        assert normalize(EQ12) == EQ12

    @settings(max_examples=50, deadline=None)
    @given(matrices(1, 4))
    def test_cycles_nonpositive_and_one_zero(self, A):
        S = kleene_star(normalize(A))
        assert max(S.diagonal()) == 0
        assert S.to_lists() == walk_star(normalize(A))


class TestCriticalData:
    def test_all_zeros(self):
        cd = critical_data(TropMatrix.zeros(3))
        assert cd.critical_vertices == {0, 1, 2}
        assert len(cd.critical_edges) == 9
        assert len(cd.critical_cycles) == 8
        assert cd.is_connected

    def test_eq12_disconnected(self):
        cd = critical_data(EQ12)
        assert cd.critical_vertices == {0, 1, 2}
        assert {(0,), (1,), (2,), (0, 1)} <= set(cd.critical_cycles)
        assert not cd.is_connected

    def test_skew_example_single_cycle(self):
        cd = critical_data(SKEW3)
        assert cd.critical_cycles == ((0, 1, 2),)
        assert cd.is_connected

    @settings(max_examples=60, deadline=None)
    @given(matrices(1, 5))
    def test_critical_cycles_have_max_mean(self, A):
        cd = critical_data(A)
        assert cd.critical_vertices
        for cyc in cd.critical_cycles:
            k = len(cyc)
            w = sum(A[cyc[t], cyc[(t + 1) % k]] for t in range(k))
            assert Fraction(w) / k == cd.lam
        assert set(v for c in cd.critical_cycles for v in c) == cd.critical_vertices


class TestEigenvector:
    def test_constant(self):
        ep = eigenvector(TropMatrix.constant(3, 2))
        assert ep.lam == 2 and ep.x == (0, 0, 0)

    def test_cycle_example(self):
        ep = eigenvector(CYCLE3)
        assert ep.lam == 3 and ep.x == (3, 0, 0)
        # longest-path oracle: x_i = best path weight i -> 0 in B, with x_0 = 0
        B = CYCLE3.shift(-3)
        x = [Fraction(0)] + [longest_path(B, i, 0) for i in (1, 2)]
        assert tp_equal(ep.x, x)

    def test_skew_example(self):
        ep = eigenvector(SKEW3)
        assert ep.lam == 4 and ep.x == (1, -1, 0)
        assert trop_apply(SKEW3, ep.x) == tuple(v + 4 for v in ep.x)

    def test_non_unique(self):
        with pytest.raises(NonUniqueEigenvector):
            eigenvector(EQ12)

    def test_bad_anchor(self):
        A = TropMatrix([[5, -9], [-9, 0]])
        with pytest.raises(ValueError):
            eigenvector(A, anchor=1)

    @settings(max_examples=100, deadline=None)
    @given(matrices(1, 5))
    def test_eigen_equation_and_anchor_independence(self, A):
        cd = critical_data(A)
        if not cd.is_connected:
            return
        ep = eigenvector(A)
        assert ep.x[-1] == 0
        assert eigenpair_residual_zero(A, ep.lam, ep.x)
        for ell in cd.critical_vertices:
            assert eigenvector(A, anchor=ell) == ep

    @settings(max_examples=50, deadline=None)
    @given(matrices(2, 4))
    def test_constant_shift_keeps_vector(self, A):
        if not critical_data(A).is_connected:
            return
        a, b = eigenvector(A), eigenvector(A.shift(5))
        assert b.lam == a.lam + 5 and b.x == a.x


class TestEigenspace:
    def test_eq12_segment(self):
        P = eigenspace(EQ12)
        assert set(P.vertices) == {(1, 1, 0), (-1, -1, 0)}
        assert P.contains((0, 0, 0))
        assert not P.contains((0, 1, 0))

    def test_zero_matrix(self):
        assert eigenspace(TropMatrix.zeros(3)).vertices == ((0, 0, 0),)

    def test_generic_is_single_point(self):
        P = eigenspace(SKEW3)
        assert P.vertices == ((1, -1, 0),)

    def test_span_membership(self):
        gens = [(1, 1, 0), (-1, -1, 0)]
        assert in_tropical_span((Fraction(1, 2), Fraction(1, 2), 0), gens)
        assert not in_tropical_span((1, 0, 0), gens)

    @settings(max_examples=80, deadline=None)
    @given(matrices(1, 5))
    def test_generators_are_eigenvectors(self, A):
        lam = eigenvalue(A)
        P = eigenspace(A)
        assert 1 <= len(P.vertices) <= A.n
        for g in P.generators:
            assert eigenpair_residual_zero(A, lam, g)
        if critical_data(A).is_connected:
            assert P.vertices == (eigenvector(A).x,)


class TestMaximalPath:
    def test_cycle_example_unique(self):
        w = maximal_path(normalize(CYCLE3), 0, 2)
        assert w.vertices == (0, 1, 2) and w.weight == 3 and w.unique

    def test_zero_loop(self):
        w = maximal_path(TropMatrix([[0, -1], [-1, -3]]), 0, 0)
        assert w.vertices == (0, 0) and w.weight == 0 and w.unique

    def test_eq12_tie(self):
        w = maximal_path(EQ12, 0, 2)
        assert w.weight == -1 and not w.unique

    @settings(max_examples=50, deadline=None)
    @given(matrices(2, 4))
    def test_weight_and_witness(self, A):
        B = normalize(A)
        for i in range(A.n):
            for j in range(A.n):
                w = maximal_path(B, i, j)
                assert w.weight == longest_path(B, i, j)
                assert path_weight(B, w.vertices) == w.weight
                ties = [p for p in simple_paths(A.n, i, j) if path_weight(B, p) == w.weight]
                assert w.unique == (len(ties) == 1)
