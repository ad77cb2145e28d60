import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import BASE_KITE3, SKEW3, random_skew, skew_matrices
from tropeig.combinat import ConnectedFunction, enumerate_kites
from tropeig.cones import classify
from tropeig.core import TropMatrix, normalize_last
from tropeig.errors import DimensionTooSmall, NonUniqueEigenvector, NotAKite, NotSkew
from tropeig.skewrank import (
    SkewMatrix,
    classify_skew,
    rank,
    realize_kite,
    skew_cone_structure,
    skew_eigenvalue_sign,
    validate_skew,
)
from tropeig.spectral import eigenspace

CYC3 = ConnectedFunction.from_one_based([2, 3, 1])


def skew_R(n, k):
    """Row-minus-column indicator for index k: skew and in the lineality space."""
    return TropMatrix([[(i == k) - (j == k) for j in range(n)] for i in range(n)])


class TestValidate:
    def test_valid(self):
        assert validate_skew(TropMatrix.zeros(3)) == TropMatrix.zeros(3)
        assert isinstance(validate_skew(TropMatrix([[0, 1], [-1, 0]])), SkewMatrix)

    def test_offending_pair(self):
        with pytest.raises(NotSkew) as err:
            validate_skew(TropMatrix([[0, 1], [1, 0]]))
        assert (err.value.i, err.value.j) == (0, 1)

    def test_nonzero_diagonal(self):
        with pytest.raises(NotSkew):
            SkewMatrix([[1, 0], [0, -1]])

    def test_from_upper(self):
        A = SkewMatrix.from_upper(3, {(0, 1): 6, (0, 2): -3, (1, 2): 3})
        assert A == SKEW3


class TestSignLaw:
    def test_zero(self):
        assert skew_eigenvalue_sign(SkewMatrix.from_upper(3, {})) == (0, True)

    def test_base_kite(self):
        assert skew_eigenvalue_sign(BASE_KITE3) == (1, False)

    @pytest.mark.parametrize("k", range(4))
    def test_lineality_generators(self, k):
        assert skew_eigenvalue_sign(validate_skew(skew_R(4, k))) == (0, True)

    @settings(max_examples=100, deadline=None)
    @given(skew_matrices(2, 5))
    def test_random(self, A):
        lam, lin = skew_eigenvalue_sign(A)
        assert lam >= 0 and (lam == 0) == lin


class TestClassifySkew:
    def test_example(self):
        res = classify_skew(SKEW3)
        assert res.is_generic and res.phi == CYC3
        assert res.eigenvector == (1, -1, 0)

    def test_zero(self):
        assert not classify_skew(SkewMatrix.from_upper(3, {})).is_generic

    @settings(max_examples=100, deadline=None)
    @given(skew_matrices(3, 5))
    def test_generic_types_are_kites(self, A):
        res = classify_skew(A)
        if res.is_generic:
            assert len(res.phi.cycle()) >= 3

    def test_two_cycle_cones_are_empty_on_skew_matrices(self, rng):
        for _ in range(200):
            res = classify(random_skew(rng, rng.randint(2, 4)))
            assert not res.is_generic or len(res.phi.cycle()) >= 3


class TestRank:
    def test_example(self):
        r = rank(SKEW3)
        assert r.eigenvector == (1, -1, 0)
        assert r.order == (0, 2, 1)
        assert r.ties == ()

    def test_base_kite_full_tie(self):
        r = rank(BASE_KITE3)
        assert r.eigenvector == (0, 0, 0)
        assert r.order == (0, 1, 2)
        assert r.ties == ((0, 1, 2),)

    def test_zero_matrix(self):
        with pytest.raises(NonUniqueEigenvector):
            rank(SkewMatrix.from_upper(3, {}))

    def test_order_is_permutation(self, rng):
        for _ in range(100):
            A = random_skew(rng, rng.randint(3, 5))
            try:
                r = rank(A)
            except NonUniqueEigenvector:
                continue
            assert sorted(r.order) == list(range(A.n))
            xs = [r.eigenvector[i] for i in r.order]
            assert xs == sorted(xs, reverse=True)

    @settings(max_examples=60, deadline=None)
    @given(skew_matrices(3, 5))
    def test_covariant_under_skew_lineality(self, A):
        # A + t R_k keeps the type and moves the eigenvector by t e_k,
        # so the ranking is re-sorted rather than preserved
        try:
            base = rank(A)
        except NonUniqueEigenvector:
            return
        phi = classify(A).phi
        for k in range(A.n):
            for t in (F(-2), F(7, 3)):
                B = validate_skew(A.add(skew_R(A.n, k).scaled(t)))
                assert classify(B).phi == phi
                moved = rank(B)
                shifted = [v + t * (i == k) for i, v in enumerate(base.eigenvector)]
                assert moved.eigenvector == normalize_last(shifted)
                assert moved.order == tuple(sorted(range(A.n), key=lambda i: (-shifted[i], i)))

    def test_order_changes_along_lineality(self):
        r = rank(SKEW3)
        moved = rank(validate_skew(SKEW3.add(skew_R(3, 1).scaled(3))))
        assert moved.eigenvector == (1, 2, 0)
        assert moved.order != r.order


class TestRealizeKite:
    def test_base_case(self):
        assert realize_kite(CYC3) == BASE_KITE3

    def test_not_a_kite(self):
        with pytest.raises(NotAKite):
            realize_kite(ConnectedFunction.from_one_based([1, 1]))
        with pytest.raises(NotAKite):
            realize_kite(ConnectedFunction.from_one_based([2, 1, 1]))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_round_trip(self, n):
        for phi in enumerate_kites(n):
            A = realize_kite(phi)
            assert isinstance(A, SkewMatrix)
            assert classify_skew(A).phi == phi

    def test_round_trip_sampled_n6(self):
        for phi in random.Random(6).sample(enumerate_kites(6), 100):
            assert classify_skew(realize_kite(phi)).phi == phi


class TestConeStructure:
    @pytest.mark.parametrize("n", [4, 5])
    def test_exhaustive(self, n):
        m = n * (n - 3)
        for phi in enumerate_kites(n):
            s = skew_cone_structure(phi)
            assert len(s.facet_directions) == m
            assert s.pair_count == m // 2
            assert s.independent_rank == m // 2

    def test_sampled_n6(self):
        for phi in random.Random(60).sample(enumerate_kites(6), 50):
            s = skew_cone_structure(phi)
            assert (len(s.facet_directions), s.pair_count, s.independent_rank) == (18, 9, 9)

    def test_pairs_are_antipodal(self):
        s = skew_cone_structure(enumerate_kites(4)[0])
        for k, m in s.pairs:
            assert s.facet_directions[k] == tuple(-c for c in s.facet_directions[m])

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_observed_dimensions(self, n):
        s = skew_cone_structure(enumerate_kites(n)[0])
        assert s.lineality_dim == n - 1
        assert s.quotient_dim == n * (n - 1) // 2 - (n - 1)

    def test_realized_point_satisfies_facets(self):
        # every facet form is strictly negative at an interior point
        for phi in enumerate_kites(4):
            A = realize_kite(phi)
            s = skew_cone_structure(phi)
            coords = [A[i, j] for i in range(4) for j in range(i + 1, 4)]
            for f in s.facet_forms:
                assert sum(c * a for c, a in zip(f, coords)) < 0

    def test_too_small(self):
        with pytest.raises(DimensionTooSmall):
            skew_cone_structure(CYC3)

    def test_not_a_kite(self):
        with pytest.raises(NotAKite):
            skew_cone_structure(ConnectedFunction.from_one_based([2, 1, 1, 1]))


def test_two_disjoint_triangles_are_degenerate():
    # two copies of the base 3-cycle block, all cross entries zero
    upper = {(0, 1): 1, (1, 2): 1, (0, 2): -1, (3, 4): 1, (4, 5): 1, (3, 5): -1}
    A = SkewMatrix.from_upper(6, upper)
    res = classify_skew(A)
    assert res.outcome == "degenerate" and res.disconnected
    assert len(eigenspace(A).vertices) == 2
