"""Tests for truncated generating-function tables and the shuffle identity."""

import random
from fractions import Fraction

import pytest

from mzvkit.matrices import mat_mul, perm_matrix, upper_ones
from mzvkit.numeric import BigReal, eval_admissible
from mzvkit.polynomials import MultiPoly
from mzvkit.regularization import MzvCombo
from mzvkit.series import (
    SeriesTrunc,
    block_product,
    build_series,
    normalize_scheme,
    series_shuffle_check,
    series_table_rows,
)


def z(*k):
    return MzvCombo.of_index(tuple(k))


class TestBuildSeries:
    def test_scheme_aliases(self):
        assert normalize_scheme("♮") == "natural"
        assert normalize_scheme("*") == "stuffle"
        assert normalize_scheme("#") == "shuffle"
        assert normalize_scheme("♯") == "shuffle"
        with pytest.raises(ValueError):
            normalize_scheme("qsh")

    def test_depth_one_stuffle(self):
        s = build_series("stuffle", 1, 4)
        assert s.coefficient((1,)).is_zero()
        assert s.coefficient((2,)) == z(2)
        assert s.coefficient((3,)) == z(3)

    def test_admissible_coefficient_is_plain_value(self):
        s = build_series("*", 2, 4)
        assert s.coefficient((2, 2)) == z(2, 2)
        assert s.coefficient((1, 3)) == z(1, 3)

    def test_natural_depth_two_values(self):
        s = build_series("natural", 2, 4)
        # weighted surjection sum: half of the collapsed index joins in
        assert s.coefficient((1, 1)).is_zero()
        assert s.coefficient((1, 2)) == z(1, 2) + z(3).scaled(Fraction(1, 2))
        assert s.coefficient((2, 2)) == z(2, 2) + z(4).scaled(Fraction(1, 2))

    def test_natural_depth_one_equals_stuffle(self):
        a = build_series("natural", 1, 5)
        b = build_series("stuffle", 1, 5)
        assert a.coefficients == b.coefficients

    def test_depth_zero(self):
        s = build_series("natural", 0, 3)
        assert s.coefficient(()) == MzvCombo.one()

    def test_index_enumeration(self):
        s = build_series("natural", 2, 4)
        assert s.indices() == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]

    def test_numeric_mode(self):
        s = build_series("stuffle", 1, 3, mode="numeric", digits=50)
        direct = eval_admissible((2,), 50)
        # same cache canonicalization: bit-identical values
        assert s.coefficient((2,)).value == direct.value

    def test_numeric_natural_table(self):
        s = build_series("natural", 2, 4, mode="numeric", digits=40)
        assert len(s.coefficients) == 6
        assert all(isinstance(v, BigReal) for v in s.coefficients.values())
        rows = series_table_rows(s)
        assert len(rows) == 6 and rows[0][0] == "(1,1)"

    def test_weight_bound_guard(self):
        with pytest.raises(ValueError):
            build_series("natural", 3, 2)
        with pytest.raises(ValueError):
            SeriesTrunc(2, 4, {(2, 3): MzvCombo.zero()}, "symbolic")


class TestSeriesActions:
    def test_permute_transport(self):
        table = {(1, 2): z(3), (2, 1): z(1, 2).scaled(2)}
        s = SeriesTrunc(2, 3, table, "symbolic")
        swapped = s.permute((2, 1))
        assert swapped.coefficient((2, 1)) == z(3)
        assert swapped.coefficient((1, 2)) == z(1, 2).scaled(2)

    def test_permute_matches_matrix_action(self):
        rng = random.Random(41)
        s = build_series("natural", 3, 5)
        for _ in range(5):
            sigma = tuple(rng.sample(range(1, 4), 3))
            a = s.permute(sigma)
            b = s.act_matrix(perm_matrix(sigma))
            keys = set(a.coefficients) | set(b.coefficients)
            assert all(a.coefficient(k) == b.coefficient(k) for k in keys)

    def test_action_contravariant(self):
        s = build_series("natural", 2, 5)
        g1 = upper_ones(2)
        g2 = perm_matrix((2, 1))
        lhs = s.act_matrix(mat_mul(g1, g2))
        rhs = s.act_matrix(g1).act_matrix(g2)
        keys = set(lhs.coefficients) | set(rhs.coefficients)
        assert all(lhs.coefficient(k) == rhs.coefficient(k) for k in keys)

    def test_action_preserves_weight(self):
        s = build_series("natural", 2, 5)
        acted = s.act_matrix(upper_ones(2))
        assert all(sum(k) <= 5 for k in acted.coefficients)

    def test_action_matches_polynomial_model(self):
        # a table whose every value is a rational multiple of one fixed
        # symbol transforms exactly like the rational polynomial
        rng = random.Random(42)
        n, K = 2, 5
        ratios = {}
        table = {}
        for w in range(n, K + 1):
            for k in [(a, w - a) for a in range(1, w)]:
                q = Fraction(rng.randrange(-5, 6))
                ratios[k] = q
                table[k] = z(2).scaled(q)
        s = SeriesTrunc(n, K, table, "symbolic")
        poly = MultiPoly(n, {tuple(p - 1 for p in k): q
                             for k, q in ratios.items() if q})
        gamma = mat_mul(upper_ones(2), perm_matrix((2, 1)))
        acted_series = s.act_matrix(gamma)
        from mzvkit.matrices import act_matrix as act_poly
        acted_poly = act_poly(poly, gamma)
        for k in acted_series.indices():
            expo = tuple(p - 1 for p in k)
            assert acted_series.coefficient(k) == z(2).scaled(acted_poly.coefficient(expo))

    def test_block_product(self):
        a = build_series("stuffle", 1, 5)
        b = build_series("stuffle", 1, 5)
        prod = block_product(a, b, 5)
        # symbolic values multiply through the quasi-shuffle expansion
        assert prod.coefficient((2, 3)) == z(2, 3) + z(3, 2) + z(5)
        assert prod.n == 2
        assert all(sum(k) <= 5 for k in prod.coefficients)

    def test_mode_mixing_rejected(self):
        a = build_series("stuffle", 1, 3)
        b = build_series("stuffle", 1, 3, mode="numeric", digits=30)
        with pytest.raises(ValueError):
            block_product(a, b)


class TestShuffleIdentity:
    def test_weighted_scheme_defect_vanishes(self):
        d = series_shuffle_check(2, 1, 5, digits=50)
        assert d.is_zero()

    def test_weighted_scheme_cancels_symbolically(self):
        # the identity holds term by term in the quasi-shuffle algebra, so
        # the symbolic difference is empty before any numerics
        from mzvkit.groupring import shuffle_operator
        for n, i, K in [(2, 1, 6), (3, 2, 6)]:
            left = build_series("natural", i, K)
            right = build_series("natural", n - i, K)
            full = build_series("natural", n, K)
            lhs = block_product(left, right, K)
            rhs = None
            for sigma in sorted(shuffle_operator(n, i).support()):
                acted = full.permute(sigma)
                rhs = acted if rhs is None else rhs + acted
            keys = set(lhs.coefficients) | set(rhs.coefficients)
            assert all((lhs.coefficient(k) - rhs.coefficient(k)).is_zero()
                       for k in keys)

    def test_admissible_truncation_breaks_identity(self):
        d = series_shuffle_check(2, 1, 5, scheme="stuffle",
                                 admissible_only=True, digits=40)
        assert not d.is_zero()
        assert float(d) > 0.1

    def test_plain_stuffle_scheme_has_defect(self):
        d = series_shuffle_check(2, 1, 5, scheme="stuffle", digits=40)
        assert float(d) > 1.0

    def test_bad_split_rejected(self):
        with pytest.raises(ValueError):
            series_shuffle_check(2, 2, 5)
        with pytest.raises(ValueError):
            series_shuffle_check(2, 0, 5)
