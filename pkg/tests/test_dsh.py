"""Tests for the double shuffle spaces, the cyclic-invariance kernel, and
the translation-invariance properties.

Dimension tables below are frozen from runs of both elimination pivot
orders, which must agree; the depth-two pattern (nonzero only in even
degree, dimension floor(d/6)) matches the classical period-polynomial
count, which is an independent anchor for the whole pipeline.
"""

import random
from fractions import Fraction

import pytest

from mzvkit.dsh import (
    act_groupring,
    double_shuffle_space,
    cyclic_invariance_kernel,
    dimension_table,
    divided_difference,
    dsh_dimension,
    functional_equation_space,
    second_order_divergence,
    symmetric_dti_solutions,
    symmetric_slice_basis,
    vector_space_dimension,
)
from mzvkit.groupring import GroupRingElem, shuffle_operator
from mzvkit.linalg import span_equal
from mzvkit.matrices import (
    act_matrix,
    cyclic_action_matrix,
    mat_inverse_unimodular,
    upper_ones,
)
from mzvkit.polynomials import MultiPoly, monomial_exponents

DEPTH2_DIMS = {0: 0, 1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 1,
               7: 0, 8: 1, 9: 0, 10: 1, 11: 0, 12: 2}
DEPTH3_DIMS = {0: 0, 1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0, 7: 0, 8: 1}


def random_poly(rng, n, max_deg, max_terms=5):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        expo = tuple(rng.randrange(0, max_deg + 1) for _ in range(n))
        terms[expo] = Fraction(rng.randrange(-9, 10))
    return MultiPoly(n, terms)


def satisfies_double_shuffle(f):
    n = f.nvars
    twisted = act_matrix(f, mat_inverse_unimodular(upper_ones(n)))
    for i in range(1, n):
        sh = shuffle_operator(n, i)
        if not act_groupring(f, sh).is_zero():
            return False
        if not act_groupring(twisted, sh).is_zero():
            return False
    return True


class TestDoubleShuffleSpace:
    def test_depth_one_is_everything(self):
        for d in range(0, 5):
            basis = double_shuffle_space(1, d)
            assert len(basis) == 1
            assert basis[0] == MultiPoly(1, {(d,): 1})

    def test_depth_two_dimension_table(self):
        assert dimension_table(2, range(0, 13)) == DEPTH2_DIMS

    def test_depth_three_dimension_table(self):
        assert dimension_table(3, range(0, 9)) == DEPTH3_DIMS

    def test_depth_two_even_degree_pattern(self):
        for d in range(0, 13, 2):
            assert DEPTH2_DIMS[d] == d // 6

    def test_basis_members_satisfy_conditions(self):
        for n, d in [(2, 6), (2, 8), (2, 10), (2, 12), (3, 8)]:
            basis = double_shuffle_space(n, d)
            assert basis, (n, d)
            for f in basis:
                assert f.is_homogeneous() and f.degree() == d
                assert satisfies_double_shuffle(f)

    def test_pivot_orders_agree_on_span(self):
        for n, d in [(2, 6), (2, 12), (3, 8)]:
            monos = monomial_exponents(n, d)
            vecs = {}
            for order in ("left", "right"):
                basis = double_shuffle_space(n, d, pivot_order=order)
                vecs[order] = [tuple(f.coefficient(e) for e in monos) for f in basis]
            assert span_equal(vecs["left"], vecs["right"], len(monos))

    def test_cross_check_wrapper(self):
        assert dsh_dimension(2, 10) == 1
        assert dsh_dimension(2, 10, cross_check=False) == 1

    def test_cyclic_action_sign(self):
        # every basis member is an eigenvector of the cyclic matrix with
        # eigenvalue (-1)^degree
        for n in (2, 3):
            q = cyclic_action_matrix(n)
            for d in range(0, 9):
                for f in double_shuffle_space(n, d):
                    assert act_matrix(f, q) == f.scaled((-1) ** d)

    def test_vector_space_dimension(self):
        assert vector_space_dimension(2, 10) == 11
        assert vector_space_dimension(3, 4) == 15


class TestDividedDifference:
    def test_hand_value(self):
        f = MultiPoly(1, {(2,): 1})
        g = divided_difference(f)
        assert g == MultiPoly(2, {(1, 0): 1, (0, 1): -2})

    def test_divisibility_always_exact(self):
        rng = random.Random(31)
        for _ in range(20):
            n = rng.choice((1, 2, 3))
            f = random_poly(rng, n, 4)
            g = divided_difference(f)
            x = [MultiPoly.variable(i, n + 1) for i in range(1, n + 2)]
            shifted = f.substitute([x[i + 1] - x[0] for i in range(n)])
            dropped = f.substitute([x[i + 1] for i in range(n)])
            assert x[0] * g == shifted - dropped

    def test_constant_gives_zero(self):
        assert divided_difference(MultiPoly.one(2)).is_zero()


class TestCyclicInvarianceKernel:
    def test_kernel_is_zero(self):
        for n, d in [(1, 2), (1, 4), (2, 2), (2, 4), (3, 2)]:
            for order in ("left", "right"):
                assert cyclic_invariance_kernel(n, d, pivot_order=order) == []

    def test_degree_zero_keeps_constants(self):
        ker = cyclic_invariance_kernel(1, 0)
        assert len(ker) == 1
        assert ker[0] == MultiPoly.one(1)

    def test_odd_degree_rejected(self):
        with pytest.raises(ValueError):
            cyclic_invariance_kernel(2, 3)


class TestTranslationInvariance:
    def test_symmetric_slice_basis(self):
        # orbit sums are indexed by partitions of d into at most n parts
        def count(d, n, cap=None):
            cap = d if cap is None else cap
            if d == 0:
                return 1
            if n == 0:
                return 0
            return sum(count(d - first, n - 1, first)
                       for first in range(1, min(cap, d) + 1))

        for n in (2, 3):
            for d in range(0, 6):
                basis = symmetric_slice_basis(n, d)
                assert len(basis) == count(d, n)
                for f in basis:
                    assert f.is_symmetric()
                    assert f.is_homogeneous() and (f.degree() == d or d == 0)

    def test_symmetric_dti_forces_constant(self):
        # symmetric f whose x_1-weighted derivative is translation
        # invariant must be constant, so positive degrees give nothing
        for n in (2, 3):
            sols = symmetric_dti_solutions(n, 0)
            assert len(sols) == 1 and sols[0] == MultiPoly.one(n)
            for d in range(1, 5):
                assert symmetric_dti_solutions(n, d) == []

    def test_chain_rule_identity(self):
        # d/dx_1 d/dx_{n+1} of (x_{n+1}-x_1) f(x_2-x_1,...) equals the
        # negated second-order divergence of f, composed with the shift
        rng = random.Random(32)
        for _ in range(15):
            n = rng.choice((1, 2, 3))
            f = random_poly(rng, n, 4)
            x = [MultiPoly.variable(i, n + 1) for i in range(1, n + 2)]
            shifted_vars = [x[i + 1] - x[0] for i in range(n)]
            big = (x[n] - x[0]) * f.substitute(shifted_vars)
            lhs = big.partial(n + 1).partial(1)
            rhs = (-second_order_divergence(f)).substitute(shifted_vars)
            assert lhs == rhs

    def test_functional_equation_solutions(self):
        # the balance equation pins everything except constants at these
        # sizes; each solution passes the divergence predicate
        for n in (2, 3):
            for d in range(0, 5):
                space = functional_equation_space(n, d)
                if d == 0:
                    assert len(space) == 1
                else:
                    assert space == []
                for f in space:
                    assert second_order_divergence(f).is_zero()


class TestGroupRingAction:
    def test_matches_permute_variables(self):
        rng = random.Random(33)
        f = random_poly(rng, 3, 3)
        sigma = (2, 3, 1)
        elem = GroupRingElem.from_perm(sigma)
        assert act_groupring(f, elem) == f.permute_variables(sigma)

    def test_linear_in_the_element(self):
        rng = random.Random(34)
        f = random_poly(rng, 3, 3)
        a = GroupRingElem.from_perm((2, 3, 1))
        b = GroupRingElem.from_perm((1, 3, 2))
        combo = a * 2 + b * (-3)
        expect = (f.permute_variables((2, 3, 1)).scaled(2)
                  + f.permute_variables((1, 3, 2)).scaled(-3))
        assert act_groupring(f, combo) == expect

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            act_groupring(MultiPoly.one(2), GroupRingElem.one(3))
