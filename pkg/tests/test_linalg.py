from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from skewhom.constructions import alpha_theta, p_matrix
from skewhom.errors import DimensionError, SingularMatrixError
from skewhom.linalg import (
    basis_vec,
    det,
    identity,
    mat,
    mat_inv,
    mat_mul,
    mat_neg,
    mat_pow,
    mat_vec,
    vec_add,
    vec_scale,
    vec_sub,
    wedge3,
    zero_mat,
)
from skewhom.scalars import quadratic_backend

from strategies import int_vectors


def test_identity_is_neutral():
    a = mat([[1, 2], [3, 4]])
    assert mat_mul(identity(2), a) == a
    assert mat_mul(a, identity(2)) == a


def test_alpha_zero_squares_to_minus_identity():
    alpha, be = alpha_theta(0)
    assert alpha == ((F(0), F(1)), (F(-1), F(0)))
    assert mat_mul(alpha, alpha) == mat_neg(identity(2))


def test_p_zero_is_an_involution():
    be = quadratic_backend(0)
    p = p_matrix(0, be)
    assert mat_mul(p, p) == identity(4)


def test_mat_inv_examples():
    assert mat_inv(identity(3)) == identity(3)
    alpha, _ = alpha_theta(0)
    assert mat_inv(alpha) == mat_neg(alpha)
    with pytest.raises(SingularMatrixError):
        mat_inv(zero_mat(2, 2))


def test_det_examples():
    assert det(identity(3)) == 1
    assert det(mat([[1, 0, 0], [0, 1, 0], [0, 0, -1]])) == -1
    alpha, be = alpha_theta(1)
    # [[-1, sqrt2], [-sqrt2, 1]] has determinant -1 + 2 = 1
    assert det(alpha, be) == 1


def test_det_of_quadratic_matrix_stays_exact():
    be = quadratic_backend(1)
    s = be.sqrt_d
    m = mat([[s, 1], [1, s]])
    assert det(m, be) == 1  # s*s - 1 = 2 - 1


def test_wedge3_basis_example():
    e = [basis_vec(4, i) for i in range(4)]
    assert wedge3(e[1], e[2], e[3]) == (F(1), F(0), F(0), F(0))


def test_wedge3_repeated_argument_vanishes():
    u = (F(1), F(2), F(3), F(4))
    w = (F(5), F(-1), F(0), F(2))
    assert wedge3(u, u, w) == (0, 0, 0, 0)


def test_wedge3_bracket_combination_at_theta_zero():
    # closed-form coefficient a = -1 for x = e1, y = e2 at theta = 0
    be = quadratic_backend(0)
    p = p_matrix(0, be)
    r = (F(0), F(1), F(-1), F(0))
    e1, e2 = basis_vec(4, 0), basis_vec(4, 1)
    pe1 = mat_vec(p, e1)
    pe2 = mat_vec(p, e2)
    value = vec_sub(wedge3(pe1, r, e2), wedge3(pe2, r, e1))
    assert value == (F(-1), F(0), F(0), F(-1))


def test_wedge3_dimension_error():
    with pytest.raises(DimensionError):
        wedge3((1, 2, 3), (1, 2, 3), (1, 2, 3))


@given(int_vectors(4), int_vectors(4), int_vectors(4))
def test_wedge3_alternating(u, v, w):
    assert wedge3(u, v, w) == tuple(-x for x in wedge3(v, u, w))
    assert wedge3(u, v, w) == tuple(-x for x in wedge3(u, w, v))
    assert wedge3(u, u, w) == (0, 0, 0, 0)
    assert wedge3(u, v, v) == (0, 0, 0, 0)


@given(
    int_vectors(4),
    int_vectors(4),
    int_vectors(4),
    int_vectors(4),
    st.integers(-5, 5).map(F),
    st.integers(-5, 5).map(F),
)
def test_wedge3_linear_in_first_argument(u1, u2, v, w, a, b):
    combo = vec_add(vec_scale(a, u1), vec_scale(b, u2))
    lhs = wedge3(combo, v, w)
    rhs = vec_add(
        vec_scale(a, wedge3(u1, v, w)), vec_scale(b, wedge3(u2, v, w))
    )
    assert lhs == rhs


def int_matrices(n=3, bound=4):
    entry = st.integers(min_value=-bound, max_value=bound).map(F)
    return st.tuples(*([st.tuples(*([entry] * n))] * n))


@settings(max_examples=30, deadline=None)
@given(int_matrices())
def test_inverse_is_exact(a):
    assume(det(a) != 0)
    assert mat_mul(mat_inv(a), a) == identity(3)


@settings(max_examples=30, deadline=None)
@given(int_matrices(), int_matrices())
def test_det_is_multiplicative(a, b):
    assert det(mat_mul(a, b)) == det(a) * det(b)


def test_mat_pow_negative_exponent():
    a = mat([[2, 1], [1, 1]])
    assert mat_pow(a, 0) == identity(2)
    assert mat_pow(a, 3) == mat_mul(a, mat_mul(a, a))
    assert mat_mul(mat_pow(a, -2), mat_pow(a, 2)) == identity(2)


def test_mixed_quadratic_and_rational_entries():
    be = quadratic_backend(1)
    s = be.sqrt_d
    m = mat([[F(1), s], [s, F(3)]])
    inv = mat_inv(m, be)
    assert mat_mul(inv, m) == identity(2)
