import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polya_cert import MatrixForm, SymMatrix
from polya_cert.errors import AsymmetricMatrixError, DegreeError, DimensionError
from polya_cert.matrix_form import (
    WeightedNormalForm,
    coefficient,
    eval_matrix,
    order_unit_shift,
    sigma_mul_matrix,
    validate,
    weighted_normal_form,
)
from polya_cert.poly import ScalarForm, eval_scalar, monomial_count, multinomial, sigma_mul
from polya_cert.psd import is_psd_exact

from conftest import linear, matrix_forms, quad, small_rationals

I2 = SymMatrix.identity(2)


def example_b():
    """[[2x+y, x], [x, x+2y]]"""
    return MatrixForm.from_entries([[linear(2, 2, 1), linear(2, 1, 0)], [linear(2, 1, 0), linear(2, 1, 2)]])


def test_validate_accepts_identity():
    validate(MatrixForm(2, 2, 0, {(0, 0): I2}))


def test_validate_rejects_asymmetric():
    with pytest.raises(AsymmetricMatrixError):
        MatrixForm(2, 2, 1, {(1, 0): [[1, 2], [3, 4]]})


def test_validate_rejects_mixed_degree():
    with pytest.raises(DegreeError):
        MatrixForm(2, 1, 1, {(1, 0): [[1]], (1, 1): [[1]]})


def test_validate_rejects_size_problems():
    with pytest.raises(DimensionError):
        MatrixForm(2, 0, 1, {})
    with pytest.raises(DimensionError):
        MatrixForm(2, 2, 1, {(1, 0): [[1]]})


def test_validate_catches_trusted_asymmetry():
    bad = SymMatrix._trusted([[1, 2], [3, 4]])
    B = MatrixForm(2, 2, 1, {})
    object.__setattr__(B, "coeffs", {(1, 0): bad})
    with pytest.raises(AsymmetricMatrixError):
        validate(B)


def test_sigma_mul_matrix_examples():
    B = MatrixForm.scalar_times_identity(quad(), 2)
    assert sigma_mul_matrix(B).coeffs == {(3, 0): I2, (0, 3): I2}

    P = SymMatrix([[1, 2], [2, 5]])
    B = MatrixForm(2, 2, 2, {(1, 1): P})
    assert sigma_mul_matrix(B).coeffs == {(2, 1): P, (1, 2): P}

    assert sigma_mul_matrix(MatrixForm.zero(2, 2, 3)) == MatrixForm.zero(2, 2, 4)


@given(matrix_forms())
def test_sigma_mul_matrix_is_entrywise(B):
    S = sigma_mul_matrix(B)
    for i in range(B.size):
        for j in range(B.size):
            assert S.entry(i, j) == sigma_mul(B.entry(i, j))


def test_coefficient():
    B = MatrixForm.scalar_times_identity(linear(2, 1, 1), 2)
    assert coefficient(B, (1, 0)) == I2
    with pytest.raises(DegreeError):
        coefficient(B, (0, 2))
    S = sigma_mul_matrix(MatrixForm.scalar_times_identity(quad(), 2))
    assert coefficient(S, (2, 1)) == SymMatrix.zero(2)


def test_eval_matrix_examples():
    assert eval_matrix(MatrixForm(2, 2, 0, {(0, 0): I2}), (Fraction(1, 3), 7)) == I2
    assert eval_matrix(example_b(), (1, 0)) == SymMatrix([[2, 1], [1, 1]])
    B = MatrixForm.scalar_times_identity(quad(), 2)
    assert eval_matrix(B, (Fraction(1, 2), Fraction(1, 2))) == I2 * Fraction(1, 4)
    with pytest.raises(DimensionError):
        eval_matrix(B, (1, 2, 3))


@given(matrix_forms(), st.data())
def test_eval_matrix_entrywise_oracle(B, data):
    x = data.draw(st.lists(small_rationals, min_size=B.n_vars, max_size=B.n_vars))
    A = eval_matrix(B, x)
    for i in range(B.size):
        for j in range(B.size):
            assert A[i, j] == eval_scalar(B.entry(i, j), x)


@given(matrix_forms(), st.data())
def test_sigma_mul_eval_consistency(B, data):
    x = data.draw(st.lists(small_rationals, min_size=B.n_vars, max_size=B.n_vars))
    assert eval_matrix(sigma_mul_matrix(B), x) == eval_matrix(B, x) * sum(x)


@given(matrix_forms(), small_rationals, st.data())
def test_eval_matrix_homogeneity(B, t, data):
    x = data.draw(st.lists(small_rationals, min_size=B.n_vars, max_size=B.n_vars))
    assert eval_matrix(B, [t * c for c in x]) == eval_matrix(B, x) * t**B.degree


@given(matrix_forms())
def test_coefficient_count_bound(B):
    assert len(B.coeffs) <= monomial_count(B.n_vars, B.degree)
    assert len(sigma_mul_matrix(B).coeffs) <= monomial_count(B.n_vars, B.degree + 1)


def test_weighted_normal_form_examples():
    square = ScalarForm(2, 2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    nf = weighted_normal_form(MatrixForm.scalar_times_identity(square, 2))
    assert nf.coeffs == {(2, 0): I2, (1, 1): I2, (0, 2): I2}

    P = SymMatrix([[3, 1], [1, 0]])
    nf = weighted_normal_form(MatrixForm(3, 2, 0, {(0, 0, 0): P}))
    assert nf.coeffs == {(0, 0, 0): P}

    nf = weighted_normal_form(MatrixForm.zero(2, 2, 3))
    assert all(A.is_zero() for _, A in nf.all_coefficients())
    assert len(list(nf.all_coefficients())) == 4


@given(matrix_forms())
def test_weighted_normal_form_roundtrip(B):
    nf = weighted_normal_form(B)
    assert nf.reconstruct() == B
    for alpha, A in nf.all_coefficients():
        assert A * multinomial(B.degree, alpha) == coefficient(B, alpha)


def nf_of(*mats, n=2, d=1):
    from polya_cert.poly import multi_indices

    keys = list(multi_indices(n, d))
    return WeightedNormalForm(n, mats[0].size, d, dict(zip(keys, mats)))


def test_order_unit_shift_examples():
    assert order_unit_shift(nf_of(SymMatrix([[-5, 0], [0, 2]]))) == 5
    assert order_unit_shift(nf_of(SymMatrix([[1, 1], [1, 1]]), I2)) == 0
    # lambda_max(-A') = 1 from t^2 - 1
    assert order_unit_shift(nf_of(SymMatrix([[0, 1], [1, 0]]))) == 1


def test_order_unit_shift_non_integer_eigenvalue():
    # eigenvalues of -A' are (5 +- sqrt 5)/2, so lambda_max = 3.618...
    A = SymMatrix([[-2, 1], [1, -3]])
    assert order_unit_shift(nf_of(A)) == math.ceil((5 + math.sqrt(5)) / 2) == 4


@settings(max_examples=50)
@given(matrix_forms())
def test_order_unit_shift_minimal(B):
    nf = weighted_normal_form(B)
    N = order_unit_shift(nf)
    I = SymMatrix.identity(B.size)
    assert all(is_psd_exact(I * N + A) for _, A in nf.all_coefficients())
    if N >= 1:
        assert not all(is_psd_exact(I * (N - 1) + A) for _, A in nf.all_coefficients())
