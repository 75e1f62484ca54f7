import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from polya_cert import MatrixForm, SymMatrix
from polya_cert.poly import ScalarForm, multi_indices

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

# acceptance criteria append (label, passed, seconds) here; printed at the end
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, seconds in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  ({seconds:.2f}s)")


@pytest.fixture
def data_dir():
    return DATA


def quad():
    """x^2 - xy + y^2"""
    return ScalarForm(2, 2, {(2, 0): 1, (1, 1): -1, (0, 2): 1})


def linear(n, *coeffs):
    return ScalarForm(n, 1, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})


def rand_fraction(rng, lo, hi, den=6):
    q = rng.randint(1, den)
    return Fraction(rng.randint(lo * q, hi * q), q)


def rand_sym(rng, r, lo=-3, hi=3, den=6):
    rows = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            rows[i][j] = rows[j][i] = rand_fraction(rng, lo, hi, den)
    return SymMatrix(rows)


def rand_pd(rng, r, den=4):
    """Diagonally dominant with positive diagonal, hence PD."""
    rows = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            rows[i][j] = rows[j][i] = rand_fraction(rng, -3, 3, den) / 2
    for i in range(r):
        rows[i][i] = sum(abs(v) for j, v in enumerate(rows[i]) if j != i) + rand_fraction(rng, 0, 2, den) + Fraction(1, den)
    return SymMatrix(rows)


def rand_matrix_form(rng, n, r, d, density=0.7, lo=-3, hi=3):
    coeffs = {}
    for alpha in multi_indices(n, d):
        if rng.random() < density:
            coeffs[alpha] = rand_sym(rng, r, lo, hi)
    return MatrixForm(n, r, d, coeffs)


def rand_vertex_pd_form(rng, n, r, d, lo=-3, hi=3):
    """Random form whose pure-power coefficients are PD (entries stay in [lo, hi]).

    Such forms are PD at every vertex, so they often certify, but only after
    some Σ-multiplications when the mixed coefficients are indefinite.
    """
    coeffs = {}
    for alpha in multi_indices(n, d):
        if max(alpha) == d:
            rows = [[Fraction(0)] * r for _ in range(r)]
            for i in range(r):
                for j in range(i + 1, r):
                    rows[i][j] = rows[j][i] = rand_fraction(rng, -1, 1, 4) / 2
                rows[i][i] = Fraction(3, 2) + rand_fraction(rng, 0, 1, 4) * Fraction(3, 2)
            coeffs[alpha] = SymMatrix(rows)
        else:
            coeffs[alpha] = rand_sym(rng, r, lo, hi)
    return MatrixForm(n, r, d, coeffs)


def rand_simplex_point(rng, n, scale=1000):
    while True:
        k = [rng.randint(0, scale) for _ in range(n)]
        if sum(k):
            s = sum(k)
            return tuple(Fraction(a, s) for a in k)


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def scalar_forms(draw, n=None, d=None):
    n = n or draw(st.integers(1, 3))
    d = d if d is not None else draw(st.integers(0, 3))
    keys = list(multi_indices(n, d))
    coeffs = {a: draw(small_rationals) for a in keys if draw(st.booleans())}
    return ScalarForm(n, d, coeffs)


@st.composite
def sym_matrices(draw, r=None, lo=-10, hi=10):
    r = r or draw(st.integers(1, 4))
    vals = st.fractions(min_value=lo, max_value=hi, max_denominator=5)
    rows = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            rows[i][j] = rows[j][i] = draw(vals)
    return SymMatrix(rows)


@st.composite
def matrix_forms(draw, n=None, r=None, d=None):
    n = n or draw(st.integers(1, 3))
    r = r or draw(st.integers(1, 3))
    d = d if d is not None else draw(st.integers(0, 3))
    coeffs = {}
    for alpha in multi_indices(n, d):
        if draw(st.booleans()):
            coeffs[alpha] = draw(sym_matrices(r=r, lo=-3, hi=3))
    return MatrixForm(n, r, d, coeffs)


@st.composite
def simplex_points(draw, n):
    k = draw(st.lists(st.integers(0, 20), min_size=n, max_size=n).filter(any))
    s = sum(k)
    return tuple(Fraction(a, s) for a in k)


@pytest.fixture
def rng():
    return random.Random(20261019)
