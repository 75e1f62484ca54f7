"""Exact homogeneous polynomials (forms) over the rationals.

Multi-indices are plain tuples of nonnegative ints.  Forms store only their
nonzero coefficients, keyed by multi-index and kept in graded-lex order
(for a fixed degree: ``x1**d`` first, ``xn**d`` last).
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import DegreeError, DimensionError

MultiIndex = tuple[int, ...]

__all__ = [
    "MultiIndex",
    "ScalarForm",
    "as_fraction",
    "eval_scalar",
    "glex_key",
    "monomial_count",
    "monomial_values",
    "multi_indices",
    "multinomial",
    "poly_mul",
    "sigma_form",
    "sigma_mul",
]


def as_fraction(value) -> Fraction:
    """Coerce an exact scalar (int, Fraction, ``"p/q"`` string) to Fraction.

    Floats are refused: every coefficient must be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, numbers.Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.replace("−", "-"))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def glex_key(alpha: MultiIndex):
    return (sum(alpha), tuple(-a for a in alpha))


def multi_indices(n: int, d: int) -> Iterator[MultiIndex]:
    """All multi-indices in N^n of length d, in graded-lex order."""
    if n < 1:
        raise DimensionError("need at least one variable")
    if d < 0:
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in multi_indices(n - 1, d - first):
            yield (first,) + rest


def monomial_count(n: int, d: int) -> int:
    """Number of monomials of degree d in n variables, C(n+d-1, d)."""
    return math.comb(n + d - 1, d)


def multinomial(d: int, alpha: Sequence[int]) -> int:
    if any(a < 0 for a in alpha):
        raise DegreeError(f"negative exponent in {tuple(alpha)}")
    if sum(alpha) != d:
        raise DegreeError(f"multi-index {tuple(alpha)} has length {sum(alpha)}, expected {d}")
    out = math.factorial(d)
    for a in alpha:
        out //= math.factorial(a)
    return out


def monomial_values(x: Sequence[Fraction], keys) -> dict[MultiIndex, Fraction]:
    """Map each multi-index in ``keys`` to x**alpha, sharing power tables."""
    powers: list[dict[int, Fraction]] = [{0: Fraction(1)} for _ in x]

    def power(i, e):
        table = powers[i]
        if e not in table:
            table[e] = x[i] ** e
        return table[e]

    out = {}
    for alpha in keys:
        value = Fraction(1)
        for i, e in enumerate(alpha):
            if e:
                value *= power(i, e)
        out[alpha] = value
    return out


def _check_index(alpha, n_vars) -> MultiIndex:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != n_vars:
        raise DimensionError(f"multi-index {alpha} has {len(alpha)} entries, expected {n_vars}")
    if any(a < 0 for a in alpha):
        raise DegreeError(f"negative exponent in {alpha}")
    return alpha


@dataclass(frozen=True, eq=False)
class ScalarForm:
    """A form of fixed degree in ``n_vars`` variables with rational coefficients.

    The zero form is the empty coefficient map; it still carries a degree so
    that it can sit inside a matrix next to nonzero entries.
    """

    n_vars: int
    degree: int
    coeffs: Mapping[MultiIndex, Fraction]

    def __post_init__(self):
        if self.n_vars < 1:
            raise DimensionError("a form needs at least one variable")
        if self.degree < 0:
            raise DegreeError("degree must be nonnegative")
        clean = {}
        for alpha, c in self.coeffs.items():
            alpha = _check_index(alpha, self.n_vars)
            if sum(alpha) != self.degree:
                raise DegreeError(
                    f"monomial {alpha} has degree {sum(alpha)} in a form of degree {self.degree}"
                )
            c = as_fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
        clean = {a: clean[a] for a in sorted(clean, key=glex_key) if clean[a]}
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, n_vars: int, degree: int) -> ScalarForm:
        return cls(n_vars, degree, {})

    @classmethod
    def constant(cls, n_vars: int, value=1) -> ScalarForm:
        return cls(n_vars, 0, {(0,) * n_vars: value})

    def __getitem__(self, alpha) -> Fraction:
        return self.coeffs.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, ScalarForm):
            return NotImplemented
        return (self.n_vars, self.degree, self.coeffs) == (other.n_vars, other.degree, other.coeffs)

    __hash__ = None

    def __add__(self, other: ScalarForm) -> ScalarForm:
        if (self.n_vars, self.degree) != (other.n_vars, other.degree):
            raise DimensionError("can only add forms with equal n_vars and degree")
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            out[alpha] = out.get(alpha, 0) + c
        return ScalarForm(self.n_vars, self.degree, out)

    def __neg__(self) -> ScalarForm:
        return ScalarForm(self.n_vars, self.degree, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other: ScalarForm) -> ScalarForm:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ScalarForm):
            return poly_mul(self, other)
        c = as_fraction(other)
        return ScalarForm(self.n_vars, self.degree, {a: c * v for a, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        return eval_scalar(self, x)

    def __repr__(self):
        if not self.coeffs:
            return f"ScalarForm(0, n_vars={self.n_vars}, degree={self.degree})"
        terms = " + ".join(f"{c}*x^{list(a)}" for a, c in self.coeffs.items())
        return f"ScalarForm({terms})"


def sigma_form(n_vars: int) -> ScalarForm:
    """The linear form x1 + ... + xn."""
    return ScalarForm(n_vars, 1, {tuple(int(i == j) for j in range(n_vars)): 1 for i in range(n_vars)})


def poly_mul(f: ScalarForm, g: ScalarForm) -> ScalarForm:
    if f.n_vars != g.n_vars:
        raise DimensionError(f"variable-count mismatch: {f.n_vars} vs {g.n_vars}")
    out: dict[MultiIndex, Fraction] = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            gamma = tuple(i + j for i, j in zip(a, b))
            out[gamma] = out.get(gamma, 0) + ca * cb
    return ScalarForm(f.n_vars, f.degree + g.degree, out)


def sigma_mul(f: ScalarForm) -> ScalarForm:
    """Multiply f by x1 + ... + xn."""
    n = f.n_vars
    out: dict[MultiIndex, Fraction] = {}
    for alpha, c in f.coeffs.items():
        for i in range(n):
            beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
            out[beta] = out.get(beta, 0) + c
    return ScalarForm(n, f.degree + 1, out)


def eval_scalar(f: ScalarForm, x: Sequence) -> Fraction:
    if len(x) != f.n_vars:
        raise DimensionError(f"point has {len(x)} coordinates, form has {f.n_vars} variables")
    x = [as_fraction(v) for v in x]
    mono = monomial_values(x, f.coeffs)
    return sum((c * mono[a] for a, c in f.coeffs.items()), Fraction(0))
