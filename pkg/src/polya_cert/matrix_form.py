"""Symmetric matrices whose entries are forms of one fixed degree.

A matrix form is stored in the monomial basis, ``B = sum_alpha P_alpha x^alpha``,
as a sparse map from multi-index to symmetric coefficient matrix.  Absent
keys are zero matrices; anything that quantifies over "all coefficients"
must walk the full index set from :func:`polya_cert.poly.multi_indices`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import AsymmetricMatrixError, DegreeError, DimensionError
from .poly import (
    MultiIndex,
    ScalarForm,
    as_fraction,
    glex_key,
    monomial_values,
    multi_indices,
    multinomial,
)
from .psd import is_psd_exact, min_eig_float
from .symmatrix import SymMatrix


@dataclass(frozen=True, eq=False)
class MatrixForm:
    n_vars: int
    size: int
    degree: int
    coeffs: Mapping[MultiIndex, SymMatrix]

    def __post_init__(self):
        clean = {}
        for alpha, P in self.coeffs.items():
            if not isinstance(P, SymMatrix):
                P = SymMatrix(P)
            clean[tuple(int(a) for a in alpha)] = P
        clean = {a: clean[a] for a in sorted(clean, key=glex_key) if not clean[a].is_zero()}
        object.__setattr__(self, "coeffs", clean)
        validate(self)

    @classmethod
    def zero(cls, n_vars: int, size: int, degree: int) -> MatrixForm:
        return cls(n_vars, size, degree, {})

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[ScalarForm]]) -> MatrixForm:
        """Assemble from an r x r grid of forms sharing n_vars and degree."""
        r = len(entries)
        if r == 0:
            raise DimensionError("matrix size must be positive")
        first = entries[0][0]
        n, d = first.n_vars, first.degree
        keys = set()
        for i, row in enumerate(entries):
            if len(row) != r:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {r}")
            for f in row:
                if (f.n_vars, f.degree) != (n, d):
                    raise DegreeError("entries must share n_vars and degree")
                keys.update(f.coeffs)
        coeffs = {a: [[entries[i][j][a] for j in range(r)] for i in range(r)] for a in keys}
        return cls(n, r, d, coeffs)

    @classmethod
    def scalar_times_identity(cls, f: ScalarForm, size: int) -> MatrixForm:
        I = SymMatrix.identity(size)
        return cls(f.n_vars, size, f.degree, {a: I * c for a, c in f.coeffs.items()})

    def entry(self, i: int, j: int) -> ScalarForm:
        return ScalarForm(self.n_vars, self.degree, {a: P[i, j] for a, P in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, MatrixForm):
            return NotImplemented
        return (self.n_vars, self.size, self.degree, self.coeffs) == (
            other.n_vars,
            other.size,
            other.degree,
            other.coeffs,
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"MatrixForm(n_vars={self.n_vars}, size={self.size}, degree={self.degree}, "
            f"terms={len(self.coeffs)})"
        )


def validate(B: MatrixForm) -> None:
    """Raise if B breaks any structural invariant; return None otherwise."""
    if B.size < 1:
        raise DimensionError("matrix size must be positive")
    if B.n_vars < 1:
        raise DimensionError("a matrix form needs at least one variable")
    if B.degree < 0:
        raise DegreeError("degree must be nonnegative")
    for alpha, P in B.coeffs.items():
        if len(alpha) != B.n_vars:
            raise DimensionError(f"multi-index {alpha} has {len(alpha)} entries, expected {B.n_vars}")
        if any(a < 0 for a in alpha):
            raise DegreeError(f"negative exponent in {alpha}")
        if sum(alpha) != B.degree:
            raise DegreeError(
                f"mixed degree: monomial {alpha} has degree {sum(alpha)}, expected {B.degree}"
            )
        if not isinstance(P, SymMatrix):
            raise TypeError(f"coefficient at {alpha} is not a SymMatrix")
        if P.size != B.size:
            raise DimensionError(f"coefficient at {alpha} has size {P.size}, expected {B.size}")
        # SymMatrix enforces symmetry at construction; re-check for trusted builds
        for i in range(P.size):
            for j in range(i + 1, P.size):
                if P[i, j] != P[j, i]:
                    raise AsymmetricMatrixError(i, j, f"coefficient at {alpha} is not symmetric at ({i}, {j})")


def coefficient(B: MatrixForm, alpha: Sequence[int]) -> SymMatrix:
    alpha = tuple(alpha)
    if len(alpha) != B.n_vars:
        raise DimensionError(f"multi-index {alpha} has {len(alpha)} entries, expected {B.n_vars}")
    if sum(alpha) != B.degree:
        raise DegreeError(f"multi-index {alpha} has length {sum(alpha)}, expected {B.degree}")
    return B.coeffs.get(alpha) or SymMatrix.zero(B.size)


def all_coefficients(B: MatrixForm) -> Iterator[tuple[MultiIndex, SymMatrix]]:
    """Every (alpha, P_alpha) with |alpha| = degree, zero matrices included."""
    zero = SymMatrix.zero(B.size)
    for alpha in multi_indices(B.n_vars, B.degree):
        yield alpha, B.coeffs.get(alpha, zero)


def sigma_mul_matrix(B: MatrixForm) -> MatrixForm:
    """Entrywise product with x1 + ... + xn."""
    n, r = B.n_vars, B.size
    acc: dict[MultiIndex, list[list[Fraction]]] = {}
    for alpha, P in B.coeffs.items():
        for i in range(n):
            beta = alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]
            target = acc.get(beta)
            if target is None:
                acc[beta] = [list(row) for row in P.rows]
            else:
                for trow, prow in zip(target, P.rows):
                    for j in range(r):
                        trow[j] += prow[j]
    return MatrixForm(n, r, B.degree + 1, {b: SymMatrix._trusted(rows) for b, rows in acc.items()})


def sigma_power_mul(B: MatrixForm, m: int) -> MatrixForm:
    for _ in range(m):
        B = sigma_mul_matrix(B)
    return B


def eval_matrix(B: MatrixForm, x: Sequence) -> SymMatrix:
    if len(x) != B.n_vars:
        raise DimensionError(f"point has {len(x)} coordinates, form has {B.n_vars} variables")
    x = [as_fraction(v) for v in x]
    r = B.size
    mono = monomial_values(x, B.coeffs)
    out = [[Fraction(0)] * r for _ in range(r)]
    for alpha, P in B.coeffs.items():
        w = mono[alpha]
        if not w:
            continue
        for orow, prow in zip(out, P.rows):
            for j in range(r):
                orow[j] += w * prow[j]
    return SymMatrix._trusted(out)


@dataclass(frozen=True)
class WeightedNormalForm:
    """Coefficients A'_alpha of ``B = sum_alpha A'_alpha * multinomial(d, alpha) * x^alpha``."""

    n_vars: int
    size: int
    degree: int
    coeffs: Mapping[MultiIndex, SymMatrix]

    def coefficient(self, alpha: Sequence[int]) -> SymMatrix:
        return self.coeffs.get(tuple(alpha)) or SymMatrix.zero(self.size)

    def all_coefficients(self) -> Iterator[tuple[MultiIndex, SymMatrix]]:
        zero = SymMatrix.zero(self.size)
        for alpha in multi_indices(self.n_vars, self.degree):
            yield alpha, self.coeffs.get(alpha, zero)

    def reconstruct(self) -> MatrixForm:
        return MatrixForm(
            self.n_vars,
            self.size,
            self.degree,
            {a: A * multinomial(self.degree, a) for a, A in self.coeffs.items()},
        )


def weighted_normal_form(B: MatrixForm) -> WeightedNormalForm:
    validate(B)
    d = B.degree
    return WeightedNormalForm(
        B.n_vars, B.size, d, {a: P / multinomial(d, a) for a, P in B.coeffs.items()}
    )


def order_unit_shift(nf: WeightedNormalForm) -> int:
    """Least integer N >= 0 with N*I + A'_alpha PSD for every alpha.

    A floating eigenvalue bound seeds the search; the answer is settled by
    exact PSD tests, using that N*I + A is PSD for all N past a threshold.
    """
    coeffs = [A for _, A in nf.all_coefficients()]
    I = SymMatrix.identity(nf.size)

    def ok(N):
        shift = I * N
        return all(is_psd_exact(shift + A) for A in coeffs)

    N = max(0, math.ceil(max(-min_eig_float(A) for A in coeffs)))
    while not ok(N):
        N += 1
    while N > 0 and ok(N - 1):
        N -= 1
    return N
