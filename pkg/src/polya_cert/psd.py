"""Exact definiteness tests for rational symmetric matrices.

Positive definiteness is decided by Sylvester's criterion, with the leading
principal minors produced by Bareiss elimination; the minors double as a
checkable witness.  Semidefiniteness uses symmetric elimination with
diagonal pivoting.  Floating eigenvalues are only ever a search heuristic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionError
from .poly import as_fraction
from .symmatrix import SymMatrix

# Floating eigenvalues within this distance of zero are not trusted.
FLOAT_BAND = 1e-6


@dataclass(frozen=True)
class PDWitness:
    """Leading principal minors of an r x r matrix.

    For a matrix that is not positive definite the sequence stops at the
    first nonpositive minor.
    """

    size: int
    minors: tuple[Fraction, ...]

    @property
    def is_pd(self) -> bool:
        return len(self.minors) == self.size and all(m > 0 for m in self.minors)

    @property
    def failed_order(self) -> int | None:
        """Order (1-based) of the first nonpositive leading minor."""
        for k, m in enumerate(self.minors, 1):
            if m <= 0:
                return k
        return None


def _require_sym(A) -> SymMatrix:
    return A if isinstance(A, SymMatrix) else SymMatrix(A)


def is_pd_exact(A: SymMatrix) -> PDWitness:
    A = _require_sym(A)
    r = A.size
    M = A.to_lists()
    prev = Fraction(1)
    minors = []
    for k in range(r):
        pivot = M[k][k]
        minors.append(pivot)
        if pivot <= 0:
            break
        for i in range(k + 1, r):
            Mi, mik = M[i], M[i][k]
            Mk = M[k]
            for j in range(k + 1, r):
                Mi[j] = (pivot * Mi[j] - mik * Mk[j]) / prev
        prev = pivot
    return PDWitness(r, tuple(minors))


def is_psd_exact(A: SymMatrix) -> bool:
    A = _require_sym(A)
    M = A.to_lists()
    remaining = list(range(A.size))
    prev = Fraction(1)
    while remaining:
        if any(M[i][i] < 0 for i in remaining):
            return False
        pivots = [i for i in remaining if M[i][i] > 0]
        if not pivots:
            # all-zero diagonal: PSD only if the whole block vanishes
            return all(M[i][j] == 0 for i in remaining for j in remaining)
        p = pivots[0]
        remaining.remove(p)
        pivot = M[p][p]
        for i in remaining:
            for j in remaining:
                M[i][j] = (pivot * M[i][j] - M[i][p] * M[p][j]) / prev
        prev = pivot
    return True


def min_eig_float(A: SymMatrix) -> float:
    A = _require_sym(A)
    return float(np.linalg.eigvalsh(A.to_numpy())[0])


def rayleigh(A: SymMatrix, v: Sequence) -> Fraction:
    """v^T A v, exactly."""
    A = _require_sym(A)
    if len(v) != A.size:
        raise DimensionError(f"vector has {len(v)} entries, matrix has size {A.size}")
    v = [as_fraction(c) for c in v]
    total = Fraction(0)
    for i, row in enumerate(A.rows):
        if v[i]:
            total += v[i] * sum((a * b for a, b in zip(row, v)), Fraction(0))
    return total


def _solve(M: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    # M is positive definite here, so elimination without pivoting is safe.
    n = len(b)
    M = [row[:] + [bi] for row, bi in zip(M, b)]
    for k in range(n):
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                for j in range(k, n + 1):
                    M[i][j] -= f * M[k][j]
    y = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        y[k] = (M[k][n] - sum((M[k][j] * y[j] for j in range(k + 1, n)), Fraction(0))) / M[k][k]
    return y


def _primitive(v: list[Fraction]) -> list[Fraction]:
    den = math.lcm(*(c.denominator for c in v))
    ints = [int(c * den) for c in v]
    g = math.gcd(*ints)
    return [Fraction(c // g) for c in ints]


def refuting_direction(A: SymMatrix, witness: PDWitness | None = None) -> list[Fraction] | None:
    """A nonzero integer vector v with v^T A v <= 0, or None if A is PD.

    If the k-th leading minor is the first nonpositive one, v solves the
    leading (k-1) block against column k, so v^T A v equals the ratio of
    the k-th to the (k-1)-th minor.
    """
    A = _require_sym(A)
    witness = witness or is_pd_exact(A)
    k = witness.failed_order
    if k is None:
        return None
    r = A.size
    if k == 1:
        v = [Fraction(0)] * r
        v[0] = Fraction(1)
        return v
    block = [list(A.rows[i][: k - 1]) for i in range(k - 1)]
    col = [A.rows[i][k - 1] for i in range(k - 1)]
    y = _solve(block, col)
    v = [-c for c in y] + [Fraction(1)] + [Fraction(0)] * (r - k)
    return _primitive(v)
