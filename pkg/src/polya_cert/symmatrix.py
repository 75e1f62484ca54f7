"""Immutable symmetric matrices with exact rational entries."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import AsymmetricMatrixError, DimensionError
from .poly import as_fraction


class SymMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(as_fraction(v) for v in row) for row in rows)
        r = len(rows)
        if r == 0:
            raise DimensionError("matrix size must be positive")
        for i, row in enumerate(rows):
            if len(row) != r:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {r}")
        for i in range(r):
            for j in range(i + 1, r):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetricMatrixError(i, j)
        self.rows = rows

    @classmethod
    def _trusted(cls, rows) -> SymMatrix:
        obj = object.__new__(cls)
        obj.rows = tuple(tuple(row) for row in rows)
        return obj

    @classmethod
    def zero(cls, r: int) -> SymMatrix:
        z = Fraction(0)
        return cls._trusted([[z] * r for _ in range(r)])

    @classmethod
    def identity(cls, r: int) -> SymMatrix:
        return cls._trusted([[Fraction(int(i == j)) for j in range(r)] for i in range(r)])

    @classmethod
    def outer(cls, v: Sequence) -> SymMatrix:
        """The rank-one matrix v v^T."""
        v = [as_fraction(c) for c in v]
        return cls._trusted([[a * b for b in v] for a in v])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def _check(self, other):
        if other.size != self.size:
            raise DimensionError(f"size mismatch: {self.size} vs {other.size}")

    def __add__(self, other: SymMatrix) -> SymMatrix:
        self._check(other)
        return SymMatrix._trusted(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> SymMatrix:
        return SymMatrix._trusted([[-a for a in row] for row in self.rows])

    def __sub__(self, other: SymMatrix) -> SymMatrix:
        return self + (-other)

    def __mul__(self, c) -> SymMatrix:
        c = as_fraction(c)
        return SymMatrix._trusted([[c * a for a in row] for row in self.rows])

    __rmul__ = __mul__

    def __truediv__(self, c) -> SymMatrix:
        return self * (1 / as_fraction(c))

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(a) for a in row] for row in self.rows], dtype=float)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.rows]

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows)
        return f"SymMatrix([{body}])"
