"""Search for, verify and refute Pólya certificates of matrix forms.

Multiplying B entrywise by (x1 + ... + xn)^m and asking every coefficient
matrix to be positive definite gives a certificate that B(x) is positive
definite on the whole simplex.  Conversely, any simplex point where B(x) is
not positive definite rules out every such certificate.  The search below
runs both sides: it looks for the least m, and scans a barycentric grid for
a refuting point.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Literal, Mapping, Optional, Sequence, TypeVar

from .errors import CertificateError, DimensionError, MarginError, SimplexError
from .matrix_form import (
    MatrixForm,
    all_coefficients,
    eval_matrix,
    sigma_mul_matrix,
    sigma_power_mul,
    validate,
)
from .poly import MultiIndex, as_fraction, monomial_count, monomial_values, multi_indices
from .psd import PDWitness, is_pd_exact, min_eig_float, rayleigh, refuting_direction

log = logging.getLogger(__name__)

DEFAULT_M_MAX = 50
DEFAULT_GRID_DEPTH = 16
# on exhaustion the grid is refined by doubling up to this multiple of the start depth
GRID_DOUBLINGS = 2

T = TypeVar("T")
R = TypeVar("R")


def _ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int | None) -> Iterable[R]:
    """map() that optionally fans out over a thread pool; output order is input order."""
    if not threads or threads <= 1:
        return map(fn, items)
    items = list(items)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class PolyaCertificate:
    """Witness that (x1+...+xn)^m * B has positive definite coefficients.

    ``witnesses`` holds the leading minors of every coefficient of the
    product, one entry per multi-index of length ``degree``.
    """

    m: int
    n_vars: int
    size: int
    degree: int
    witnesses: Mapping[MultiIndex, PDWitness]


@dataclass(frozen=True)
class Counterexample:
    point: tuple[Fraction, ...]
    direction: tuple[Fraction, ...]
    value: Fraction

    def __post_init__(self):
        if any(c < 0 for c in self.point) or sum(self.point) != 1:
            raise SimplexError(f"point {self.point} is not on the simplex")
        if not any(self.direction):
            raise DimensionError("direction must be nonzero")
        if self.value > 0:
            raise CertificateError("counterexample value must be nonpositive")


@dataclass(frozen=True)
class StrictnessCheck:
    strict: bool
    certificate: Optional[PolyaCertificate] = None
    failing_index: Optional[MultiIndex] = None


@dataclass(frozen=True)
class SearchReport:
    outcome: Literal["certified", "refuted", "inconclusive"]
    m_max: int
    grid_depth: int
    m_tried: int
    certificate: Optional[PolyaCertificate] = None
    counterexample: Optional[Counterexample] = None
    # (m, first failing multi-index) for every m that did not certify
    failures: tuple[tuple[int, MultiIndex], ...] = field(default=())


def has_strict_pd_coefficients(B: MatrixForm, m: int = 0, threads: int | None = None) -> StrictnessCheck:
    """Check that every coefficient of B (absent ones count as zero) is PD.

    ``m`` is only recorded in the returned certificate; pass the exponent
    that produced B from the original form.
    """
    validate(B)
    coeffs = list(all_coefficients(B))
    witnesses = {}
    if threads and threads > 1:
        results = _ordered_map(lambda item: is_pd_exact(item[1]), coeffs, threads)
        for (alpha, _), w in zip(coeffs, results):
            if not w.is_pd:
                return StrictnessCheck(False, failing_index=alpha)
            witnesses[alpha] = w
    else:
        for alpha, P in coeffs:
            w = is_pd_exact(P)
            if not w.is_pd:
                return StrictnessCheck(False, failing_index=alpha)
            witnesses[alpha] = w
    cert = PolyaCertificate(m, B.n_vars, B.size, B.degree, witnesses)
    return StrictnessCheck(True, certificate=cert)


def simplex_grid(n: int, depth: int) -> Iterable[tuple[Fraction, ...]]:
    """Barycentric grid {beta/depth : |beta| = depth}, vertex (1,0,..,0) first."""
    if depth < 1:
        raise ValueError("grid depth must be positive")
    for beta in multi_indices(n, depth):
        yield tuple(Fraction(b, depth) for b in beta)


def _refute_at(B: MatrixForm, x) -> Optional[Counterexample]:
    A = eval_matrix(B, x)
    w = is_pd_exact(A)
    if w.is_pd:
        return None
    v = refuting_direction(A, w)
    return Counterexample(tuple(x), tuple(v), rayleigh(A, v))


def counterexample_search(B: MatrixForm, depth: int, threads: int | None = None) -> Optional[Counterexample]:
    """First grid point (in grid order) where B(x) is not positive definite."""
    validate(B)
    points = simplex_grid(B.n_vars, depth)
    if threads and threads > 1:
        for ce in _ordered_map(lambda x: _refute_at(B, x), points, threads):
            if ce is not None:
                return ce
        return None
    for x in points:
        ce = _refute_at(B, x)
        if ce is not None:
            return ce
    return None


def polya_exponent_search(
    B: MatrixForm,
    m_max: int = DEFAULT_M_MAX,
    grid_depth: int = DEFAULT_GRID_DEPTH,
    max_grid_depth: int | None = None,
    threads: int | None = None,
) -> SearchReport:
    """Find the least m <= m_max such that Sigma^m * B has PD coefficients.

    A grid refutation is attempted first and again (on successively finer
    grids up to ``max_grid_depth``) if no m up to ``m_max`` certifies.
    """
    validate(B)
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    if grid_depth < 1:
        raise ValueError("grid depth must be positive")
    if max_grid_depth is None:
        max_grid_depth = grid_depth * 2**GRID_DOUBLINGS

    ce = counterexample_search(B, grid_depth, threads)
    if ce is not None:
        return SearchReport("refuted", m_max, grid_depth, 0, counterexample=ce)

    failures = []
    current = B
    for m in range(m_max + 1):
        check = has_strict_pd_coefficients(current, m, threads)
        if check.strict:
            log.debug("certified at m=%d (%d coefficients)", m, len(check.certificate.witnesses))
            return SearchReport(
                "certified", m_max, grid_depth, m + 1, certificate=check.certificate,
                failures=tuple(failures),
            )
        failures.append((m, check.failing_index))
        log.debug("m=%d fails at %s", m, check.failing_index)
        if m < m_max:
            current = sigma_mul_matrix(current)

    depth = grid_depth
    while depth * 2 <= max_grid_depth:
        depth *= 2
        ce = counterexample_search(B, depth, threads)
        if ce is not None:
            return SearchReport(
                "refuted", m_max, depth, m_max + 1, counterexample=ce, failures=tuple(failures)
            )
    return SearchReport("inconclusive", m_max, depth, m_max + 1, failures=tuple(failures))


def verify_certificate(B: MatrixForm, cert: PolyaCertificate) -> bool:
    """Independently recompute Sigma^m * B and compare every stored minor."""
    validate(B)
    if (cert.n_vars, cert.size) != (B.n_vars, B.size):
        raise CertificateError(
            f"certificate is for n_vars={cert.n_vars}, size={cert.size}; "
            f"form has n_vars={B.n_vars}, size={B.size}"
        )
    if cert.degree != B.degree + cert.m:
        raise CertificateError(f"degree mismatch: {cert.degree} != {B.degree} + {cert.m}")
    expected = monomial_count(B.n_vars, cert.degree)
    if len(cert.witnesses) != expected:
        raise CertificateError(
            f"witness-count mismatch: {len(cert.witnesses)} witnesses, expected {expected}"
        )
    product = sigma_power_mul(B, cert.m)
    for alpha, P in all_coefficients(product):
        stored = cert.witnesses.get(alpha)
        if stored is None:
            raise CertificateError(f"witness-count mismatch: no witness for {alpha}")
        w = is_pd_exact(P)
        if not w.is_pd or w.minors != tuple(stored.minors):
            return False
    return True


def _round_down(value: float) -> Fraction:
    # snap to a 1e-9 grid; the tiny slack absorbs eigensolver noise
    return Fraction(math.floor(value * 10**9 + 1e-6), 10**9)


def margin_estimate(B: MatrixForm, depth: int) -> Fraction:
    """Smallest grid value of lambda_min(B(x)), as a rational.

    A diagnostic proxy for the positive-definiteness margin on the simplex;
    it is a grid minimum, not a certified lower bound.
    """
    validate(B)
    best = math.inf
    for x in simplex_grid(B.n_vars, depth):
        A = eval_matrix(B, x)
        if not is_pd_exact(A).is_pd:
            raise MarginError(f"B({', '.join(map(str, x))}) is not positive definite")
        best = min(best, min_eig_float(A))
    return _round_down(best)


def _on_simplex(x: Sequence) -> tuple[Fraction, ...]:
    x = tuple(as_fraction(c) for c in x)
    if any(c < 0 for c in x) or sum(x) != 1:
        raise SimplexError(f"point {tuple(map(str, x))} is not on the simplex")
    return x


def pure_state_evaluate(B: MatrixForm, x: Sequence, v: Sequence) -> Fraction:
    """sum_alpha (v^T P_alpha v) x^alpha / (v^T v) for x on the simplex."""
    if len(x) != B.n_vars:
        raise DimensionError(f"point has {len(x)} coordinates, form has {B.n_vars} variables")
    if len(v) != B.size:
        raise DimensionError(f"vector has {len(v)} entries, matrix has size {B.size}")
    x = _on_simplex(x)
    v = [as_fraction(c) for c in v]
    norm = sum((c * c for c in v), Fraction(0))
    if not norm:
        raise DimensionError("direction must be nonzero")
    mono = monomial_values(x, B.coeffs)
    total = Fraction(0)
    for alpha, P in B.coeffs.items():
        if mono[alpha]:
            total += rayleigh(P, v) * mono[alpha]
    return total / norm


def scan_directions(r: int) -> list[tuple[int, ...]]:
    """Standard basis vectors followed by e_i + e_j and e_i - e_j (i < j)."""
    out = [tuple(int(k == i) for k in range(r)) for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            for s in (1, -1):
                out.append(tuple(1 if k == i else s if k == j else 0 for k in range(r)))
    return out


@dataclass(frozen=True)
class PureStateScan:
    states: int
    min_value: Fraction
    point: tuple[Fraction, ...]
    direction: tuple[int, ...]


def pure_state_scan(B: MatrixForm, depth: int) -> PureStateScan:
    """Minimise the pure-state functional over grid points x fixed directions."""
    validate(B)
    dirs = scan_directions(B.size)
    best = None
    count = 0
    for x in simplex_grid(B.n_vars, depth):
        for v in dirs:
            count += 1
            val = pure_state_evaluate(B, x, v)
            if best is None or val < best[0]:
                best = (val, x, v)
    return PureStateScan(count, *best)
