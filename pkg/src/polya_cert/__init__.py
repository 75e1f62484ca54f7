"""Pólya positivity certificates for symmetric matrices of forms."""

from .certify import (
    Counterexample,
    PolyaCertificate,
    SearchReport,
    counterexample_search,
    has_strict_pd_coefficients,
    margin_estimate,
    polya_exponent_search,
    pure_state_evaluate,
    verify_certificate,
)
from .errors import PolyaError
from .matrix_form import (
    MatrixForm,
    WeightedNormalForm,
    coefficient,
    eval_matrix,
    order_unit_shift,
    sigma_mul_matrix,
    validate,
    weighted_normal_form,
)
from .poly import ScalarForm, eval_scalar, multinomial, poly_mul, sigma_form, sigma_mul
from .psd import PDWitness, is_pd_exact, is_psd_exact, min_eig_float, rayleigh
from .symmatrix import SymMatrix

__version__ = "0.1.0"

__all__ = [
    "Counterexample",
    "MatrixForm",
    "PDWitness",
    "PolyaCertificate",
    "PolyaError",
    "ScalarForm",
    "SearchReport",
    "SymMatrix",
    "WeightedNormalForm",
    "coefficient",
    "counterexample_search",
    "eval_matrix",
    "eval_scalar",
    "has_strict_pd_coefficients",
    "is_pd_exact",
    "is_psd_exact",
    "margin_estimate",
    "min_eig_float",
    "multinomial",
    "order_unit_shift",
    "poly_mul",
    "polya_exponent_search",
    "pure_state_evaluate",
    "rayleigh",
    "sigma_form",
    "sigma_mul",
    "sigma_mul_matrix",
    "validate",
    "verify_certificate",
    "weighted_normal_form",
]
