"""Exact verification of divisibility congruences for Schmidt polynomial sums.

The library constructs the multi-variable Schmidt polynomials

    S_n[r](x_0, ..., x_n) = sum_{k=0}^{n} C(n+k, 2k)^r C(2k, k) x_k,

expands powers and products of their coefficient functions over the basis
B_t(k) = C(k+t, 2t) C(2t, t) with integer coefficients, and verifies
bit-exactly that weighted sums

    sum_{k=0}^{n-1} eps^k w(k) (2k+1) S_k[r](x_0, ..., x_k)^m

have every coefficient divisible by n, cross-checking the constructive
(basis expansion + closed-form partial sums) route against direct
polynomial expansion.  All arithmetic is exact; there is no floating point
anywhere in the verification path.
"""

from .binomials import binom, central_binom, rising_factorial, saalschutz_coeff
from .congruence import (
    CongruenceReport,
    Witness,
    inner_sum_constructive,
    inner_sum_direct,
    pan_check,
    partial_sum_minus,
    partial_sum_plus,
    theorem_check,
)
from .errors import IntegralityError, InternalInvariantError
from .linearize import (
    BTable,
    IdentityCertificate,
    b_table,
    basis_eval,
    combo_eval,
    combo_mul,
    pfaff_check,
    power_linearize,
    product_linearize,
    tuple_linearize,
)
from .mpoly import MultiPoly, UniPoly
from .schmidt import (
    SchmidtParams,
    apery_specialization_rule,
    schmidt_multi,
    schmidt_single,
    weighted_sum,
    weighted_sum_single,
)
from .weights import (
    CTable,
    c_table,
    generalized_check,
    square_weight_coeffs,
    verify_c_identity,
)

__version__ = "0.1.0"

__all__ = [
    "BTable",
    "CTable",
    "CongruenceReport",
    "IdentityCertificate",
    "IntegralityError",
    "InternalInvariantError",
    "MultiPoly",
    "SchmidtParams",
    "UniPoly",
    "Witness",
    "apery_specialization_rule",
    "b_table",
    "basis_eval",
    "binom",
    "c_table",
    "central_binom",
    "combo_eval",
    "combo_mul",
    "generalized_check",
    "inner_sum_constructive",
    "inner_sum_direct",
    "pan_check",
    "partial_sum_minus",
    "partial_sum_plus",
    "pfaff_check",
    "power_linearize",
    "product_linearize",
    "rising_factorial",
    "saalschutz_coeff",
    "schmidt_multi",
    "schmidt_single",
    "square_weight_coeffs",
    "theorem_check",
    "tuple_linearize",
    "verify_c_identity",
    "weighted_sum",
    "weighted_sum_single",
    "__version__",
]
