"""Divisibility verifiers for weighted sums of Schmidt polynomial powers.

Two independent routes are kept deliberately separate:

* the *direct* route expands the weighted sum as an explicit polynomial and
  scans every coefficient for divisibility by n;
* the *constructive* route mirrors the structural argument: expand each
  product over the B_t basis (see linearize), then collapse the k-sum with
  the closed-form partial sums

      sum_{l=k}^{n-1} (2l+1) B_k(l)        = n C(n, k+1) C(n+k, k)
      sum_{l=k}^{n-1} (-1)^l (2l+1) B_k(l) = (-1)^(n-1) n C(n-1, k) C(n+k, k)

  both of which carry an explicit factor n, so divisibility is structural
  and never needs a division by n.

A failed divisibility scan is a counterexample report; a disagreement
between the two routes is a bug and raises InternalInvariantError.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .binomials import binom, central_binom
from .errors import InternalInvariantError
from .linearize import tuple_linearize
from .mpoly import MultiPoly, UniPoly, mono_text
from .schmidt import (
    SchmidtParams,
    apery_specialization_rule,
    weighted_sum,
    weighted_sum_single,
)


@dataclass(frozen=True)
class Witness:
    """One offending term of a failed divisibility scan."""

    monomial: str
    coefficient: int
    residue: int


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of one congruence check; verdict fail iff a witness exists."""

    params: SchmidtParams
    check: str
    weight: str
    passed: bool
    witness: Optional[Witness]
    polynomial: str
    coefficients: tuple[int, ...]
    num_terms: int
    elapsed_ms: float
    specialization_equal: Optional[bool] = None

    def __post_init__(self):
        if self.passed == (self.witness is not None):
            raise ValueError("verdict and witness are inconsistent")


def _scan(poly: Union[MultiPoly, UniPoly], n: int) -> tuple[bool, Optional[Witness]]:
    if isinstance(poly, MultiPoly):
        hit = poly.divisibility_witness(n)
        if hit is None:
            return True, None
        mono, coeff = hit
        return False, Witness(mono_text(mono), coeff, coeff % n)
    hit = poly.divisibility_witness(n)
    if hit is None:
        return True, None
    power, coeff = hit
    text = "1" if power == 0 else ("x" if power == 1 else f"x^{power}")
    return False, Witness(text, coeff, coeff % n)


def _coeff_tuple(poly: Union[MultiPoly, UniPoly]) -> tuple[int, ...]:
    if isinstance(poly, MultiPoly):
        return tuple(poly.coefficients())
    return tuple(c for c in poly.coeffs if c != 0)


def run_check(
    p: SchmidtParams,
    weight: str,
    check: str,
    *,
    specialization_equal: Optional[bool] = None,
    poly: Optional[Union[MultiPoly, UniPoly]] = None,
) -> CongruenceReport:
    """Build the weighted sum (unless given) and scan it mod n."""
    start = time.perf_counter()
    if poly is None:
        poly = weighted_sum(p, weight)
    passed, witness = _scan(poly, p.n)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    coefficients = _coeff_tuple(poly)
    return CongruenceReport(
        params=p,
        check=check,
        weight=weight,
        passed=passed,
        witness=witness,
        polynomial=str(poly),
        coefficients=coefficients,
        num_terms=len(coefficients),
        elapsed_ms=elapsed_ms,
        specialization_equal=specialization_equal,
    )


def theorem_check(p: SchmidtParams) -> CongruenceReport:
    """Divisibility by n of sum_{k<n} eps^k (2k+1) S_k[r](x_0..x_k)^m."""
    if p.n < 1:
        raise ValueError(f"theorem_check needs n >= 1, got {p.n}")
    return run_check(p, "plain", "theorem")


def pan_check(n: int, m: int, r: int, epsilon: int = 1) -> CongruenceReport:
    """Single-variable check: sum_{k<n} eps^k (2k+1) S_k[r](x)^m mod n.

    Also asserts, bit-exactly, that this sum equals the specialization
    x_k -> C(2k, k)^(r-1) x^k of the multi-variable sum; a mismatch is an
    implementation bug, not a counterexample.
    """
    p = SchmidtParams(n=n, m=m, r=r, epsilon=epsilon)
    start = time.perf_counter()
    single = weighted_sum_single(p, "plain")
    specialized = weighted_sum(p, "plain").specialize(apery_specialization_rule(r))
    if single != specialized:
        raise InternalInvariantError(
            f"specialization mismatch at {p}: {single} != {specialized}"
        )
    passed, witness = _scan(single, n)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return CongruenceReport(
        params=p,
        check="pan",
        weight="plain",
        passed=passed,
        witness=witness,
        polynomial=str(single),
        coefficients=_coeff_tuple(single),
        num_terms=len(_coeff_tuple(single)),
        elapsed_ms=elapsed_ms,
        specialization_equal=True,
    )


# -- closed-form partial sums ------------------------------------------------


def partial_sum_plus(n: int, k: int) -> int:
    """n C(n, k+1) C(n+k, k) == sum_{l=k}^{n-1} (2l+1) C(l+k, 2k) C(2k, k)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must be in [0, {n - 1}], got {k}")
    return n * binom(n, k + 1) * binom(n + k, k)


def partial_sum_minus(n: int, k: int) -> int:
    """(-1)^(n-1) n C(n-1, k) C(n+k, k), the alternating analogue."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must be in [0, {n - 1}], got {k}")
    sign = 1 if (n - 1) % 2 == 0 else -1
    return sign * n * binom(n - 1, k) * binom(n + k, k)


# -- inner sums of the power-expansion argument -------------------------------


def inner_sum_direct(n: int, indices: Sequence[int], r: int, epsilon: int = 1) -> int:
    """sum_{k=max(indices)}^{n-1} eps^k (2k+1) prod_j C(k+i_j, 2i_j)^r C(2i_j, i_j),
    term by term."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not indices:
        raise ValueError("need at least one index")
    if max(indices) > n - 1:
        raise ValueError(f"indices must be <= n-1 = {n - 1}, got {max(indices)}")
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon}")
    total = 0
    for k in range(max(indices), n):
        term = 2 * k + 1
        for i in indices:
            term *= binom(k + i, 2 * i) ** r * central_binom(i)
        if epsilon == -1 and k % 2 == 1:
            term = -term
        total += term
    return total


def inner_sum_constructive(
    n: int, indices: Sequence[int], r: int, epsilon: int = 1
) -> tuple[int, int]:
    """The same inner sum with the factor n extracted structurally.

    Expands the product over the B_t basis, collapses each k-sum with the
    closed-form partial sums, and returns (q, n*q) where q is assembled
    from the cofactors C(n, t+1) C(n+t, t) (or the alternating pair), so
    no division by n ever happens.  Cross-checks n*q against the direct
    sum and raises InternalInvariantError on disagreement.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not indices:
        raise ValueError("need at least one index")
    if max(indices) > n - 1:
        raise ValueError(f"indices must be <= n-1 = {n - 1}, got {max(indices)}")
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon}")
    combo = tuple_linearize(indices, r)
    if epsilon == 1:
        q = sum(c * binom(n, t + 1) * binom(n + t, t) for t, c in combo.items())
    else:
        q = sum(c * binom(n - 1, t) * binom(n + t, t) for t, c in combo.items())
        if (n - 1) % 2 == 1:
            q = -q
    nq = n * q
    direct = inner_sum_direct(n, indices, r, epsilon)
    if nq != direct:
        raise InternalInvariantError(
            f"constructive inner sum {nq} != direct {direct} "
            f"at n={n}, indices={list(indices)}, r={r}, epsilon={epsilon}"
        )
    return q, nq
