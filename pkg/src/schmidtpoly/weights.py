"""Polynomial weights that the congruences absorb: k^a (k+1)^a and (2k+1)^(2a).

The kk1 weight is absorbed through the expansion

    k^a (k+1)^a C(k+j, 2j)
        = sum_{i=0}^{a} c_i(j, a) C(k+j+i, 2j+2i) (2j+1)_{2i}

with integer coefficients c_i(j, a).  Note the basis term here: the
variant with C(k+j+i, j+i) in place of C(k+j+i, 2j+2i) has degree j+i in k
and cannot match the degree 2j+2a left side, so this module uses the
degree-consistent form, under which the triangular solve below succeeds
with integer results (verified at degree+1 points for every table built).

The odd-square weight reduces to kk1 weights through

    (2k+1)^(2a) = (4k^2 + 4k + 1)^a = sum_{i=0}^{a} C(a, i) 4^i k^i (k+1)^i.

``c_table`` solves for the c_i(j, a) triangularly: evaluating at
k = j, j+1, ..., j+a makes the system triangular because the basis term
for index i vanishes at k < j+i, and each back substitution divides by
the pivot (2j+1)_{2i} exactly (an inexact division would contradict the
integrality of the expansion and raises IntegralityError).
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomials import binom, rising_factorial
from .congruence import CongruenceReport, run_check
from .errors import IntegralityError
from .linearize import IdentityCertificate, certify_identity
from .schmidt import SchmidtParams

GENERALIZED_FORMS = ("kk1", "odd_power")


@dataclass(frozen=True)
class CTable:
    """The integers c_0(j, a) .. c_a(j, a) of the kk1 weight absorption."""

    j: int
    a: int
    entries: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def _kk1_lhs(j: int, a: int, k: int) -> int:
    return k**a * (k + 1) ** a * binom(k + j, 2 * j)


def _basis_term(j: int, i: int, k: int) -> int:
    return binom(k + j + i, 2 * j + 2 * i) * rising_factorial(2 * j + 1, 2 * i)


def c_table(j: int, a: int) -> CTable:
    """Solve for the weight-absorption coefficients and certify the identity."""
    if j < 0 or a < 0:
        raise ValueError(f"j and a must be >= 0, got ({j}, {a})")
    entries: list[int] = []
    for s in range(a + 1):
        k = j + s
        acc = _kk1_lhs(j, a, k)
        for i, c in enumerate(entries):
            acc -= c * _basis_term(j, i, k)
        pivot = rising_factorial(2 * j + 1, 2 * s)
        q, rem = divmod(acc, pivot)
        if rem:
            raise IntegralityError(
                f"c_{s}({j},{a}) back substitution left remainder {rem} "
                f"dividing {acc} by {pivot}"
            )
        entries.append(q)
    table = CTable(j, a, tuple(entries))
    cert = verify_c_identity(j, a, range(2 * j + 2 * a + 1), table=table)
    if not cert.ok:
        raise IntegralityError(f"c-table for (j={j}, a={a}) failed its certificate")
    return table


def verify_c_identity(
    j: int, a: int, samples, table: CTable | None = None
) -> IdentityCertificate:
    """Certify the kk1 absorption identity at the given k samples.

    Both sides have degree 2j + 2a in k, so 2j+2a+1 distinct samples prove
    the polynomial identity.
    """
    if table is None:
        table = c_table(j, a)
    cs = table.entries

    def rhs(k: int) -> int:
        return sum(c * _basis_term(j, i, k) for i, c in enumerate(cs))

    return certify_identity(
        lambda k: _kk1_lhs(j, a, k), rhs, samples, degree=2 * j + 2 * a
    )


def square_weight_coeffs(a: int) -> list[int]:
    """Coefficients [C(a, i) 4^i for i = 0..a] of (2k+1)^(2a) over k^i (k+1)^i."""
    if a < 0:
        raise ValueError(f"a must be >= 0, got {a}")
    return [binom(a, i) * 4**i for i in range(a + 1)]


def square_weight_check(a: int) -> IdentityCertificate:
    """Certify (2k+1)^(2a) = sum_i C(a, i) 4^i k^i (k+1)^i at 2a+1 points."""
    coeffs = square_weight_coeffs(a)

    def rhs(k: int) -> int:
        return sum(c * k**i * (k + 1) ** i for i, c in enumerate(coeffs))

    return certify_identity(lambda k: (2 * k + 1) ** (2 * a), rhs, range(2 * a + 1), degree=2 * a)


def generalized_check(
    p: SchmidtParams, form: str, *, exploratory: bool = False
) -> CongruenceReport:
    """Divisibility by n of the weighted sum for one of the two forms:

      kk1        sum_k eps^k (2k+1) k^a (k+1)^a S_k[r]^m, any m >= 1
      odd_power  sum_k eps^k (2k+1)^(2a+1) S_k[r],        m = 1

    The odd_power form with m > 1 is not part of the verified claim set;
    pass exploratory=True to run it anyway.
    """
    if form not in GENERALIZED_FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {GENERALIZED_FORMS}")
    if p.n < 1:
        raise ValueError(f"generalized_check needs n >= 1, got {p.n}")
    if form == "odd_power" and p.m != 1 and not exploratory:
        raise ValueError(
            "odd_power is a verified claim only at m=1; "
            "pass exploratory=True to run m > 1"
        )
    weight = "kk1" if form == "kk1" else "odd_square"
    return run_check(p, weight, form)
