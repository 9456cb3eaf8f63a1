"""Exact integer primitives: binomials, rising factorials, central binomials.

Everything here is exact arbitrary-precision arithmetic on Python ints.
The one non-obvious convention: ``binom`` uses the falling-factorial
(polynomial-continuation) definition

    binom(t, k) = t (t-1) ... (t-k+1) / k!        for any integer t, k >= 0

which agrees with the combinatorial value for t >= 0 and extends it to
negative tops, e.g. binom(-1, 2) = 1.  All binomial identities verified by
this package are polynomial identities in one integer argument, and the
continuation is what makes them checkable at arbitrary sample points.
"""

from __future__ import annotations

import math
from fractions import Fraction


def binom(top: int, k: int) -> int:
    """Binomial coefficient C(top, k), polynomially continued in ``top``.

    Returns 0 for k < 0.  For top >= 0 this is the ordinary combinatorial
    value (0 when k > top).
    """
    if k < 0:
        return 0
    if top >= 0:
        return math.comb(top, k) if k <= top else 0
    # Negative top: falling-factorial product with incremental exact
    # division; every prefix of the product is divisible by the step index.
    result = 1
    for i in range(1, k + 1):
        result = result * (top - i + 1) // i
    return result


def central_binom(k: int) -> int:
    """C(2k, k) for k >= 0."""
    if k < 0:
        raise ValueError(f"central_binom needs k >= 0, got {k}")
    return math.comb(2 * k, k)


def rising_factorial(x: int, n: int) -> int:
    """The rising factorial x (x+1) ... (x+n-1), with the empty product = 1."""
    if n < 0:
        raise ValueError(f"rising_factorial needs n >= 0, got {n}")
    result = 1
    for i in range(n):
        result *= x + i
    return result


def saalschutz_coeff(m: int, k: int, i: int) -> Fraction:
    """The exact rational (m+k)! i! / ((m+i)! k!).

    This is the coefficient appearing when a balanced binomial product is
    rewritten over the basis C(m, k-i) C(l-m, i) C(l+m+i, i); it is not an
    integer on its own, only after the rewriting is combined.
    """
    if not (0 <= i <= k):
        raise ValueError(f"saalschutz_coeff needs 0 <= i <= k, got i={i}, k={k}")
    if m < 0:
        raise ValueError(f"saalschutz_coeff needs m >= 0, got {m}")
    return Fraction(
        math.factorial(m + k) * math.factorial(i),
        math.factorial(m + i) * math.factorial(k),
    )


def exact_div(a: int, b: int) -> int:
    """a // b, raising if the division is not exact."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division: {a} / {b}")
    return q
