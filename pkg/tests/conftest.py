"""Shared independent oracles and hypothesis strategies.

Everything in this file is deliberately written against math.comb /
Fraction / plain dicts so it shares no code path with the package: the
suite cross-checks two genuinely independent routes to each value.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial

from hypothesis import strategies as st

from schmidtpoly.mpoly import MultiPoly


def oracle_binom(t: int, k: int) -> Fraction:
    """C(t, k) as the degree-k polynomial t(t-1)...(t-k+1)/k!, in rationals."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(k):
        num *= t - i
    return num / factorial(k)


def oracle_basis(t: int, ell: int) -> int:
    """B_t(ell) = C(ell+t, 2t) C(2t, t) via the rational continuation."""
    value = oracle_binom(ell + t, 2 * t) * comb(2 * t, t)
    assert value.denominator == 1
    return value.numerator


def oracle_combo_eval(combo: dict[int, int], ell: int) -> int:
    return sum(c * oracle_basis(t, ell) for t, c in combo.items())


def oracle_weight(weight: str, k: int, a: int) -> int:
    if weight == "plain":
        return 1
    if weight == "kk1":
        return k**a * (k + 1) ** a
    if weight == "odd_square":
        return (2 * k + 1) ** (2 * a)
    raise AssertionError(weight)


def oracle_weighted_sum(
    n: int, m: int, r: int, epsilon: int, a: int = 0, weight: str = "plain"
) -> MultiPoly:
    """Brute-force expansion over ordered index tuples, no polynomial ops.

    Expands S_k^m as the sum over all (i_1, ..., i_m) in {0..k}^m of the
    product of coefficient factors, accumulating monomials in a plain dict.
    """
    acc: dict[tuple[tuple[int, int], ...], int] = {}
    for k in range(n):
        factor = oracle_weight(weight, k, a) * (2 * k + 1)
        if epsilon == -1 and k % 2 == 1:
            factor = -factor
        if factor == 0:
            continue
        for tup in itertools.product(range(k + 1), repeat=m):
            coeff = factor
            counts: dict[int, int] = {}
            for i in tup:
                coeff *= comb(k + i, 2 * i) ** r * comb(2 * i, i)
                counts[i] = counts.get(i, 0) + 1
            mono = tuple(sorted(counts.items()))
            acc[mono] = acc.get(mono, 0) + coeff
    return MultiPoly(acc)


def oracle_single_sum(n: int, m: int, r: int, epsilon: int) -> list[int]:
    """Brute-force single-variable sum coefficients, ascending powers."""
    out = [0] * (max((n - 1) * m, 0) + 1)
    for k in range(n):
        factor = 2 * k + 1
        if epsilon == -1 and k % 2 == 1:
            factor = -factor
        for tup in itertools.product(range(k + 1), repeat=m):
            coeff = factor
            for i in tup:
                coeff *= (comb(k, i) * comb(k + i, i)) ** r
            out[sum(tup)] += coeff
    while out and out[-1] == 0:
        out.pop()
    return out


# -- hypothesis strategies ----------------------------------------------------

monomials = st.dictionaries(
    st.integers(min_value=0, max_value=4), st.integers(min_value=1, max_value=3), max_size=3
).map(lambda d: tuple(sorted(d.items())))

small_polys = st.dictionaries(
    monomials, st.integers(min_value=-99, max_value=99), max_size=6
).map(MultiPoly)

small_combos = st.dictionaries(
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=-9, max_value=9).filter(lambda v: v != 0),
    max_size=3,
)
