"""Linearization of binomial products over the basis B_t(k) = C(k+t, 2t) C(2t, t).

The whole verification strategy rests on one fact: r-th powers and pointwise
products of terms C(k+i, 2i)^r C(2i, i), viewed as polynomials in k, expand
back over the basis B_t(k) with *integer* coefficients.

A ``BasisCombo`` is a plain dict {t: coefficient} denoting the function
k -> sum_t c_t B_t(k), with no zero coefficients stored.

Powers expand through a table of integers b[m, k, r] (k = m .. r*m) with

    C(l+m, 2m)^r C(2m, m) = sum_{k=m}^{rm} b[m, k, r] B_k(l),

built by the recursion

    b[m, m, 1] = 1
    b[m, j, r+1] = C(j, m) * sum_k b[m, k, r] / C(k, m) * C(m, j-k) * C(m+k, 2m)

where every b[m, k, r] is divisible by C(k, m), so the division is exact.

Pairwise products expand through the rewriting rule (a special case of the
Pfaff-Saalschuetz evaluation of a balanced 3F2 sum): for i <= j,

    B_i(l) B_j(l) = sum_{s=0}^{i} C(i+j, i) C(j, i-s) C(j+s, s) B_{j+s}(l).

Every identity in this module is certified by exact evaluation at
(degree + 1) integer points with polynomially continued binomials: two
polynomials of degree <= d that agree at d+1 distinct points are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .binomials import binom, central_binom, saalschutz_coeff
from .errors import InternalInvariantError

BasisCombo = dict[int, int]


@dataclass(frozen=True)
class BTable:
    """The integers b[m, k, r] for k = m .. r*m, entries[i] = b[m, m+i, r]."""

    m: int
    r: int
    entries: tuple[int, ...]

    def items(self) -> Iterable[tuple[int, int]]:
        return ((self.m + i, b) for i, b in enumerate(self.entries))

    def __getitem__(self, k: int) -> int:
        if not self.m <= k <= self.r * self.m:
            raise KeyError(k)
        return self.entries[k - self.m]


@lru_cache(maxsize=None)
def b_table(m: int, r: int) -> BTable:
    """Build b[m, *, r] by iterating the power recursion up from r = 1.

    Raises InternalInvariantError on an inexact division, which would mean
    the divisibility of b[m, k, r] by C(k, m) failed -- a bug, not data.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    entries = [1]
    for s in range(1, r):
        prev = entries
        entries = []
        for j in range(m, (s + 1) * m + 1):
            total = 0
            for k in range(m, s * m + 1):
                q, rem = divmod(prev[k - m], binom(k, m))
                if rem:
                    raise InternalInvariantError(
                        f"b[{m},{k},{s}] = {prev[k - m]} not divisible by C({k},{m})"
                    )
                total += q * binom(m, j - k) * binom(m + k, 2 * m)
            entries.append(binom(j, m) * total)
    return BTable(m, r, tuple(entries))


def power_linearize(i: int, r: int) -> BasisCombo:
    """Expansion of C(k+i, 2i)^r C(2i, i) over the basis: {t: b[i, t, r]}."""
    return dict(b_table(i, r).items())


def product_linearize(i: int, j: int) -> BasisCombo:
    """Expansion of B_i(k) B_j(k) over the basis.

    Symmetric in (i, j); indices run from max(i, j) to i + j.
    """
    if i < 0 or j < 0:
        raise ValueError(f"indices must be >= 0, got ({i}, {j})")
    lo, hi = sorted((i, j))
    shared = binom(lo + hi, lo)
    return {hi + s: shared * binom(hi, lo - s) * binom(hi + s, s) for s in range(lo + 1)}


def combo_mul(p: BasisCombo, q: BasisCombo) -> BasisCombo:
    """Bilinear extension of product_linearize: the pointwise product."""
    out: BasisCombo = {}
    for t, ct in p.items():
        for u, cu in q.items():
            scale = ct * cu
            for v, w in product_linearize(t, u).items():
                s = out.get(v, 0) + scale * w
                if s:
                    out[v] = s
                elif v in out:
                    del out[v]
    return out


def tuple_linearize(indices: Sequence[int], r: int) -> BasisCombo:
    """Expansion of prod_j C(k+i_j, 2i_j)^r C(2i_j, i_j) over the basis.

    Left-fold of power_linearize results under combo_mul, in input order.
    The result has min index >= max(indices) and max index <= r * sum(indices).
    """
    if not indices:
        raise ValueError("tuple_linearize needs at least one index")
    combo = power_linearize(indices[0], r)
    for i in indices[1:]:
        combo = combo_mul(combo, power_linearize(i, r))
    return combo


def basis_eval(t: int, k: int) -> int:
    """B_t(k) = C(k+t, 2t) C(2t, t), polynomially continued in k."""
    return binom(k + t, 2 * t) * central_binom(t)


def combo_eval(c: BasisCombo, k: int) -> int:
    """Evaluate the represented function at integer k."""
    return sum(coeff * basis_eval(t, k) for t, coeff in c.items())


# -- degree-bound identity certificates -------------------------------------


@dataclass(frozen=True)
class IdentityCertificate:
    """Outcome of checking a polynomial identity at degree+1 sample points."""

    ok: bool
    degree: int
    samples: tuple[int, ...]
    failures: tuple[tuple[int, object, object], ...]  # (sample, lhs, rhs)

    def __bool__(self) -> bool:
        return self.ok


def certify_identity(
    lhs: Callable[[int], object],
    rhs: Callable[[int], object],
    samples: Sequence[int],
    degree: int,
) -> IdentityCertificate:
    """Exact agreement of two degree-bounded maps at >= degree+1 points.

    Agreement at degree+1 distinct points proves the polynomial identity.
    """
    distinct = sorted(set(samples))
    if len(distinct) < degree + 1:
        raise ValueError(
            f"need at least {degree + 1} distinct samples for degree {degree}, "
            f"got {len(distinct)}"
        )
    failures = tuple(
        (x, a, b) for x in distinct if (a := lhs(x)) != (b := rhs(x))
    )
    return IdentityCertificate(not failures, degree, tuple(distinct), failures)


def pfaff_check(m: int, k: int, samples: Sequence[int]) -> IdentityCertificate:
    """Certify the balanced-product rewriting at the given sample points:

        C(l+k, 2k) C(2k, k)
            = sum_{i=0}^{k} (m+k)! i! / ((m+i)! k!)
                            * C(m, k-i) C(l-m, i) C(l+m+i, i).

    Both sides are degree-2k polynomials in l, so 2k+1 distinct samples
    certify the identity.  The right side is summed in exact rationals.
    """
    if m < 0 or k < 0:
        raise ValueError(f"m and k must be >= 0, got ({m}, {k})")

    def lhs(ell: int) -> Fraction:
        return Fraction(binom(ell + k, 2 * k) * central_binom(k))

    def rhs(ell: int) -> Fraction:
        total = Fraction(0)
        for i in range(k + 1):
            total += (
                saalschutz_coeff(m, k, i)
                * binom(m, k - i)
                * binom(ell - m, i)
                * binom(ell + m + i, i)
            )
        return total

    return certify_identity(lhs, rhs, samples, degree=2 * k)


def power_expansion_check(m: int, r: int) -> IdentityCertificate:
    """Certify the power expansion of C(l+m, 2m)^r C(2m, m) pointwise."""
    combo = power_linearize(m, r)

    def lhs(ell: int) -> int:
        return binom(ell + m, 2 * m) ** r * central_binom(m)

    degree = 2 * r * m
    return certify_identity(lhs, lambda ell: combo_eval(combo, ell), range(degree + 1), degree)


def product_expansion_check(i: int, j: int) -> IdentityCertificate:
    """Certify the product expansion of B_i B_j pointwise."""
    combo = product_linearize(i, j)

    def lhs(ell: int) -> int:
        return basis_eval(i, ell) * basis_eval(j, ell)

    degree = 2 * (i + j)
    return certify_identity(lhs, lambda ell: combo_eval(combo, ell), range(degree + 1), degree)
