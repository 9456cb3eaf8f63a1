"""Builders for the Schmidt polynomial families and their weighted sums.

The multi-variable family is

    S_n[r](x_0, ..., x_n) = sum_{k=0}^{n} C(n+k, 2k)^r C(2k, k) x_k

and the single-variable family is

    S_n[r](x) = sum_{k=0}^{n} C(n, k)^r C(n+k, k)^r x^k.

Substituting x_k -> C(2k, k)^(r-1) x^k into the first gives the second,
because C(n+k, 2k) C(2k, k) = C(n, k) C(n+k, k).

The verifiers all consume weighted sums

    sum_{k=0}^{n-1} eps^k w(k) (2k+1) S_k[r](x_0, ..., x_k)^m

where the weight w is one of a closed set of three selectors, so every run
is serializable and reproducible from its parameter record:

    plain       w(k) = 1
    kk1         w(k) = k^a (k+1)^a
    odd_square  w(k) = (2k+1)^(2a)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binomials import binom, central_binom
from .mpoly import MultiPoly, UniPoly

WEIGHTS = ("plain", "kk1", "odd_square")


@dataclass(frozen=True)
class SchmidtParams:
    """Parameter cell for one congruence check.

    n: number of summands (the modulus being verified); m: outer power;
    r: inner power; epsilon: +1 or -1 sign alternation; a: weight exponent,
    used only by the kk1 / odd_square weights.
    """

    n: int
    m: int
    r: int
    epsilon: int = 1
    a: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if self.a < 0:
            raise ValueError(f"a must be >= 0, got {self.a}")


@lru_cache(maxsize=None)
def schmidt_multi(n: int, r: int) -> MultiPoly:
    """The multi-variable polynomial S_n[r](x_0, ..., x_n)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return MultiPoly(
        {((k, 1),): binom(n + k, 2 * k) ** r * central_binom(k) for k in range(n + 1)}
    )


def schmidt_single(n: int, r: int) -> UniPoly:
    """The single-variable polynomial S_n[r](x)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return UniPoly([(binom(n, k) * binom(n + k, k)) ** r for k in range(n + 1)])


def apery_specialization_rule(r: int):
    """The substitution x_k -> C(2k, k)^(r-1) x^k collapsing multi to single.

    Returns a callable usable with MultiPoly.specialize.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")

    def rule(k: int) -> int:
        return central_binom(k) ** (r - 1)

    return rule


@lru_cache(maxsize=None)
def schmidt_multi_power(n: int, r: int, m: int) -> MultiPoly:
    """S_n[r]^m, memoized; the dominant cost of grid sweeps at m >= 2."""
    return schmidt_multi(n, r) ** m


def weight_factor(weight: str, k: int, a: int) -> int:
    """w(k) for one of the three weight selectors."""
    if weight == "plain":
        return 1
    if weight == "kk1":
        return k**a * (k + 1) ** a
    if weight == "odd_square":
        return (2 * k + 1) ** (2 * a)
    raise ValueError(f"unknown weight {weight!r}; expected one of {WEIGHTS}")


def weighted_sum(p: SchmidtParams, weight: str = "plain") -> MultiPoly:
    """sum_{k=0}^{n-1} eps^k w(k) (2k+1) S_k[r](x_0..x_k)^m, exact."""
    if p.n < 1:
        raise ValueError(f"weighted_sum needs n >= 1, got {p.n}")
    total = MultiPoly.zero()
    for k in range(p.n):
        factor = weight_factor(weight, k, p.a) * (2 * k + 1)
        if p.epsilon == -1 and k % 2 == 1:
            factor = -factor
        if factor == 0:
            continue
        total = total + schmidt_multi_power(k, p.r, p.m) * factor
    return total


def weighted_sum_single(p: SchmidtParams, weight: str = "plain") -> UniPoly:
    """Single-variable analogue: sum_{k<n} eps^k w(k) (2k+1) S_k[r](x)^m."""
    if p.n < 1:
        raise ValueError(f"weighted_sum_single needs n >= 1, got {p.n}")
    total = UniPoly(())
    for k in range(p.n):
        factor = weight_factor(weight, k, p.a) * (2 * k + 1)
        if p.epsilon == -1 and k % 2 == 1:
            factor = -factor
        if factor == 0:
            continue
        total = total + schmidt_single(k, p.r) ** p.m * factor
    return total
