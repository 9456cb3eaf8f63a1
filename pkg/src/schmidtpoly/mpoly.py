"""Exact sparse multivariate and dense univariate polynomials over the integers.

A monomial is a tuple of (variable index, exponent) pairs, sorted by variable
index, with no zero exponents stored:

    x_0^2 * x_3  ->  ((0, 2), (3, 1))
    constant 1   ->  ()

``MultiPoly`` maps monomials to nonzero integer coefficients; two polynomials
are equal iff their maps are equal.  Variable indices are unbounded
nonnegative integers and polynomials carry no fixed arity.

Canonical term order (used for serialization and for picking divisibility
witnesses): ascending total degree, then descending lexicographic on the
dense exponent sequence (e_0, e_1, ...), so x_0 sorts before x_1 within a
degree.  The text form is ``c * x_i^e * ...`` joined by `` + ``, with every
coefficient printed as a decimal string.

Instances are immutable after construction: every operation allocates a
fresh result, so values are freely shareable across concurrent tasks.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional, Union

Monomial = tuple[tuple[int, int], ...]

SubstitutionRule = Union[Mapping[int, int], Callable[[int], int]]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Merge two sorted monomials, adding exponents of shared variables."""
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial):
    """(total degree, lex-descending dense exponents) sort key."""
    if not m:
        return (0, ())
    width = m[-1][0] + 1
    dense = [0] * width
    for var, e in m:
        dense[var] = -e
    return (mono_degree(m), tuple(dense))


def mono_text(m: Monomial) -> str:
    """Monomial as ``x_0^2 * x_3``; the empty monomial renders as ``1``."""
    if not m:
        return "1"
    return " * ".join(f"x_{var}" if e == 1 else f"x_{var}^{e}" for var, e in m)


class MultiPoly:
    """Canonical sparse polynomial over the integers in variables x_0, x_1, ..."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        # Canonicalize: drop zero coefficients and zero exponents.
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff == 0:
                    continue
                mono = tuple(sorted((v, e) for v, e in mono if e != 0))
                clean[mono] = clean.get(mono, 0) + coeff
                if clean[mono] == 0:
                    del clean[mono]
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, index: int, coeff: int = 1) -> "MultiPoly":
        if index < 0:
            raise ValueError(f"variable index must be >= 0, got {index}")
        return cls({((index, 1),): coeff})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterable[tuple[Monomial, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: mono_sort_key(t[0]))

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(tuple(sorted(mono)), 0)

    def coefficients(self) -> list[int]:
        """Coefficients in canonical term order."""
        return [c for _, c in self.terms()]

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=0)

    def variables(self) -> set[int]:
        return {var for mono in self._terms for var, _ in mono}

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        result = MultiPoly.__new__(MultiPoly)
        result._terms = out
        return result

    def __neg__(self) -> "MultiPoly":
        result = MultiPoly.__new__(MultiPoly)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        if isinstance(other, int):
            result = MultiPoly.__new__(MultiPoly)
            if other == 0:
                result._terms = {}
            else:
                result._terms = {m: c * other for m, c in self._terms.items()}
            return result
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = mono_mul(ma, mb)
                s = out.get(mono, 0) + ca * cb
                if s:
                    out[mono] = s
                elif mono in out:
                    del out[mono]
        result = MultiPoly.__new__(MultiPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "MultiPoly":
        if m < 1:
            raise ValueError(f"power must be >= 1, got {m}")
        out = self
        for _ in range(m - 1):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- congruence scan ---------------------------------------------------

    def divisibility_witness(self, n: int) -> Optional[tuple[Monomial, int]]:
        """First term (canonical order) whose coefficient is not 0 mod n.

        Returns None when every coefficient is a multiple of n.
        """
        if n < 1:
            raise ValueError(f"modulus must be >= 1, got {n}")
        for mono, coeff in self.terms():
            if coeff % n != 0:
                return (mono, coeff)
        return None

    def divisible_by(self, n: int) -> bool:
        return self.divisibility_witness(n) is None

    # -- substitution ------------------------------------------------------

    def specialize(self, rule: SubstitutionRule) -> "UniPoly":
        """Substitute x_k -> rule(k) * x^k and collect into one variable.

        ``rule`` is a callable or mapping from variable index to the integer
        coefficient; a mapping missing an occurring variable is an error.
        """
        if callable(rule):
            lookup = rule
        else:
            mapping = rule

            def lookup(var: int) -> int:
                if var not in mapping:
                    raise ValueError(f"no substitution rule for x_{var}")
                return mapping[var]

        dense: dict[int, int] = {}
        for mono, coeff in self._terms.items():
            value = coeff
            power = 0
            for var, e in mono:
                value *= lookup(var) ** e
                power += var * e
            if value:
                dense[power] = dense.get(power, 0) + value
        if not dense:
            return UniPoly(())
        out = [0] * (max(dense) + 1)
        for power, value in dense.items():
            out[power] = value
        return UniPoly(out)

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            if mono:
                parts.append(f"{coeff} * {mono_text(mono)}")
            else:
                parts.append(str(coeff))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


class UniPoly:
    """Dense polynomial in one variable x over the integers.

    Stored as a coefficient tuple in ascending power order with no trailing
    zero (the zero polynomial is the empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "UniPoly":
        return cls((c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __mul__(self, other: Union["UniPoly", int]) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "UniPoly":
        if m < 1:
            raise ValueError(f"power must be >= 1, got {m}")
        out = self
        for _ in range(m - 1):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def divisibility_witness(self, n: int) -> Optional[tuple[int, int]]:
        """First (power, coefficient) with coefficient not 0 mod n, else None."""
        if n < 1:
            raise ValueError(f"modulus must be >= 1, got {n}")
        for power, coeff in enumerate(self.coeffs):
            if coeff % n != 0:
                return (power, coeff)
        return None

    def divisible_by(self, n: int) -> bool:
        return self.divisibility_witness(n) is None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            if power == 0:
                parts.append(str(coeff))
            elif power == 1:
                parts.append(f"{coeff} * x")
            else:
                parts.append(f"{coeff} * x^{power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.coeffs})"
