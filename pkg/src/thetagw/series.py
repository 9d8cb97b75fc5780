"""Truncated power series in z over exact rationals, and finite Laurent
polynomials in an auxiliary variable w whose coefficients are such series.

A :class:`TruncatedSeries` stores dense coefficients for z^0 .. z^(N-1) and
is exact modulo z^N.  Binary operations truncate to the smaller operand
order, so a result never claims more precision than its inputs support.

:class:`WLaurent` carries objects of the branch-point analysis, e.g.

    g = 1 + B_1 w^{-1} + ... + B_k w^{-k}

with every coefficient a truncated series in z.  The square root
sqrt(1 - z/w) enters only through the coefficient extractor
:func:`sqrt_coeff`; callers assemble whatever finite w-truncation of it
they need.  All the series appearing here are z-graded monomials or short
polynomials, so dense storage is the right trade.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import binomial


@dataclass(frozen=True)
class ZMonomial:
    """A single term coeff * z^exp."""

    coeff: Fraction
    exp: int

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("z-exponent must be >= 0")

    def __mul__(self, other: "ZMonomial") -> "ZMonomial":
        return ZMonomial(self.coeff * other.coeff, self.exp + other.exp)

    def __neg__(self) -> "ZMonomial":
        return ZMonomial(-self.coeff, self.exp)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def as_series(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.monomial(self.coeff, self.exp, order)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.coeff)
        if self.exp == 1:
            return f"{self.coeff}*z"
        return f"{self.coeff}*z^{self.exp}"


class TruncatedSeries:
    """Dense univariate series modulo z^order, coefficients exact rationals."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        if len(cs) < order:
            cs.extend([Fraction(0)] * (order - len(cs)))
        else:
            cs = cs[:order]
        self.coeffs = tuple(cs)
        self.order = order

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, coeff, exp: int, order: int) -> "TruncatedSeries":
        if exp < 0:
            raise ValueError("z-exponent must be >= 0")
        cs = [Fraction(0)] * order
        if exp < order:
            cs[exp] = Fraction(coeff)
        return cls(cs, order)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * n
        for i in range(n):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    # -- queries --------------------------------------------------------

    def z_order(self) -> int | None:
        """Index of the first nonzero coefficient, None when everything
        stored vanishes (order >= truncation)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def is_zero_mod(self, m: int) -> bool:
        """True when the series is 0 modulo z^m (only stored coefficients
        are consulted; m may not exceed the truncation order)."""
        if m > self.order:
            raise ValueError("is_zero_mod beyond truncation order")
        return all(c == 0 for c in self.coeffs[:m])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(z^{self.order})"


def sqrt_coeff(j: int) -> ZMonomial:
    """Coefficient of w^{-j} in sqrt(1 - z/w), as a monomial in z.

    For j >= 1 this is -2^(1-2j) * (1/j) * C(2j-2, j-1) * z^j, which equals
    the generalized binomial value (-1)^j * C(1/2, j) * z^j.
    """
    if j < 0:
        raise ValueError("sqrt_coeff requires j >= 0")
    if j == 0:
        return ZMonomial(Fraction(1), 0)
    return ZMonomial(Fraction(-binomial(2 * j - 2, j - 1), j * 2 ** (2 * j - 1)), j)


class WLaurent:
    """Finite Laurent polynomial in w with TruncatedSeries coefficients.

    Terms whose coefficient series is identically zero (within its stored
    precision) are never kept.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, TruncatedSeries]):
        self.terms = {e: s for e, s in terms.items() if s.z_order() is not None}

    @classmethod
    def monomial(cls, exp: int, series: TruncatedSeries) -> "WLaurent":
        return cls({exp: series})

    def coefficient(self, exp: int) -> TruncatedSeries | None:
        return self.terms.get(exp)

    def exponents(self) -> list[int]:
        return sorted(self.terms)

    def __add__(self, other: "WLaurent") -> "WLaurent":
        acc = dict(self.terms)
        for e, s in other.terms.items():
            acc[e] = acc[e] + s if e in acc else s
        return WLaurent(acc)

    def __neg__(self) -> "WLaurent":
        return WLaurent({e: -s for e, s in self.terms.items()})

    def __sub__(self, other: "WLaurent") -> "WLaurent":
        return self + (-other)

    def __mul__(self, other: "WLaurent") -> "WLaurent":
        acc: dict[int, TruncatedSeries] = {}
        for e1, s1 in self.terms.items():
            for e2, s2 in other.terms.items():
                e = e1 + e2
                p = s1 * s2
                acc[e] = acc[e] + p if e in acc else p
        return WLaurent(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "WLaurent(0)"
        parts = [f"w^{e}*({s!r})" for e, s in sorted(self.terms.items(), reverse=True)]
        return "WLaurent(" + " + ".join(parts) + ")"


def wlaurent_nonneg_check(p: WLaurent, zmod: int) -> bool:
    """True iff every term of ``p`` with negative w-exponent vanishes
    modulo z^zmod."""
    for e, s in p.terms.items():
        if e < 0 and not s.is_zero_mod(zmod):
            return False
    return True
