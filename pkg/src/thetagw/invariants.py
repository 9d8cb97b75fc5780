"""Closed-formula evaluators for the low-degree localized invariants.

All invariants are of the total space of a theta characteristic L over a
smooth genus-h curve, with descendant insertions of the point class only.
With s = (-1)^{h^0(L)} and blocks w(a) = a!/(2a+1)!:

    degree 1:  s * prod_i w(a_i) * (-2)^{-a_i}
    degree 2:  s * 2^{h+n-1} * prod_i w(a_i) * (-2)^{+a_i}

The degree-2 formula specializes at h = 0 to the rational base case
(total space of O(-1) over the projective line), which the degeneration
engine uses to back-solve the full-contact channel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import InternalInconsistencyError, required_chi


def descendant_block(a: int) -> Fraction:
    """Degree-one weight of a single point-class descendant insertion:
    a!/(2a+1)! * (-2)^{-a}."""
    if a < 0:
        raise ValueError("descendant exponent must be >= 0")
    return Fraction(math.factorial(a), math.factorial(2 * a + 1)) * Fraction(-2) ** (-a)


def _descendant_block_deg2(a: int) -> Fraction:
    if a < 0:
        raise ValueError("descendant exponent must be >= 0")
    return Fraction(math.factorial(a), math.factorial(2 * a + 1)) * Fraction(-2) ** a


@dataclass(frozen=True)
class InvariantQuery:
    """A request for one invariant value.

    parity is h^0(L) mod 2; alphas are the descendant exponents at point
    insertions (may be empty).
    """

    d: int
    h: int
    parity: int
    alphas: tuple[int, ...] = ()

    def __post_init__(self):
        if self.d not in (1, 2):
            raise ValueError("degree must be 1 or 2")
        if self.h < 0:
            raise ValueError("genus must be >= 0")
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        if any(a < 0 for a in self.alphas):
            raise ValueError("descendant exponents must be >= 0")
        object.__setattr__(self, "alphas", tuple(self.alphas))

    @property
    def chi(self) -> int:
        """The only Euler characteristic at which the value can be nonzero."""
        return required_chi(self.d, self.h, self.alphas)

    @property
    def sign(self) -> int:
        return (-1) ** self.parity


def degree1(q: InvariantQuery) -> Fraction:
    if q.d != 1:
        raise ValueError("degree1 requires d = 1")
    value = Fraction(q.sign)
    for a in q.alphas:
        value *= descendant_block(a)
    return value


def degree2(q: InvariantQuery) -> Fraction:
    if q.d != 2:
        raise ValueError("degree2 requires d = 2")
    n = len(q.alphas)
    value = q.sign * Fraction(2) ** (q.h + n - 1)
    for a in q.alphas:
        value *= _descendant_block_deg2(a)
    return value


def degree2_base(alphas) -> Fraction:
    """Degree-2 invariant of the rational base case (genus 0, even parity):
    2^{n-1} * prod_i a_i!/(2a_i+1)! * (-2)^{a_i}."""
    alphas = tuple(alphas)
    value = Fraction(2) ** (len(alphas) - 1)
    for a in alphas:
        value *= _descendant_block_deg2(a)
    return value


def evaluate(q: InvariantQuery) -> Fraction:
    return degree1(q) if q.d == 1 else degree2(q)


def relative_invariant_table(h: int, parity: int) -> dict[str, Fraction]:
    """Relative invariants entering the degree-2 gluing formula, reduced to
    their scalars against point classes.

    spin_11         full (1,1)-contact invariant of the spin side: the
                    signed unweighted double-cover sum (-1)^parity * 2^h
    bubble_1_unit   (1)-contact bubble with no insertion: 1
    bubble_1_tau1   (1)-contact bubble with one tau_1 point insertion: -1/12
    bubble_11_tau1  (1,1)-contact bubble with one tau_1 point insertion: -1/6
    """
    if h < 0:
        raise ValueError("genus must be >= 0")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    return {
        "spin_11": Fraction((-1) ** parity * 2**h),
        "bubble_1_unit": Fraction(1),
        "bubble_1_tau1": Fraction(-1, 12),
        "bubble_11_tau1": Fraction(-1, 6),
    }


@dataclass(frozen=True)
class TwistedBreakdown:
    """Decomposition of the degree-2 tau_1 twisted invariant of the base
    curve into its etale-cover components and the branched-cover remainder.

    total - etale_count * per_etale = branched_part holds exactly and is
    asserted at construction.
    """

    h: int
    total: Fraction
    per_etale: Fraction
    etale_count: int
    branched_part: Fraction

    def __post_init__(self):
        if self.total - self.etale_count * self.per_etale != self.branched_part:
            raise InternalInconsistencyError(
                "twisted breakdown does not balance: "
                f"{self.total} - {self.etale_count}*({self.per_etale}) != {self.branched_part}"
            )


def twisted_breakdown(h: int) -> TwistedBreakdown:
    """Twisted-invariant arithmetic at genus h >= 2:
    (h - 8/3) 2^{2h-3} minus 2^{2h} copies of -1/12 leaves (h-2) 2^{2h-3}."""
    if h < 2:
        raise ValueError("twisted breakdown needs h >= 2")
    scale = 2 ** (2 * h - 3)
    return TwistedBreakdown(
        h=h,
        total=(h - Fraction(8, 3)) * scale,
        per_etale=Fraction(-1, 12),
        etale_count=2 ** (2 * h),
        branched_part=Fraction((h - 2) * scale),
    )


def degree2_tau1_decomposition(h: int, parity: int) -> dict[str, Fraction]:
    """Split the degree-2 single-tau_1 invariant over the 2^{2h} + 1
    connected components of its moduli: the etale-cover components
    contribute the signed cover gap times -1/12, the branched-cover
    component contributes (-1)^parity * (-2^{h-2}), and the grand total
    reproduces the closed formula (-1)^parity * 2^h * (-1/3)."""
    if h < 0:
        raise ValueError("genus must be >= 0")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    sign = (-1) ** parity
    etale_total = sign * 2**h * Fraction(-1, 12)
    branched_total = sign * -(Fraction(2) ** (h - 2))
    return {
        "etale_total": etale_total,
        "branched_total": branched_total,
        "grand_total": etale_total + branched_total,
    }
