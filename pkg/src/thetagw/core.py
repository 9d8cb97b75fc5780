"""Exact scalars, binomials, and partition combinatorics.

Every value in this package is an exact rational; the scalar type throughout
is `fractions.Fraction`, re-exported as `Rational`.  Nothing here (or
anywhere downstream) rounds.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

Rational = Fraction


class InternalInconsistencyError(RuntimeError):
    """An identity that must hold by construction failed to hold."""


def rational_str(q: Fraction | int) -> str:
    """Canonical form "num/den" in lowest terms, "num" when den == 1."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    """Inverse of :func:`rational_str`."""
    return Fraction(s)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Partition:
    """Weakly increasing positive parts, with the gluing-formula bookkeeping.

    ``weight`` is the product of the parts and ``aut`` the order of the
    subgroup of part permutations fixing the partition; the gluing formula
    weighs the channel indexed by a partition with weight/aut.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("partition parts must be positive")
        if list(self.parts) != sorted(self.parts):
            raise ValueError("partition parts must be weakly increasing")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return math.prod(self.parts)

    @property
    def aut(self) -> int:
        return math.prod(
            math.factorial(m) for m in Counter(self.parts).values()
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in lexicographic order of their part tuples."""
    if d < 1:
        raise ValueError("partitions_of requires d >= 1")
    out: list[Partition] = []

    def rec(remaining: int, lo: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(lo, remaining + 1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(d, 1, [])
    return out


def required_chi(d: int, h: int, alphas) -> int:
    """Euler characteristic forced by degree d, base genus h and descendant
    exponents: chi = -(d*(h-1) + sum(alphas))."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if h < 0:
        raise ValueError("genus must be >= 0")
    return -(d * (h - 1) + sum(alphas))


def descendant_multisets(max_len: int, max_total: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing exponent tuples with length <= max_len and sum
    <= max_total, ordered by length then lexicographically."""
    yield ()

    def rec(n: int, lo: int, budget: int):
        if n == 0:
            yield ()
            return
        for p in range(lo, budget + 1):
            for rest in rec(n - 1, p, budget - p):
                yield (p,) + rest

    for n in range(1, max_len + 1):
        yield from rec(n, 0, max_total)
