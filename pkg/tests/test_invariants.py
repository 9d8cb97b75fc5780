from fractions import Fraction

import pytest

from thetagw.core import InternalInconsistencyError
from thetagw.invariants import (
    InvariantQuery,
    TwistedBreakdown,
    degree1,
    degree2,
    degree2_base,
    degree2_tau1_decomposition,
    evaluate,
    relative_invariant_table,
    twisted_breakdown,
)
from thetagw.spin import signed_double_cover_sum


def test_query_validation():
    with pytest.raises(ValueError):
        InvariantQuery(3, 1, 0, ())
    with pytest.raises(ValueError):
        InvariantQuery(1, -1, 0, ())
    with pytest.raises(ValueError):
        InvariantQuery(1, 1, 2, ())
    with pytest.raises(ValueError):
        InvariantQuery(1, 1, 0, (-1,))


def test_query_chi():
    assert InvariantQuery(2, 3, 0, (1,)).chi == -5
    assert InvariantQuery(1, 1, 0, ()).chi == 0


def test_degree1_values():
    assert degree1(InvariantQuery(1, 2, 0, (0,))) == 1
    assert degree1(InvariantQuery(1, 2, 0, (1,))) == Fraction(-1, 12)
    assert degree1(InvariantQuery(1, 2, 1, (1, 1))) == Fraction(-1, 144)
    with pytest.raises(ValueError):
        degree1(InvariantQuery(2, 2, 0, ()))


def test_degree2_values():
    for h in range(6):
        for parity in (0, 1):
            sign = (-1) ** parity
            assert degree2(InvariantQuery(2, h, parity, (1,))) == sign * 2**h * Fraction(-1, 3)
            assert degree2(InvariantQuery(2, h, parity, ())) == sign * Fraction(2) ** (h - 1)
    with pytest.raises(ValueError):
        degree2(InvariantQuery(1, 2, 0, ()))


def test_degree2_base_values():
    assert degree2_base((1,)) == Fraction(-1, 3)
    assert degree2_base(()) == Fraction(1, 2)
    assert degree2_base((0, 0)) == 2


def test_degree2_specializes_to_base():
    from thetagw.core import descendant_multisets

    for alphas in descendant_multisets(4, 8):
        assert degree2(InvariantQuery(2, 0, 0, alphas)) == degree2_base(alphas)


def test_degree2_matches_weighted_cover_sum():
    for h in range(13):
        for parity in (0, 1):
            assert degree2(InvariantQuery(2, h, parity, ())) == signed_double_cover_sum(
                h, parity, "weighted"
            )


def test_evaluate_dispatch():
    assert evaluate(InvariantQuery(1, 0, 0, (1,))) == Fraction(-1, 12)
    assert evaluate(InvariantQuery(2, 0, 0, (1,))) == Fraction(-1, 3)


def test_relative_table():
    for h in range(5):
        for parity in (0, 1):
            table = relative_invariant_table(h, parity)
            assert table["spin_11"] == (-1) ** parity * 2**h
            assert table["bubble_11_tau1"] == Fraction(-1, 6)
            assert table["bubble_1_unit"] == 1
            assert table["bubble_1_tau1"] == Fraction(-1, 12)


def test_twisted_breakdown_values():
    b2 = twisted_breakdown(2)
    assert b2.total == Fraction(-4, 3)
    assert b2.branched_part == 0
    b3 = twisted_breakdown(3)
    assert b3.total == Fraction(8, 3)
    assert b3.branched_part == 8
    assert b3.etale_count == 64


def test_twisted_breakdown_identity_range():
    for h in range(2, 31):
        b = twisted_breakdown(h)
        assert b.total - b.etale_count * b.per_etale == b.branched_part
        assert b.per_etale == Fraction(-1, 12)


def test_twisted_breakdown_guards():
    with pytest.raises(ValueError):
        twisted_breakdown(1)
    with pytest.raises(InternalInconsistencyError):
        TwistedBreakdown(
            h=2,
            total=Fraction(1),
            per_etale=Fraction(-1, 12),
            etale_count=16,
            branched_part=Fraction(0),
        )


def test_tau1_decomposition():
    for parity in (0, 1):
        sign = (-1) ** parity
        d3 = degree2_tau1_decomposition(3, parity)
        assert d3["etale_total"] == sign * Fraction(-8, 12)
        assert d3["branched_total"] == sign * -2
        assert d3["grand_total"] == sign * Fraction(-8, 3)
    for h in range(31):
        for parity in (0, 1):
            d = degree2_tau1_decomposition(h, parity)
            assert d["etale_total"] == (-1) ** parity * 2**h * Fraction(-1, 12)
            assert d["branched_total"] == (-1) ** parity * -(Fraction(2) ** (h - 2))
            assert d["grand_total"] == degree2(InvariantQuery(2, h, parity, (1,)))


def test_degree_ratio_relation():
    # per-insertion factors differ by (-2)^{2a}; globally by 2^{h+n-1}
    from thetagw.core import descendant_multisets

    for h in (0, 2, 7):
        for parity in (0, 1):
            for alphas in descendant_multisets(3, 6):
                n = len(alphas)
                ratio = Fraction(2) ** (h + n - 1)
                for a in alphas:
                    ratio *= Fraction(-2) ** (2 * a)
                assert degree2(InvariantQuery(2, h, parity, alphas)) == (
                    degree1(InvariantQuery(1, h, parity, alphas)) * ratio
                )
