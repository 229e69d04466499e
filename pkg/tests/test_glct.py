from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wpsklt import glct
from wpsklt.exactmath import display, sylvester, to_decimal
from wpsklt.families import build_family
from wpsklt.glct import (
    NonpositiveB,
    certify_exceptional,
    jk_mult_bound,
    lambda_,
    lambda_report,
    sigma,
    someweights_bound,
    weighted_mult_lct_bound,
)
from wpsklt.singular import fermat_lct

FANO2 = (177, 118, 49, 11)
DEG2 = Fraction(354, 177 * 118 * 49 * 11)


def test_lambda_values():
    assert lambda_(1) == 1
    assert lambda_(2) == Fraction(3, 112)
    assert lambda_(3) == Fraction(2, 43 ** 2 * 44 ** 2)


def test_lambda_side_conditions():
    assert lambda_report(2).recursion_ratio == Fraction(3, 4)
    assert lambda_report(2).u == Fraction(3, 4)
    assert lambda_report(3).recursion_ratio == Fraction(28, 33)


@pytest.mark.parametrize("n", range(2, 13))
def test_lambda_recursion_holds(n):
    rep = lambda_report(n)
    assert rep.recursion_ratio <= 1 and rep.u <= 1


def test_sigma_values():
    assert sigma(2) == Fraction(55, 6)
    assert sigma(3) == Fraction(17671, 42)
    assert to_decimal(sigma(3), 4) == Decimal("420.7")
    assert sigma(4) == Fraction(1805, 1806) * build_family("fano-min", 4).a_last


@pytest.mark.parametrize("n", range(2, 9))
def test_exceptional(n):
    cert = certify_exceptional(n)
    assert cert.overall and cert.sigma > 1
    assert all(line.passed for line in cert.ledger)


@pytest.mark.parametrize("n", range(2, 13))
def test_witness_consistency(n):
    cert = certify_exceptional(n)
    fermat = fermat_lct([sylvester(i) for i in range(n)])
    assert cert.witness_lct == fermat == Fraction(sylvester(n) - 2, sylvester(n) - 1)
    assert cert.sigma == fermat * build_family("fano-min", n).a_last


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_even_normalization_is_exact(n):
    assert certify_exceptional(n).line("E4").lhs == 1


def test_even_spot_value():
    cert = certify_exceptional(2)
    assert cert.line("E3").lhs / cert.sigma == Fraction(441, 440)


def test_odd_spot_values():
    cert = certify_exceptional(3)
    assert to_decimal(cert.line("O3").lhs, 6) == Decimal("16026.4")
    assert to_decimal(cert.line("O5").lhs, 5) == Decimal("1803.0")
    assert to_decimal(cert.line("O4").lhs, 2) == Decimal("0.17")


def test_odd_chart_value_at_five_follows_the_formula():
    # e sigma c_n / (c_{n-2} c_{n-1} a_n) with c_n = (s_n + 1)/4 evaluates to about 1/(4 s_3)
    value = certify_exceptional(5).line("O4").lhs
    assert to_decimal(value, 2) == Decimal("0.0060")
    assert Fraction(1, 2) < value * 4 * sylvester(3) < 2


def test_refuses_beyond_table_depth():
    with pytest.raises(ValueError):
        certify_exceptional(glct.MAX_DIM + 1)
    with pytest.raises(ValueError):
        certify_exceptional(1)


def test_ledger_json_has_exact_and_decimal_fields():
    obj = certify_exceptional(3).to_json()
    assert obj["parity"] == "odd" and obj["overall"] is True
    line = obj["ledger"][0]
    assert {"lhs", "lhs_decimal", "rhs", "rhs_decimal", "pass", "relation"} <= set(line)


@pytest.mark.parametrize("n", range(2, 9))
def test_decimal_renderings_round_trip(n):
    for line in certify_exceptional(n).ledger:
        for x in (line.lhs, line.rhs):
            d = to_decimal(x, 6)
            assert Decimal(display(x)) == d
            assert abs(Fraction(d) - x) <= Fraction(10) ** (d.adjusted() - 5) / 2


def test_weighted_mult_bound_examples():
    assert weighted_mult_lct_bound((2, 1, 1), 2, 1) == Fraction(1, 2)
    assert weighted_mult_lct_bound((3, 2, 1), 5, 1) == Fraction(1, 3)
    with pytest.raises(NonpositiveB):
        weighted_mult_lct_bound((2, 1, 1), 4, 1)


def test_jk_bound_examples():
    assert jk_mult_bound(FANO2, 1, DEG2, avoid_last=True) == Fraction(3, 49)
    assert jk_mult_bound((2, 1), 0, 1) == 2
    assert jk_mult_bound((5, 3, 2), 1, Fraction(1, 30), avoid_last=True) == Fraction(1, 3)


def test_someweights_examples():
    assert someweights_bound(FANO2, DEG2) == Fraction(1, 2891)
    assert someweights_bound((4, 3, 1), 0) == 0
    assert someweights_bound((1, 1, 7), 2) == 14


@given(st.integers(2, 12))
def test_sigma_grows_like_quarter_square(n):
    s = sylvester(n)
    assert Fraction(1, 2) < sigma(n) / (Fraction(s * s) / 4) < 2
