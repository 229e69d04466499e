from decimal import Decimal
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from wpsklt.exactmath import (
    SylvesterTable,
    display,
    exact_div,
    int_from_json,
    int_to_json,
    pairwise_coprime,
    rat_from_json,
    rat_to_json,
    sylvester,
    sylvester_identities,
    to_decimal,
)


@pytest.mark.parametrize("i, value", [(0, 2), (1, 3), (2, 7), (3, 43), (4, 1807), (5, 3263443)])
def test_sylvester_values(i, value):
    assert sylvester(i) == value


def test_recurrence_and_size():
    for i in range(12):
        assert sylvester(i + 1) == sylvester(i) * (sylvester(i) - 1) + 1
    # s_12 has 834 digits and its square stays exact
    s12 = sylvester(12)
    assert len(str(s12)) == 834
    assert (s12 * s12) // s12 == s12


def test_pairwise_coprime_prefix():
    assert pairwise_coprime([sylvester(i) for i in range(13)])
    assert not pairwise_coprime([6, 9, 5])


@pytest.mark.parametrize("n", range(1, 13))
def test_identities(n):
    assert sylvester_identities(n).ok


def test_identity_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == 1 - Fraction(1, 6)
    assert sylvester(4) > 2 ** 8
    with pytest.raises(ValueError):
        sylvester_identities(0)


def test_table_extends_on_demand():
    t = SylvesterTable(depth=2)
    assert len(t) == 3
    assert t[6] == sylvester(6)
    assert t.prefix(4) == (2, 3, 7, 43)
    with pytest.raises(IndexError):
        t[-1]


def test_exact_div():
    assert exact_div(438, 6) == 73
    with pytest.raises(ArithmeticError):
        exact_div(7, 2, "x")


@pytest.mark.parametrize("x, digits, expected", [
    (Fraction(1, 48983), 6, Decimal("0.0000204152")),
    (Fraction(2, 3), 3, Decimal("0.667")),
    (Fraction(5, 2), 1, Decimal("2")),      # half-even
    (Fraction(7, 2), 1, Decimal("4")),
    (Fraction(-1, 8), 2, Decimal("-0.12")),
    (Fraction(9999999, 1), 6, Decimal("1.00000E+7")),
    (0, 6, Decimal(0)),
])
def test_to_decimal(x, digits, expected):
    assert to_decimal(x, digits) == expected


def test_display():
    assert display(Fraction(1, 48983)) == "2.04152E-5"
    assert display(0) == "0"


@given(st.fractions(min_value=Fraction(-10 ** 30), max_value=Fraction(10 ** 30)).filter(lambda x: x != 0),
       st.integers(1, 12))
def test_to_decimal_within_half_ulp(x, digits):
    d = to_decimal(x, digits)
    exp = d.adjusted() - (digits - 1)
    assert abs(Fraction(d) - x) <= Fraction(10) ** exp / 2


@given(st.integers(-10 ** 1300, 10 ** 1300))
def test_int_json_round_trip(n):
    assert int_from_json(int_to_json(n)) == n


@given(st.fractions())
def test_rat_json_round_trip(x):
    obj = rat_to_json(x)
    assert rat_from_json(obj) == x
    assert gcd(int(obj["num"]), int(obj["den"])) == 1 and int(obj["den"]) > 0


def test_int_from_json_rejects_bool():
    with pytest.raises(ValueError):
        int_from_json(True)


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert Fraction(a.numerator, a.denominator) == a
