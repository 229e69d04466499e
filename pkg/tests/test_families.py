from fractions import Fraction

import pytest

from wpsklt.exactmath import sylvester
from wpsklt.families import (
    PRINTED_VALUES,
    DimensionOutOfRange,
    FamilyKind,
    build_family,
    closed_form_volume,
    decimal_matches,
    validate_family,
)

ALL_VALID = [(k, n) for k in FamilyKind for n in range(2, 11) if k.valid_dimension(n)]


@pytest.mark.parametrize("kind, n", ALL_VALID, ids=lambda v: getattr(v, "value", v))
def test_validate_all_pass(kind, n):
    rep = validate_family(build_family(kind, n))
    assert rep.ok, rep.render()


def test_ample_min_surface():
    fs = build_family(FamilyKind.AMPLE_MIN, 2)
    assert fs.weights == (219, 146, 61, 11) and fs.degree == 438 and fs.x == 73
    assert fs.volume == Fraction(1, 48983)


def test_fano_min_threefold():
    fs = build_family("fano-min", 3)
    assert fs.weights == (379239, 252826, 108354, 17629, 431) and fs.degree == 758478


def test_fano_bottom_fourfold():
    assert build_family(FamilyKind.FANO_BOTTOM, 4).a_last == 1799223
    assert build_family(FamilyKind.KAMPLE_BOTTOM, 4).a_last == 1793201


def test_ample_min_threefold_volume():
    fs = build_family(FamilyKind.AMPLE_MIN, 3)
    assert fs.volume == Fraction(1, 42 * 18145 ** 2 * 17713 * 431)
    assert decimal_matches(fs.volume, "9.5E-18")
    assert fs.volume < Fraction(1, 2 ** 8)


@pytest.mark.parametrize("kind, n", [(FamilyKind.AMPLE_MIN, 1), (FamilyKind.FANO_BOTTOM, 2),
                                     (FamilyKind.KAMPLE_BOTTOM, 5), (FamilyKind.FANO_MIN, 0)])
def test_out_of_range(kind, n):
    with pytest.raises(DimensionOutOfRange):
        build_family(kind, n)


@pytest.mark.parametrize("n", range(2, 11))
def test_ample_and_fano_min_differ_by_sign(n):
    a, f = build_family("ample-min", n), build_family("fano-min", n)
    s = sylvester(n)
    assert a.a_last == f.a_last
    assert a.a_n - f.a_n == 2 * (s - 1)
    assert a.weights[:n] != f.weights[:n]


@pytest.mark.parametrize("kind", [FamilyKind.AMPLE_MIN, FamilyKind.FANO_MIN])
@pytest.mark.parametrize("n", range(3, 9))
def test_volume_asymptotic_ratio(kind, n):
    fs = build_family(kind, n)
    ratio = fs.volume * Fraction(sylvester(n)) ** (4 * n) / 2 ** (2 * n + 2)
    assert Fraction(1, 2) < ratio < 2
    assert closed_form_volume(fs) == fs.volume


@pytest.mark.parametrize("kind", [FamilyKind.FANO_BOTTOM, FamilyKind.KAMPLE_BOTTOM])
@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_bottom_parities(kind, n):
    fs = build_family(kind, n)
    assert fs.a_n % 2 == 1 and fs.a_last % 2 == 1
    if kind is FamilyKind.FANO_BOTTOM:
        assert fs.a_last % 3 == 0 and fs.a_n % 3 == 2


def test_printed_values_table_is_consistent():
    for (kind, n), vals in PRINTED_VALUES.items():
        fs = build_family(kind, n)
        if "weights" in vals:
            assert fs.weights == vals["weights"]
        if "volume" in vals:
            assert fs.volume == vals["volume"]
        if "volume_approx" in vals:
            assert decimal_matches(fs.volume, vals["volume_approx"])


def test_enumeration_skipped_above_four():
    rep = validate_family(build_family("ample-min", 5))
    assert rep["listed monomials are all monomials of degree d"].passed is None


def test_json_carries_bigints_as_strings():
    obj = build_family("fano-bottom", 6).to_json()
    assert all(isinstance(w, str) for w in obj["weights"])
    assert obj["kind"] == "fano-bottom" and obj["c"] is not None
