from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wpsklt.oracles import fm_max_slack
from wpsklt.polyhedra import (
    CanonicalVerdict,
    ExponentSet,
    InteriorCertificate,
    LPStatus,
    NormalityNotCertified,
    canonical_newton,
    certificate_from_witness,
    interior_point_test,
    linprog_max,
    minimal_points,
    normality_pairs_check,
    verify_certificate,
)

CHART = [(2, 0, 0), (0, 3, 0), (0, 0, 7), (0, 1, 1)]


def exponent_sets(max_dim=3, max_entry=6, max_points=6):
    return st.integers(1, max_dim).flatmap(lambda k: st.lists(
        st.tuples(*[st.integers(0, max_entry)] * k), min_size=1, max_size=max_points))


def test_linprog_basic():
    # max x + y, x + 2y <= 4, 3x + y <= 6
    res = linprog_max([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert res.status is LPStatus.OPTIMAL and res.value == Fraction(14, 5)
    assert linprog_max([1], [[-1]], [0]).status is LPStatus.UNBOUNDED
    assert linprog_max([1], A_eq=[[1], [1]], b_eq=[1, 2]).status is LPStatus.INFEASIBLE


def test_linprog_redundant_equalities():
    res = linprog_max([1, 0], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert res.status is LPStatus.OPTIMAL and res.value == 1


def test_chart_example_interior():
    cert = interior_point_test(CHART)
    assert cert is not None and verify_certificate(CHART, cert)
    witness = certificate_from_witness(CHART, {(2, 0, 0): Fraction(5, 12), (0, 3, 0): Fraction(1, 6),
                                               (0, 1, 1): Fraction(5, 12)})
    assert witness.combination() == (Fraction(5, 6), Fraction(11, 12), Fraction(5, 12))
    assert witness.slack == Fraction(1, 12)


def test_boundary_is_not_interior():
    assert interior_point_test([(2, 0), (0, 2)]) is None
    assert interior_point_test([(1, 0), (0, 1)]) is not None


def test_normality_pairs():
    assert normality_pairs_check(CHART)
    assert not normality_pairs_check([(1, 1)])
    # two variables: the pair condition would need a constant monomial
    assert not normality_pairs_check([(2, 0), (0, 2)])


def test_canonical_newton_verdicts():
    assert canonical_newton(CHART).verdict is CanonicalVerdict.CERTIFIED_CANONICAL
    assert canonical_newton([(2, 0), (0, 2)], assume_normal=True).verdict is CanonicalVerdict.CERTIFIED_NOT_CANONICAL
    assert canonical_newton([(1, 0), (0, 1)], assume_normal=True).verdict is CanonicalVerdict.CERTIFIED_CANONICAL
    assert canonical_newton([(1, 0, 0), (0, 0, 0)], assume_normal=True).verdict is CanonicalVerdict.CERTIFIED_CANONICAL
    with pytest.raises(NormalityNotCertified):
        canonical_newton([(2, 0), (0, 2)])


def test_degree_one_monomial_blocks_the_converse():
    # x_0 alone: (1,1,1) is on the boundary, but a degree-one monomial leaves the verdict open
    assert canonical_newton([(1, 0, 0)], assume_normal=True).verdict is CanonicalVerdict.NOT_CERTIFIED
    assert canonical_newton([(2, 0, 0)], assume_normal=True).verdict is CanonicalVerdict.CERTIFIED_NOT_CANONICAL


def test_tampered_certificate_is_rejected():
    cert = interior_point_test(CHART)
    bad_sum = InteriorCertificate(cert.target, tuple((v, 2 * l) for v, l in cert.coefficients), cert.slack)
    assert not verify_certificate(CHART, bad_sum)
    bad_slack = InteriorCertificate(cert.target, cert.coefficients, cert.slack + 1)
    assert not verify_certificate(CHART, bad_slack)
    foreign = InteriorCertificate(cert.target, (((0, 0, 0), Fraction(1)),), Fraction(1))
    assert not verify_certificate(CHART, foreign)


@given(exponent_sets())
def test_lp_matches_fourier_motzkin(points):
    cert = interior_point_test(points)
    slack = fm_max_slack(points)
    expected = slack if slack is not None and slack > 0 else None
    assert (cert.slack if cert else None) == expected
    if cert is not None:
        assert verify_certificate(points, cert)


@given(exponent_sets())
def test_pruning_does_not_change_result(points):
    a, b = interior_point_test(points, prune=True), interior_point_test(points, prune=False)
    assert (a is None) == (b is None)
    if a is not None:
        assert a.slack == b.slack


@given(exponent_sets(max_points=5), st.integers(1, 5))
def test_scaling_invariance(points, scale):
    scaled = [tuple(scale * x for x in p) for p in points]
    target = [scale] * len(points[0])
    assert (interior_point_test(points) is None) == (interior_point_test(scaled, target) is None)


@given(exponent_sets())
def test_minimal_points_are_an_antichain(points):
    kept = minimal_points(points)
    for p in kept:
        for q in kept:
            assert p == q or not all(x <= y for x, y in zip(p, q))
    for p in points:
        assert any(all(x <= y for x, y in zip(q, p)) for q in kept)


def test_exponent_set_json():
    es = ExponentSet.of(CHART)
    assert ExponentSet.from_json(es.to_json()) == es
    with pytest.raises(ValueError):
        ExponentSet(2, ((1, 2, 3),))
