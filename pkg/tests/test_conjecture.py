"""Recurrence, bounds and conjecture-verification tests.

f(2..10) are fixed initial values; f(11) = 148 was derived by evaluating
the recurrence by hand and is independently confirmed against exhaustive
search in the acceptance suite.
"""

from fractions import Fraction

import pytest

from floorsum import (
    DivisibilityError,
    DomainError,
    Instance,
    SearchSpace,
    eval_closed,
    eval_direct,
    extremes,
    f_sequence,
    f_value,
    known_bounds,
    n4_partial_lower_identity,
    predicted_extremes,
    proven_attainment_site,
    recurrence_residual,
    verify_bounds,
    verify_conjecture,
)

INITIAL = [0, Fraction(1, 3), -1, 2, -3, 8, -18, 36, -65]


# -------------------------------------------------------------- recurrence


def test_initial_values_verbatim():
    assert f_sequence(10) == [Fraction(v) for v in INITIAL]


def test_first_computed_value():
    assert f_value(11) == 148


def test_recurrence_residual_is_identically_zero():
    seq = f_sequence(30)
    for n in range(11, 31):
        assert recurrence_residual(seq, n) == 0
    with pytest.raises(DomainError):
        recurrence_residual(seq, 10)


def test_sign_pattern_observed_through_30():
    seq = f_sequence(30)
    for n in range(4, 31):
        value = seq[n - 2]
        assert (value > 0) == (n % 2 == 1), (n, value)


def test_integrality_observed_with_exceptions():
    # f(n) is an integer for 4 <= n <= 30 except n = 15 and n = 27
    # (denominator 3 there; the divisor those arities require is a
    # multiple of 3, so m*f(n) stays integral wherever it is predicted)
    seq = f_sequence(30)
    for n in range(4, 31):
        expected = 3 if n in (15, 27) else 1
        assert seq[n - 2].denominator == expected, (n, seq[n - 2])


def test_consistency_with_divisor_style_coefficients():
    # m*f(n) reproduces the divisor-form coefficients exactly:
    #   n=4: -3*floor(m/3), n=5: 6*floor(m/3) for 3 | m
    #   n=6: -9*floor(m/3) and -15*floor(m/5) for 15 | m
    #   n=7: 40*floor(m/5), n=8: -90*floor(m/5), n=9: 180*floor(m/5) for 5 | m
    for m in range(3, 31, 3):
        assert m * f_value(4) == -3 * (m // 3)
        assert m * f_value(5) == 6 * (m // 3)
    for m in (15, 30, 45):
        assert m * f_value(6) == -9 * (m // 3) == -15 * (m // 5)
    for m in range(5, 31, 5):
        assert m * f_value(7) == 40 * (m // 5)
        assert m * f_value(8) == -90 * (m // 5)
        assert m * f_value(9) == 180 * (m // 5)


def test_f_sequence_rejects_small_n():
    with pytest.raises(DomainError):
        f_sequence(1)


# ------------------------------------------------------------- known bounds


def test_known_bounds_examples():
    spec = known_bounds(2, 7)
    assert (spec.lower.value, spec.upper.value) == (0, 3)
    assert spec.lower.status == spec.upper.status == "proven"

    spec = known_bounds(3, 7)
    assert (spec.lower.value, spec.upper.value) == (-6, 2)

    spec = known_bounds(4, 9)
    assert (spec.lower.value, spec.upper.value) == (-9, 16)
    assert spec.lower.status == "conjectured" and spec.upper.status == "proven"

    spec = known_bounds(1, 10)
    assert (spec.lower.value, spec.upper.value) == (0, 9)


def test_known_bounds_for_larger_arities():
    spec = known_bounds(5, 6)
    assert spec.lower.value == -8 * 3 and spec.lower.status == "proven"
    assert spec.upper.value == 12 and spec.upper.status == "conjectured"
    assert spec.lower.note is None  # m even: the proven side needs no caveat

    spec = known_bounds(5, 7)  # 3 does not divide 7: conjectured side unavailable
    assert spec.upper.value is None
    assert "unavailable" in spec.upper.note
    assert spec.lower.value == -8 * 3 and "m is even" in spec.lower.note

    spec = known_bounds(6, 15)
    assert spec.lower.value == -45 and spec.lower.status == "conjectured"
    assert spec.upper.value == 16 * 7 and spec.upper.status == "proven"


# --------------------------------------------------------- predicted sites


def test_predicted_sites_two_site_arities():
    sites = predicted_extremes(5, 6)
    assert [(s.a, s.k, s.divisor) for s in sites] == [
        ((2, 2, 2, 2, 2), 1, 3),
        ((4, 4, 4, 4, 4), 3, 3),
    ]
    sites = predicted_extremes(4, 6)
    assert [(s.a[0], s.k) for s in sites] == [(2, 1), (4, 3)]
    sites = predicted_extremes(7, 10)
    assert [(s.a[0], s.k, s.divisor) for s in sites] == [(4, 3, 5), (6, 5, 5)]


def test_predicted_sites_four_site_arities():
    sites = predicted_extremes(6, 15)
    assert [(s.a[0], s.k, s.divisor) for s in sites] == [
        (5, 4, 3), (10, 9, 3), (6, 5, 5), (9, 8, 5),
    ]


def test_predicted_sites_divisibility_errors():
    with pytest.raises(DivisibilityError, match="multiple of 3"):
        predicted_extremes(5, 5)
    with pytest.raises(DivisibilityError, match="3"):
        predicted_extremes(6, 10)  # 5 | 10 but 3 does not divide 10
    with pytest.raises(DomainError):
        predicted_extremes(3, 6)


def test_proven_attainment_site():
    site = proven_attainment_site(4, 2)
    assert site.a == (1, 1, 1, 1) and site.k == 0
    assert eval_closed(Instance(2, site.a, site.k)) == 4  # +2^(n-2)*floor(m/2)
    site = proven_attainment_site(3, 4)
    assert eval_closed(Instance(4, site.a, site.k)) == -4
    site = proven_attainment_site(5, 4)
    assert eval_closed(Instance(4, site.a, site.k)) == -16
    with pytest.raises(DomainError):
        proven_attainment_site(4, 5)
    with pytest.raises(DomainError):
        proven_attainment_site(2, 4)


# ------------------------------------------------------------ verification


def test_verify_bounds_examples():
    report = verify_bounds(1, 10)
    assert report.lower_verdict == report.upper_verdict == "holds-with-equality"
    assert not report.proven_violation

    report = verify_bounds(4, 12)
    assert report.record.min_value == -12 and report.record.max_value == 24
    assert report.lower_verdict == "holds-with-equality"
    assert report.upper_verdict == "holds-with-equality"

    report = verify_bounds(2, 7)
    assert report.upper_verdict == "holds-with-equality"
    assert report.lower_verdict == "holds-with-equality"  # min 0 is attained

    report = verify_bounds(5, 7)  # conjectured upper unavailable at 3-free m
    assert report.upper_verdict == "unavailable"
    assert not report.proven_violation


def test_no_proven_bound_is_ever_exceeded():
    # any excess over a proven side would be a build-failing bug signal
    for n in range(1, 7):
        for m in range(1, 11):
            report = verify_bounds(n, m)
            assert not report.proven_violation, (n, m, report)
    # the proven +/-2^(n-2)*floor(m/2) sides also hold at odd m, where
    # the attainment theorem's even-m hypothesis is flagged in the note
    for n in (5, 6):
        for m in (7, 9, 11):
            report = verify_bounds(n, m)
            assert not report.proven_violation, (n, m, report)


def test_verify_bounds_rejects_mismatched_records():
    record = extremes(SearchSpace(2, 6))
    with pytest.raises(DomainError):
        verify_bounds(2, 7, record=record)
    partial = extremes(SearchSpace(2, 7, (0, 3)))
    with pytest.raises(DomainError):
        verify_bounds(2, 7, record=partial)


def test_verify_conjecture_part_one():
    report = verify_conjecture(5, 6)
    assert report.part == 1 and report.block_index == 1
    assert report.search_value == 12 and report.predicted_value == 12
    assert report.sites_exact is True and report.passed

    report = verify_conjecture(4, 9)
    assert report.search_value == -9
    assert report.sites_exact is True and report.passed

    report = verify_conjecture(7, 5)
    assert report.search_value == 40 and report.passed


def test_verify_conjecture_part_two_requires_containment_only():
    report = verify_conjecture(6, 15)
    assert report.part == 2
    assert report.search_value == -45 and report.passed
    assert report.sites_exact is None
    assert all(check.attains for check in report.site_checks)
    # "among other places": more attaining sites than the predicted four
    assert report.attaining_count > len(report.site_checks) == 4


def test_verify_conjecture_divisibility_error_propagates():
    with pytest.raises(DivisibilityError):
        verify_conjecture(5, 5)


# ----------------------------------------------------------- n=4 identity


def test_identity_known_values():
    report = n4_partial_lower_identity(6, (5, 4, 3, 2), 2)
    assert report.holds and report.bound_holds
    assert report.lhs == report.rhs
    # both sides independently against the oracle
    assert report.lhs == eval_direct(Instance(6, (5, 4, 3, 2), 2))
    t = report.terms
    assert t[0] == eval_direct(Instance(6, (12, 2), 2))
    assert t[4] == eval_direct(Instance(6, (5, 2), 2))

    report = n4_partial_lower_identity(6, (0, 0, 0, 0), 1)
    assert report.holds and report.lhs == 0 and all(v == 0 for v in report.terms)

    # the grouping distinguishes a4, but the identity holds in any order
    for order in ((2, 5, 1, 4), (4, 1, 5, 2), (1, 4, 2, 5)):
        report = n4_partial_lower_identity(6, order, 3)
        assert report.holds and report.lhs == eval_direct(Instance(6, order, 3))


def test_identity_exhaustive_small():
    for m in range(1, 11):
        for a1 in range(m):
            for a2 in range(a1 + 1):
                for a3 in range(a2 + 1):
                    for a4 in range(a3 + 1):
                        for k in range(m):
                            report = n4_partial_lower_identity(m, (a1, a2, a3, a4), k)
                            assert report.holds, (m, (a1, a2, a3, a4), k)
                            assert report.bound_holds, (m, (a1, a2, a3, a4), k)


def test_identity_rejects_wrong_shapes():
    with pytest.raises(DomainError):
        n4_partial_lower_identity(6, (1, 2, 3), 1)
    with pytest.raises(DomainError):
        n4_partial_lower_identity(6, (7, 2, 3, 1), 1)  # not bounded
