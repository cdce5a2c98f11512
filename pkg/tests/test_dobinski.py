from fractions import Fraction

import mpmath
import pytest


def _within_tail(result):
    """error <= tail_bound + 2^(-bits/2), compared at the result's working precision."""
    with mpmath.workprec(result.precision_bits):
        return result.error <= result.tail_bound + mpmath.mpf(2) ** (-result.precision_bits // 2)


def test_trivial_series_sums_to_one():
    from lah_bell.dobinski import dobinski_eval

    result = dobinski_eval(0, 0, 1)
    assert result.exact_reference == 1
    assert _within_tail(result)


def test_lah_bell_value():
    from lah_bell.dobinski import dobinski_eval

    result = dobinski_eval(2, 0, 1, eps="1e-20")
    assert result.exact_reference == 3
    assert result.tail_bound < mpmath.mpf("1e-20")
    assert result.error <= mpmath.mpf("1e-20")


def test_lambda_value():
    from lah_bell.dobinski import dobinski_eval

    result = dobinski_eval(2, 1, 1, lam="1/2", eps="1e-20")
    assert result.exact_reference == Fraction(11, 2)
    assert _within_tail(result)


def test_grid_within_tail_bound():
    from lah_bell.dobinski import dobinski_eval

    for n in (0, 1, 4, 10):
        for r in (0, 3):
            for x in ("1/2", "1", "2"):
                for lam in (None, "1", "1/2", "2"):
                    result = dobinski_eval(n, r, x, lam)
                    assert result.tail_bound < mpmath.mpf("1e-20")
                    assert _within_tail(result)
                    reach = Fraction(x) / min(Fraction(lam), 1) if lam else Fraction(x)
                    assert result.terms_used <= 50 * (reach + n + r + 10)


def test_doubling_precision_does_not_hurt():
    from lah_bell.dobinski import dobinski_eval

    low = dobinski_eval(5, 2, "1/2", "1/2", precision_bits=256)
    high = dobinski_eval(5, 2, "1/2", "1/2", precision_bits=512)
    with mpmath.workprec(1024):
        assert high.error <= low.error + mpmath.mpf(2) ** -200


def test_term_ratio_bound():
    from lah_bell.dobinski import dobinski_term, term_ratio_bound

    for k in range(1, 30):
        assert term_ratio_bound(0, 0, 1, None, k) == Fraction(1, k + 1)
    assert term_ratio_bound(2, 0, 1, None, 10) >= Fraction(11 * 12, 10 * 11) / 11
    lam, x = Fraction(1, 2), Fraction(1)
    actual = dobinski_term(1, 1, x, lam, 21) / dobinski_term(1, 1, x, lam, 20)
    assert term_ratio_bound(1, 1, x, lam, 20) >= actual
    with pytest.raises(ValueError):
        term_ratio_bound(1, 1, 1, None, 0)


def test_rejects_values_outside_domain():
    from lah_bell.dobinski import dobinski_eval
    from lah_bell.errors import DomainError

    with pytest.raises(DomainError):
        dobinski_eval(2, 0, 0)
    with pytest.raises(DomainError):
        dobinski_eval(2, 0, -1)
    with pytest.raises(DomainError):
        dobinski_eval(2, 0, 1, lam=0)
    with pytest.raises(DomainError):
        dobinski_eval(2, 0, 1, lam="-1/2")
    with pytest.raises(ValueError):
        dobinski_eval(2, 0, 1, precision_bits=64)
    with pytest.raises(ValueError):
        dobinski_eval(2, 0, 1, eps="-1")


def test_bell_dobinski():
    from lah_bell.dobinski import bell_dobinski_eval

    for n, expected in ((0, 1), (1, 1), (3, 5), (5, 52)):
        result = bell_dobinski_eval(n, 1)
        assert result.exact_reference == expected
        assert _within_tail(result)
    assert bell_dobinski_eval(2, 2).exact_reference == 6


def test_dobinski_checks():
    from lah_bell.dobinski import bell_dobinski_check, dobinski_check

    for lam in (None, "1", "1/2", "2"):
        report = dobinski_check(3, 1, "2", lam)
        assert report.passed, report.first_failure()
    assert bell_dobinski_check(4, "1/2").passed
