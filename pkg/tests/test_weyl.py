import pytest
from hypothesis import given, settings, strategies as st

ops = st.dictionaries(
    keys=st.tuples(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4)),
    values=st.integers(min_value=-3, max_value=3),
    max_size=4,
)
polys = st.lists(st.integers(min_value=-3, max_value=3), max_size=5)


def test_commutator_basics():
    from lah_bell.weyl import WeylOp

    d, x = WeylOp.d(), WeylOp.x()
    assert d * x == x * d + WeylOp.identity()
    assert d * x - x * d == WeylOp.identity()
    assert str(WeylOp({(2, 2): 1})) == "X^2*D^2"
    assert str(WeylOp()) == "0"
    assert WeylOp({(1, 0): 0}) == WeylOp()


def test_op_rising_small():
    from lah_bell.weyl import WeylOp, op_rising

    assert op_rising(0, 0) == WeylOp.identity()
    assert op_rising(0, 2) == WeylOp({(2, 2): 1, (1, 1): 2})
    with pytest.raises(ValueError):
        op_rising(-1, 2)


def test_reordering_matches_rewriting():
    from lah_bell.weyl import reordering_check

    report = reordering_check(5)
    assert report.passed, report.first_failure()
    assert report.checked == 36


def test_commutation():
    from lah_bell.errors import DomainError
    from lah_bell.weyl import commutation_check

    for k in range(1, 7):
        assert commutation_check(k).passed
    with pytest.raises(DomainError):
        commutation_check(0)


def test_expansion_and_actions():
    from lah_bell.weyl import exp_action_check, expansion_check, monomial_action_check

    for r in range(4):
        for n in range(7):
            assert expansion_check(n, r).passed
            assert exp_action_check(n, r).passed
            for m in range(5):
                assert monomial_action_check(n, m, r).passed


def test_shift_identity():
    from lah_bell.errors import DomainError
    from lah_bell.weyl import shift_identity_check

    for r in range(3):
        for n in range(4):
            for m in range(4):
                for k in range(1, 4):
                    report = shift_identity_check(n, m, r, k)
                    assert report.passed, (n, m, r, k, report.first_failure())
    with pytest.raises(DomainError):
        shift_identity_check(2, 1, 0, 0)


def test_shift_identity_without_shift():
    from math import comb

    from lah_bell.exact import rising_factorial
    from lah_bell.weyl import WeylOp, op_rising

    # k = 0: ⟨XD+r+m⟩_n = Σ_l C(n,l)⟨XD+r⟩_l⟨m⟩_{n-l}
    for r in range(3):
        for n in range(5):
            for m in range(4):
                lhs = op_rising(r + m, n)
                assert lhs * WeylOp.x(0) == lhs
                total = WeylOp()
                for l in range(n + 1):
                    total = total + op_rising(r, l) * (comb(n, l) * rising_factorial(m, n - l))
                assert lhs == total, (n, m, r)


def test_operator_spivey():
    from lah_bell.weyl import operator_spivey_check

    for r in range(3):
        for n in range(4):
            for m in range(4):
                report = operator_spivey_check(n, m, r)
                assert report.passed, (n, m, r, report.first_failure())
                assert report.checked == 3


def test_apply_to_exp_gives_r_lah_bell():
    from lah_bell.poly.families import r_lah_bell_poly
    from lah_bell.weyl import apply_to_exp, op_rising

    assert apply_to_exp(op_rising(1, 2)) == r_lah_bell_poly(2, 1)
    assert apply_to_exp(op_rising(1, 2)).evaluate(1) == 7


@settings(max_examples=40, deadline=None)
@given(a=ops, b=ops)
def test_normal_product_matches_rewriting(a, b):
    from lah_bell.weyl import WeylOp, naive_mul, normal_mul

    assert normal_mul(WeylOp(a), WeylOp(b)) == naive_mul(WeylOp(a), WeylOp(b))


@settings(max_examples=40, deadline=None)
@given(a=ops, b=ops, c=ops)
def test_product_is_associative(a, b, c):
    from lah_bell.weyl import WeylOp

    a, b, c = WeylOp(a), WeylOp(b), WeylOp(c)
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(a=ops, b=ops, p=polys)
def test_action_is_a_homomorphism(a, b, p):
    from lah_bell.poly.dense import Poly
    from lah_bell.weyl import WeylOp, apply_to_poly

    a, b, p = WeylOp(a), WeylOp(b), Poly(p)
    assert apply_to_poly(a * b, p) == apply_to_poly(a, apply_to_poly(b, p))
