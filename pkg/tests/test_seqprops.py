from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import iv

from qturan.examples import named_base
from qturan.qcore import DomainError, Sign
from qturan.series import Family, FamilySpec
from qturan.seqprops import (
    Direction,
    check_cm_proxy,
    check_gg_three_point,
    gg_passes,
    is_doubly_positive,
)
from qturan.turanian import Quad, turanian_value

pos = st.fractions(min_value=F(1, 10), max_value=10, max_denominator=12)


@settings(max_examples=40, deadline=None)
@given(pos, pos, st.integers(3, 15))
def test_geometric_is_doubly_positive_with_equality(c, r, n):
    prof = is_doubly_positive([c * r**k for k in range(n)])
    assert prof.doubly_positive and prof.tight


def test_internal_zero_and_negative():
    prof = is_doubly_positive([F(1), F(0), F(1)])
    assert prof.internal_zeros == (1,) and not prof.doubly_positive
    assert not is_doubly_positive([F(1), F(-1), F(1)]).doubly_positive
    assert not is_doubly_positive([F(0), F(0)]).doubly_positive
    # leading and trailing zeros are allowed
    assert is_doubly_positive([F(0), F(1), F(1, 2), F(0)]).doubly_positive


def test_not_log_concave():
    assert not is_doubly_positive([F(1), F(1), F(2)]).log_concave


def test_interval_sequence_equality_case():
    # x^2 - x*x is an interval straddling 0: accepted within tolerance
    x = iv.mpf(1) / 3
    assert is_doubly_positive([x, x, x, x]).doubly_positive


@settings(max_examples=25, deadline=None)
@given(st.lists(st.fractions(min_value=F(1, 5), max_value=1, max_denominator=9), min_size=2, max_size=10))
def test_product_of_decreasing_ratios_is_log_concave(ratios):
    ratios = sorted(ratios, reverse=True)
    seq = [F(1)]
    for r in ratios:
        seq.append(seq[-1] * r)
    assert is_doubly_positive(seq).doubly_positive


def test_gg_three_point_exact():
    # f(x) = x^2 has equality in the multiplicative Jensen test
    v = check_gg_three_point(lambda x: x * x, F(1), F(1, 2), Direction.CONVEX)
    assert v.sign is Sign.ZERO and gg_passes(v)
    # positive coefficients make 1 + x strictly multiplicatively convex
    v = check_gg_three_point(lambda x: 1 + x, F(1), F(1, 2), Direction.CONVEX)
    assert v.sign is Sign.POSITIVE
    v = check_gg_three_point(lambda x: 1 + x, F(1), F(1, 2), Direction.CONCAVE)
    assert v.sign is Sign.NEGATIVE and not gg_passes(v)
    # x/(1+x) is strictly multiplicatively concave
    v = check_gg_three_point(lambda x: x / (1 + x), F(1), F(1, 2), Direction.CONCAVE)
    assert v.sign is Sign.POSITIVE
    with pytest.raises(DomainError):
        check_gg_three_point(lambda x: x, F(1), F(2), Direction.CONVEX)


def test_cm_proxy_exponential_and_failure():
    rep = check_cm_proxy(lambda y: F(1, 2) ** y, [F(k) for k in range(8)], 4)
    assert rep.passed and rep.label == "proxy"
    rep = check_cm_proxy(lambda y: y, [F(k) for k in range(1, 8)], 2)
    assert not rep.passed and rep.failures
    with pytest.raises(DomainError):
        check_cm_proxy(lambda y: y, [F(0), F(1), F(3)], 1)
    with pytest.raises(DomainError):
        check_cm_proxy(lambda y: y, [F(0), F(1)], 4)


@pytest.mark.parametrize("family,sign", [(Family.F, 1), (Family.H, -1)])
def test_turanian_multiplicative_convexity_exact(family, sign):
    q = F(1, 2)
    spec = FamilySpec(family, named_base("ones", q), q)
    quad = Quad.from_powers(q, F(1, 3), F(1, 2), F(1, 4))
    f = lambda x: sign * turanian_value(spec, quad, x)  # noqa: E731
    for x in (F(1, 8), F(1, 4), F(1, 2)):
        assert gg_passes(check_gg_three_point(f, x, F(3, 4), Direction.CONVEX))
