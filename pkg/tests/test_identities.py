from fractions import Fraction as F

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qturan.identities import (
    euler_exp,
    euler_inv,
    inverse_poch_series,
    verify_heine_gauss,
    verify_q_binomial,
    verify_symmetric_vandermonde,
)
from qturan.qcore import DomainError, q_pochhammer

unit = st.fractions(min_value=F(1, 30), max_value=F(29, 30), max_denominator=30)


def test_euler_product_and_inverse_cancel():
    q = F(1, 3)
    prod = euler_exp(1, q, 12) * euler_inv(q, 12)
    assert list(prod.coeffs) == [1] + [0] * 12


@pytest.mark.parametrize("k", [0, 1, 3])
def test_inverse_poch_series(k):
    # multiply back by (cz;q)_k and expect 1
    q, c = F(1, 2), F(2, 3)
    s = inverse_poch_series(c, q, k, 10)
    poly = [F(1)]
    for j in range(k):
        root = -c * q**j
        poly = [a + root * b for a, b in zip(poly + [0], [0] + poly)]
    poly = poly + [0] * (11 - len(poly))
    back = [sum(poly[i] * s.coeffs[n - i] for i in range(n + 1)) for n in range(11)]
    assert back == [1] + [0] * 10


@settings(max_examples=30, deadline=None)
@given(unit, unit)
def test_q_binomial_exact(a, q):
    r = verify_q_binomial(a, q, 20)
    assert r.passed and r.residual == 0


@settings(max_examples=30, deadline=None)
@given(unit, unit, unit)
def test_symmetric_vandermonde_exact(a, b, q):
    r = verify_symmetric_vandermonde(a, b, q, 16)
    assert r.passed and r.residual == 0


def test_vandermonde_detects_wrong_lower_expansion():
    # expanding 1/(abz;q)_k with (abq^k;q)_n/(q;q)_n instead breaks the identity
    from qturan.series import HypergeometricParams, TruncatedSeries, rphis

    a, b, q, order = F(1, 3), F(1, 5), F(1, 2), 6
    phi = lambda c: rphis(HypergeometricParams((c,), (), q), order)  # noqa: E731
    wrong = TruncatedSeries([0] * (order + 1))
    for k in range(order + 1):
        coef = q_pochhammer(a, q, k) * q_pochhammer(b, q, k) / q_pochhammer(q, q, k)
        inv = [q_pochhammer(a * b * q**k, q, n) / q_pochhammer(q, q, n) * (a * b) ** n for n in range(order + 1 - k)]
        wrong = wrong + TruncatedSeries([0] * k + [coef * c for c in inv])
    diff = phi(a) * phi(b) - phi(a * b) * wrong
    assert any(c != 0 for c in diff.coeffs)


@pytest.mark.parametrize("a,b,c,q", [(F(1, 2), F(1, 3), F(1, 12), F(1, 2)), (F(3, 4), F(2, 3), F(1, 5), F(9, 10))])
def test_heine_gauss_enclosure(a, b, c, q):
    r = verify_heine_gauss(a, b, c, q, prec=160)
    assert r.passed and r.residual <= r.bound
    with mp.workdps(60):
        ref = oracles.heine_rhs(a, b, c, q)
        assert mp.mpf(r.rhs.a) <= ref <= mp.mpf(r.rhs.b)


def test_heine_gauss_domain():
    with pytest.raises(DomainError):
        verify_heine_gauss(F(1, 2), F(1, 2), F(1, 2), F(1, 2))
