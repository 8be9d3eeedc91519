"""Coefficientwise oracles for the q-identities behind the main theorems.

* q-binomial theorem: ``1phi0(a;-;z) = (az;q)_inf/(z;q)_inf``;
* symmetric q-Vandermonde:
  ``1phi0(a;-;z) 1phi0(b;-;z) = 1phi0(ab;-;z) 2phi1(a,b;abz;q;z)``;
* Heine's q-Gauss sum ``2phi1(a,b;c;q;c/ab) = (c/a,c/b;q)_inf/(c,c/ab;q)_inf``.

The first two are compared exactly as truncated power series in ``z``; the
last one is a numerical identity checked with interval enclosures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .qcore import (
    DomainError,
    Scalar,
    _check_q,
    _qpoch_inf_enclosure,
    is_exact,
    q_pochhammer,
    to_interval,
    working_precision,
)
from .series import HypergeometricParams, TruncatedSeries, rphis


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    residual: Scalar
    order: int | None = None
    bound: Scalar | None = None
    lhs: object = None
    rhs: object = None


def _max_abs(values) -> Scalar:
    vals = list(values)
    if all(is_exact(v) for v in vals):
        return max((abs(v) for v in vals), default=Fraction(0))
    return max((float(abs(to_interval(v)).b) for v in vals), default=0.0)


def euler_exp(a: Scalar, q: Scalar, order: int) -> TruncatedSeries:
    """``(az;q)_inf = sum (-1)^n q^(n(n-1)/2) a^n z^n/(q;q)_n`` in ``z``."""
    out, cur = [], Fraction(1) if is_exact(a) and is_exact(q) else iv.mpf(1)
    for n in range(order + 1):
        out.append(cur)
        cur = -cur * a * q**n / (1 - q ** (n + 1))
    return TruncatedSeries(out)


def euler_inv(q: Scalar, order: int, scale: Scalar = 1) -> TruncatedSeries:
    """``1/(scale z;q)_inf = sum scale^n z^n/(q;q)_n`` in ``z``."""
    out, cur = [], Fraction(1) if is_exact(q) and is_exact(scale) else iv.mpf(1)
    for n in range(order + 1):
        out.append(cur)
        cur = cur * scale / (1 - q ** (n + 1))
    return TruncatedSeries(out)


def _series_residual(name, lhs: TruncatedSeries, rhs: TruncatedSeries) -> IdentityCheck:
    diff = lhs - rhs
    res = _max_abs(diff)
    if is_exact(res):
        passed = res == 0
    else:
        passed = all(not (to_interval(d) > 0 or to_interval(d) < 0) for d in diff)
    return IdentityCheck(name, passed, res, lhs.order, None, lhs, rhs)


def verify_q_binomial(a: Scalar, q: Scalar, order: int = 20) -> IdentityCheck:
    """Compare ``sum (a;q)_n/(q;q)_n z^n`` with Euler's two product expansions."""
    _check_q(q)
    lhs = rphis(HypergeometricParams((a,), (), q), order)
    rhs = euler_exp(a, q, order) * euler_inv(q, order)
    return _series_residual("q_binomial", lhs, rhs)


def inverse_poch_series(x_coeff: Scalar, q: Scalar, k: int, order: int) -> TruncatedSeries:
    """``1/(x_coeff z;q)_k`` as a series in ``z``.

    Uses ``1/(y;q)_k = sum_n (q^k;q)_n/(q;q)_n y^n`` (q-binomial with ``a = q^k``).
    """
    out, cur = [], Fraction(1) if is_exact(q) and is_exact(x_coeff) else iv.mpf(1)
    qk = q**k
    for n in range(order + 1):
        out.append(cur)
        cur = cur * (1 - qk * q**n) * x_coeff / (1 - q ** (n + 1))
    return TruncatedSeries(out)


def vandermonde_2phi1(a: Scalar, b: Scalar, q: Scalar, order: int) -> TruncatedSeries:
    """``2phi1(a,b;abz;q;z)`` expanded in ``z`` with the lower slot expanded too."""
    ab = a * b
    total = TruncatedSeries([0 * ab] * (order + 1))
    for k in range(order + 1):
        coef = q_pochhammer(a, q, k) * q_pochhammer(b, q, k) / q_pochhammer(q, q, k)
        inv = inverse_poch_series(ab, q, k, order - k).coeffs
        shifted = [0 * ab] * k + [coef * c for c in inv]
        total = total + TruncatedSeries(shifted)
    return total


def verify_symmetric_vandermonde(a: Scalar, b: Scalar, q: Scalar, order: int = 16) -> IdentityCheck:
    _check_q(q)
    phi = lambda c: rphis(HypergeometricParams((c,), (), q), order)  # noqa: E731
    lhs = phi(a) * phi(b)
    rhs = phi(a * b) * vandermonde_2phi1(a, b, q, order)
    return _series_residual("symmetric_vandermonde", lhs, rhs)


def _2phi1_enclosure(a, b, c, q, z, prec) -> tuple:
    """Rigorous enclosure of ``2phi1(a,b;c;q;z)`` for ``|z| < 1``."""
    ai, bi, ci, qi, zi = (to_interval(v) for v in (a, b, c, q, z))
    absz = float(abs(zi).b)
    qf = float(qi.b)
    # after n >= N every term ratio is at most rho_N < 1
    n_tail = 0
    while True:
        qn = qf**n_tail
        den = (1 - qf ** (n_tail + 1)) * (1 - float(abs(ci).b) * qn)
        if den > 0:
            rho = absz * (1 + float(abs(ai).b) * qn) * (1 + float(abs(bi).b) * qn) / den
            if rho < 1 and n_tail >= 8:
                break
        n_tail += 1
        if n_tail > 100_000:
            raise DomainError("tail bound does not converge")
    target = 2.0 ** (-(prec - 8))
    total, term, n = iv.mpf(0), iv.mpf(1), 0
    while True:
        total += term
        num = (1 - ai * qi**n) * (1 - bi * qi**n)
        den_i = (1 - qi ** (n + 1)) * (1 - ci * qi**n)
        term = term * num / den_i * zi
        n += 1
        if n >= n_tail:
            bound_rho = iv.mpf(absz) * (1 + abs(ai) * qi**n) * (1 + abs(bi) * qi**n) / (
                (1 - qi ** (n + 1)) * (1 - abs(ci) * qi**n)
            )
            tail = abs(term) / (1 - bound_rho)
            tail_b = float(tail.b)
            if tail_b <= target * max(1e-300, float(abs(total).b)) or tail_b < 2.0 ** (-prec):
                return total + iv.mpf([-tail.b, tail.b]), n


def verify_heine_gauss(a: Scalar, b: Scalar, c: Scalar, q: Scalar, *, prec: int | None = None) -> IdentityCheck:
    """Truncated series plus certified tail against the product quotient.

    Passes when the enclosure of ``lhs - rhs`` contains zero; ``bound`` is
    its width, ``residual`` the distance between the midpoints.
    """
    _check_q(q)
    if a == 0 or b == 0:
        raise DomainError("a and b must be nonzero")
    z = c / (a * b)
    if not abs(z) < 1:
        raise DomainError(f"q-Gauss series diverges: |c/(ab)| = {z} >= 1")
    with working_precision(prec) as p:
        lhs, n = _2phi1_enclosure(a, b, c, q, z, p)
        eps = 2.0 ** (-p)
        qi = to_interval(q)
        num = _qpoch_inf_enclosure(to_interval(c) / to_interval(a), qi, eps) * _qpoch_inf_enclosure(
            to_interval(c) / to_interval(b), qi, eps
        )
        den = _qpoch_inf_enclosure(c, qi, eps) * _qpoch_inf_enclosure(z, qi, eps)
        if den.a <= 0 <= den.b:
            raise DomainError("(c, c/ab; q)_inf vanishes")
        rhs = num / den
        diff = lhs - rhs
        passed = not (diff > 0 or diff < 0)
        residual = abs(float(lhs.mid) - float(rhs.mid))
        return IdentityCheck("heine_gauss", passed, residual, n, float(diff.delta), lhs, rhs)
