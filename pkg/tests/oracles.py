"""Independent reference computations in plain mpmath (no qturan imports).

Everything is evaluated straight from the defining series at high working
precision, so agreement with the library is a genuine cross-check.
"""

from __future__ import annotations

import mpmath as mp

DPS = 60


def _m(x):
    if hasattr(x, "numerator"):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def qpoch(a, q, n):
    out = mp.mpf(1)
    for k in range(n):
        out *= 1 - a * q**k
    return out


def rqgamma(z, q):
    """``1/Gamma_q(z)`` with zeros at the poles ``z = 0, -1, ...``."""
    if z <= 0 and mp.almosteq(z, mp.nint(z), 1e-40):
        return mp.mpf(0)
    return 1 / mp.qgamma(z, q)


def raw_coeffs(family: str, base, q, mu, order):
    """Unnormalized coefficients of f, d, g or h at parameter ``mu``."""
    with mp.workdps(DPS):
        return _raw_coeffs(family, base, _m(q), _m(mu), order)


def _raw_coeffs(family, base, q, mu, order):
    a = q**mu
    out = []
    for n in range(order + 1):
        b = _m(base(n))
        if family == "F":
            out.append(b * qpoch(a, q, n) / qpoch(q, q, n))
        elif family == "D":
            out.append(b * mp.qgamma(mu + n, q))
        elif family == "G":
            out.append(b * rqgamma(mu + n, q))
        elif family == "H":
            out.append(b / qpoch(a, q, n))
        else:
            raise ValueError(family)
    return out


def raw_delta(family, base, q, mu, alpha, beta, order):
    """Coefficients of ``y(mu+a)y(mu+b) - y(mu)y(mu+a+b)`` from the definitions."""
    with mp.workdps(DPS):
        mu, alpha, beta = _m(mu), _m(alpha), _m(beta)
        c0 = raw_coeffs(family, base, q, mu, order)
        c1 = raw_coeffs(family, base, q, mu + alpha, order)
        c2 = raw_coeffs(family, base, q, mu + beta, order)
        c3 = raw_coeffs(family, base, q, mu + alpha + beta, order)
        return [
            mp.fsum(c1[k] * c2[m - k] - c0[k] * c3[m - k] for k in range(m + 1))
            for m in range(order + 1)
        ]


def raw_value(family, base, q, mu, x, order=400):
    with mp.workdps(DPS):
        return mp.fsum(c * _m(x) ** n for n, c in enumerate(raw_coeffs(family, base, q, mu, order)))


def qgamma(z, q):
    with mp.workdps(DPS):
        return mp.qgamma(_m(z), _m(q))


def qpoch_inf(a, q):
    with mp.workdps(DPS):
        a, q = _m(a), _m(q)
        out, term = mp.mpf(1), a
        while abs(term) > mp.mpf(10) ** (-DPS - 5):
            out *= 1 - term
            term *= q
        return out


def q_bessel(j, nu, y, q, terms=400):
    with mp.workdps(DPS):
        q, nu, y = _m(q), _m(nu), _m(y)
        s = mp.mpf(0)
        for n in range(terms):
            w = q ** (n * n + n * nu) if j == 2 else 1
            s += w * (y / 2) ** (2 * n) / ((1 - q) ** n * qpoch(q, q, n)) * rqgamma(nu + n + 1, q)
        return (y / 2) ** nu / (1 - q) ** nu * s


def heine_lhs(a, b, c, q, terms=4000):
    with mp.workdps(DPS):
        a, b, c, q = map(_m, (a, b, c, q))
        z = c / (a * b)
        return mp.nsum(lambda n: qpoch(a, q, int(n)) * qpoch(b, q, int(n)) / (qpoch(c, q, int(n)) * qpoch(q, q, int(n))) * z**n, [0, mp.inf])


def heine_rhs(a, b, c, q):
    with mp.workdps(DPS):
        a, b, c, q = map(_m, (a, b, c, q))
        return mp.qp(c / a, q) * mp.qp(c / b, q) / (mp.qp(c, q) * mp.qp(c / (a * b), q))


def mid(x) -> mp.mpf:
    """Midpoint of an interval (or the value itself) as an mpf."""
    if hasattr(x, "a") and hasattr(x, "b"):
        with mp.workdps(DPS):
            return (mp.mpf(x.a) + mp.mpf(x.b)) / 2
    return _m(x)
