"""Ready-made family instances from basic hypergeometric functions.

Every example maps to one of the four families with a fixed base sequence.
Parameters are passed as exact rationals when possible; exponent parameters
(``alphas``, ``betas``, ``nu``) are turned into powers of ``q`` with
:func:`qcore.qpow`, so they stay exact whenever the power is rational.

``require_pf2`` (default True) additionally enforces the restriction under
which the base sequence is doubly positive, which the two-sided bounds need.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Sequence

import mpmath
from mpmath import iv

from .qcore import (
    DomainError,
    Scalar,
    is_exact,
    q_gamma,
    q_number,
    q_pochhammer,
    qpow,
    to_interval,
    unify,
    working_precision,
)
from .series import Family, FamilySpec

MANIFEST_VERSION = 1


class ExampleName(str, enum.Enum):
    QBessel1 = "QBessel1"
    QBessel2 = "QBessel2"
    QKummer1 = "QKummer1"
    QKummer2 = "QKummer2"
    QKummer1Denominator = "QKummer1Denominator"
    QKummer2Denominator = "QKummer2Denominator"
    Heine2phi1Upper = "Heine2phi1Upper"
    Heine2phi1Lower = "Heine2phi1Lower"
    RPlus1PhiS = "RPlus1PhiS"
    RPhiSUnitDenominator = "RPhiSUnitDenominator"


class RestrictionError(DomainError):
    pass


def _require(cond, text: str) -> None:
    if not cond:
        raise RestrictionError(f"requires {text}")


def _poch_list(points: Sequence, q, n: int):
    out = 1
    for p in points:
        out = out * q_pochhammer(p, q, n)
    return out


def _lift_points(q, alphas, betas):
    """``q``, ``q**alphas``, ``q**betas``, all lifted to intervals if any is one."""
    qq, *pts = unify(q, *(qpow(q, x) for x in alphas), *(qpow(q, x) for x in betas))
    return qq, pts[: len(alphas)], pts[len(alphas):]


def _tri(q, n: int, times: int = 1):
    """``q**(times * n(n-1)/2)``."""
    return q ** (times * n * (n - 1) // 2)


def example_spec(name: str | ExampleName, params: dict | None = None, q: Scalar = Fraction(1, 2), *, require_pf2: bool = True) -> FamilySpec:
    """Family spec for a named example.

    ``params`` keys per example:

    * QBessel1: ``nu`` (optional, metadata only); QBessel2: ``nu``;
    * QKummer1/2: ``b`` with 0<b<1;
    * QKummer1Denominator/2Denominator: ``a`` with 0<a<1 (0<a<q for PF2);
    * Heine2phi1Upper: ``b``, ``c`` with 0<b<c<1;
    * Heine2phi1Lower: ``a``, ``b`` in (0,1) (a+b<=q for PF2);
    * RPlus1PhiS: exponent lists ``alphas`` (r) and ``betas`` (s), r<=s;
    * RPhiSUnitDenominator: ``alphas`` (r) and ``betas`` (s-1); beta_s = 1 is
      appended, r <= s+1.
    """
    name = ExampleName(name)
    p = dict(params or {})
    meta: dict = {"example": name.value, "params": {k: str(v) for k, v in p.items()}}
    if name in (ExampleName.QBessel1, ExampleName.QBessel2):
        meta.update(x="(y/2)^2", mu="nu+1", prefactor="(y/2)^nu (1-q)^(-nu)")
        if name is ExampleName.QBessel1:
            base = lambda n: 1 / (q_pochhammer(q, q, n) * (1 - q) ** n)  # noqa: E731
        else:
            _require("nu" in p, "parameter nu")
            qnu = qpow(q, p["nu"])
            base = lambda n: q ** (n * n) * qnu**n / (q_pochhammer(q, q, n) * (1 - q) ** n)  # noqa: E731
        return FamilySpec(Family.G, base, q, name=name.value, meta=meta)
    if name in (ExampleName.QKummer1, ExampleName.QKummer2):
        b = p.get("b")
        _require(b is not None and 0 < b < 1, "0<b<1")
        t = 1 if name is ExampleName.QKummer1 else 0
        return FamilySpec(Family.F, lambda n: _tri(q, n, t) / q_pochhammer(b, q, n), q, name=name.value, meta=meta)
    if name in (ExampleName.QKummer1Denominator, ExampleName.QKummer2Denominator):
        a = p.get("a")
        _require(a is not None and 0 < a < 1, "0<a<1")
        if require_pf2:
            _require(a < q, "0<a<q")
        t = 1 if name is ExampleName.QKummer1Denominator else 0
        base = lambda n: _tri(q, n, t) * q_pochhammer(a, q, n) / q_pochhammer(q, q, n)  # noqa: E731
        return FamilySpec(Family.H, base, q, name=name.value, meta=meta)
    if name is ExampleName.Heine2phi1Upper:
        b, c = p.get("b"), p.get("c")
        _require(b is not None and c is not None and 0 < b < c < 1, "0<b<c<1")
        return FamilySpec(
            Family.F, lambda n: q_pochhammer(b, q, n) / q_pochhammer(c, q, n), q, name=name.value, meta=meta
        )
    if name is ExampleName.Heine2phi1Lower:
        a, b = p.get("a"), p.get("b")
        _require(a is not None and b is not None and 0 < a < 1 and 0 < b < 1, "0<a,b<1")
        if require_pf2:
            _require(a + b <= q, "a+b<=q")
        base = lambda n: q_pochhammer(a, q, n) * q_pochhammer(b, q, n) / q_pochhammer(q, q, n)  # noqa: E731
        return FamilySpec(Family.H, base, q, name=name.value, meta=meta)
    alphas, betas = list(p.get("alphas", [])), list(p.get("betas", []))
    _require(all(x > 0 for x in alphas + betas), "all exponents positive")
    if name is ExampleName.RPlus1PhiS:
        r, s = len(alphas), len(betas)
        _require(r <= s, "r<=s")
        if require_pf2:
            _require(decr_condition(alphas, betas, q).holds, "condition (decr)")
        qq, up, lo = _lift_points(q, alphas, betas)
        base = lambda n: _tri(qq, n, s - r) * _poch_list(up, qq, n) / _poch_list(lo, qq, n)  # noqa: E731
        return FamilySpec(Family.F, base, q, name=name.value, meta=meta)
    betas = betas + [1]
    r, s = len(alphas), len(betas)
    _require(r <= s + 1, "r<=s+1")
    if require_pf2:
        _require(decr_condition(alphas, betas, q).holds, "condition (decr)")
    qq, up, lo = _lift_points(q, alphas, betas)
    base = lambda n: _tri(qq, n, 1 + s - r) * _poch_list(up, qq, n) / _poch_list(lo, qq, n)  # noqa: E731
    meta.update(prefactor="1/Gamma_q(mu)")
    return FamilySpec(Family.G, base, q, name=name.value, meta=meta)


# ---------------------------------------------------------------------------
# elementary symmetric polynomials and the monotonicity chain
# ---------------------------------------------------------------------------


def elementary_symmetric(m: int, c: Sequence[Scalar]) -> Scalar:
    """``e_m(c)`` via the prefix recurrence ``e_k <- e_k + c_j e_{k-1}``."""
    c = list(c)
    if not 0 <= m <= len(c):
        raise DomainError(f"m must lie in [0, {len(c)}], got {m}")
    e = [1] + [0] * m
    for x in c:
        for k in range(m, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e[m]


@dataclass(frozen=True)
class DecrLink:
    index: int  # i in e_{s-r+i}(b)/e_i(a)
    left: Scalar  # e_{s-r+i}(b)/e_i(a)
    right: Scalar  # e_{s-r+i-1}(b)/e_{i-1}(a)
    holds: bool | None


@dataclass(frozen=True)
class DecrReport:
    links: tuple
    holds: bool
    first_failure: int | None


def _e_or_zero(m, c):
    return elementary_symmetric(m, c) if 0 <= m <= len(c) else 0


def decr_condition(alphas: Sequence, betas: Sequence, q: Scalar) -> DecrReport:
    """Check ``e_s(b)/e_r(a) <= e_{s-1}(b)/e_{r-1}(a) <= ... <= e_{s-r}(b)``.

    ``a_k = q^-alpha_k - 1`` and ``b_k = q^-beta_k - 1``.  Links are checked in
    order from the left; ``first_failure`` is the index ``i`` of the first
    failing link ``e_{s-r+i}(b)/e_i(a) <= e_{s-r+i-1}(b)/e_{i-1}(a)``.
    """
    if any(not x > 0 for x in list(alphas) + list(betas)):
        raise DomainError("all exponents must be positive")
    a = [1 / qpow(q, x) - 1 for x in alphas]
    b = [1 / qpow(q, x) - 1 for x in betas]
    r, s = len(a), len(b)
    both = list(unify(*a, *b))
    a, b = both[:r], both[r:]
    links, first = [], None
    for i in range(r, 0, -1):
        left = _e_or_zero(s - r + i, b) / elementary_symmetric(i, a)
        right = _e_or_zero(s - r + i - 1, b) / elementary_symmetric(i - 1, a)
        diff = right - left
        if is_exact(diff):
            ok = diff >= 0
        else:
            ok = True if diff >= 0 else (False if diff < 0 else None)
        links.append(DecrLink(i, left, right, ok))
        if ok is not True and first is None:
            first = i
    return DecrReport(tuple(links), first is None, first)


# ---------------------------------------------------------------------------
# q-Bessel functions
# ---------------------------------------------------------------------------


def _bessel_series(j: int, nu, x, q, prec: int) -> "iv.mpf":
    """``sum_n c_n x^n`` with ``c_n = [q^(n^2+n nu)] /((1-q)^n (q;q)_n Gamma_q(nu+n+1))``.

    For ``n >= N`` with ``nu + N + 1 > 0`` the term ratio
    ``x [q^(2n+1+nu)] / ((1-q^(n+1))(1-q^(nu+n+1)))`` is non-increasing, so a
    geometric tail from the last computed term is rigorous.
    """
    qi, xi, nui = to_interval(q), to_interval(x), to_interval(nu)
    qnu = qi**nui
    # Gamma_q(nu+1); nu+1 may be <= 0 only down to the first positive shift
    shift = 0
    while not (to_interval(nu) + 1 + shift > 0):
        shift += 1
    g0 = q_gamma(to_interval(nu) + 1 + shift, qi, eps=2.0 ** (-prec))
    # Gamma(nu+1) = Gamma(nu+1+shift) / ((q^(nu+1);q)_shift/(1-q)^shift)
    g0 = g0 * (1 - qi) ** shift / q_pochhammer(qnu * qi, qi, shift) if shift else g0
    term = 1 / g0
    total = iv.mpf(0)
    target = 2.0 ** (-(prec - 8))
    n = 0
    while True:
        total += term
        ratio = xi / ((1 - qi ** (n + 1)) * (1 - qnu * qi ** (n + 1)))
        if j == 2:
            ratio = ratio * qi ** (2 * n + 1) * qnu
        term = term * ratio
        n += 1
        if n > shift + 2 and ratio < 1:
            tail = abs(term) / (1 - ratio)
            if float(tail.b) <= target * float(abs(total).a) or n > 20000:
                return total + iv.mpf([-tail.b, tail.b])


def q_bessel(j: int, nu, y, q, *, prec: int | None = None) -> "iv.mpf":
    """Enclosure of ``I^(j)_nu(y;q)`` for ``0 < y`` (``y < 2`` when j=1)."""
    if j not in (1, 2):
        raise DomainError("j must be 1 or 2")
    if not y > 0:
        raise DomainError("y must be positive")
    if j == 1 and not y < 2:
        raise DomainError("I^(1) converges for |y| < 2")
    with working_precision(prec) as p:
        qi, yi = to_interval(q), to_interval(y)
        half = yi / 2
        pref = half ** to_interval(nu) / (1 - qi) ** to_interval(nu)
        return pref * _bessel_series(j, nu, half * half, q, p)


@dataclass(frozen=True)
class BesselTuran:
    y: Scalar
    lower: object
    middle: object
    upper: object

    @property
    def margin_lower(self):
        return self.middle - self.lower

    @property
    def margin_upper(self):
        return self.upper - self.middle

    @property
    def holds(self) -> bool:
        return bool(self.margin_lower >= 0) and bool(self.margin_upper >= 0)


def bessel_turan(j: int, nu, y, q, *, prec: int | None = None) -> BesselTuran:
    """Both sides of the q-Bessel Turan sandwich at one point."""
    with working_precision(prec) as p:
        qi, nui = to_interval(q), to_interval(nu)
        i0 = q_bessel(j, nu, y, q, prec=p)
        im = q_bessel(j, nui - 1, y, q, prec=p)
        ip = q_bessel(j, nui + 1, y, q, prec=p)
        middle = i0 * i0 - im * ip
        qnu = qi**nui
        qn1 = q_number(nui + 1, qi)
        g = q_gamma(nui + 1, qi, eps=2.0 ** (-p)) if nu > -1 else None
        if g is None:
            raise DomainError("nu must exceed -1")
        half = to_interval(y) / 2
        lower = half ** (2 * nui) * qnu * (1 - qi) ** (-2 * nui) / (qn1 * g * g)
        upper = qnu / qn1 * i0 * i0
        return BesselTuran(y, lower, middle, upper)


def classical_bessel_i(nu, y, dps: int = 40):
    """Classical modified Bessel ``I_nu(y)`` (mpmath)."""
    with mpmath.workdps(dps):
        return mpmath.besseli(mpmath.mpf(nu), mpmath.mpf(y))


# ---------------------------------------------------------------------------
# manifest
# ---------------------------------------------------------------------------


def load_manifest() -> dict:
    """The versioned grid manifest shipped with the package."""
    text = resources.files("qturan").joinpath("data/grids.json").read_text()
    data = json.loads(text)
    if data.get("version") != MANIFEST_VERSION:
        raise ValueError(f"unsupported manifest version {data.get('version')}")
    return data


def parse_fraction_list(values) -> list[Fraction]:
    return [Fraction(str(v)) for v in values]


class _ProductSequence:
    """``f(n) = prod_{k<n} ratio(k)`` with the prefix cached."""

    def __init__(self, ratio):
        self.ratio = ratio
        self.cache = [Fraction(1)]

    def __call__(self, n: int):
        while len(self.cache) <= n:
            k = len(self.cache) - 1
            self.cache.append(self.cache[-1] * self.ratio(k))
        return self.cache[n]


def named_base(name: str, q: Scalar):
    """Base sequences used by the verification grids."""
    if name == "ones":
        return lambda n: Fraction(1)
    if name == "inv_qpoch":
        return _ProductSequence(lambda k: 1 / (1 - q ** (k + 1)))
    if name == "heine_upper":
        # (b;q)_n/(c;q)_n with b = q^2, c = q
        return _ProductSequence(lambda k: (1 - q ** (k + 2)) / (1 - q ** (k + 1)))
    raise DomainError(f"unknown base sequence {name!r}")


BASE_NAMES = ("ones", "inv_qpoch", "heine_upper")
