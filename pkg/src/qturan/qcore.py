"""Scalar backends and q-arithmetic primitives.

Two scalar kinds flow through the whole package:

* exact scalars: ``int`` or :class:`fractions.Fraction`; arithmetic is
  error free and every sign query is certified;
* float scalars: :class:`mpmath.iv.mpf` intervals.  Every operation rounds
  outward, so the interval width *is* the running error bound, and a sign
  query returns ``UNDETERMINED`` whenever the enclosure straddles zero.

All primitives are written once against the ordinary arithmetic operators
and therefore work for either kind.  Exact and interval inputs may be mixed;
the result is then an interval.
"""

from __future__ import annotations

import contextlib
import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from mpmath import iv

Interval = type(iv.mpf(0))
Scalar = Union[int, Fraction, Interval]

DEFAULT_PREC = int(os.environ.get("QTURAN_PREC", "128"))


class QTuranError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QTuranError, ValueError):
    pass


class ModeError(QTuranError, TypeError):
    """An exact computation was requested for an irrational quantity."""


class ZeroDivisorError(QTuranError, ZeroDivisionError):
    pass


class Mode(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


class Sign(enum.Enum):
    POSITIVE = 1
    NEGATIVE = -1
    ZERO = 0
    UNDETERMINED = None


@dataclass(frozen=True)
class SignVerdict:
    sign: Sign
    certified: bool

    @property
    def positive(self) -> bool:
        return self.sign is Sign.POSITIVE

    @property
    def negative(self) -> bool:
        return self.sign is Sign.NEGATIVE

    def __str__(self) -> str:
        tag = "exact" if self.certified else "float"
        return f"{self.sign.name.lower()}({tag})"


# ---------------------------------------------------------------------------
# scalar helpers
# ---------------------------------------------------------------------------


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def mode_of(*xs) -> Mode:
    return Mode.EXACT if all(is_exact(x) for x in xs) else Mode.FLOAT


@contextlib.contextmanager
def working_precision(prec: int | None = None) -> Iterator[int]:
    """Temporarily set the interval working precision (bits).

    The interval context is process global; callers that evaluate in
    several threads should use one precision throughout.
    """
    prec = DEFAULT_PREC if prec is None else prec
    old = iv.prec
    iv.prec = prec
    try:
        yield prec
    finally:
        iv.prec = old


def parse_scalar(text: str | int | float | Fraction) -> Fraction:
    """Parse ``"1/2"``, ``"0.25"``, ``3`` ... into an exact rational."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, (int, float)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def to_interval(x: Scalar) -> Interval:
    """Rigorous interval enclosure of an exact or interval scalar."""
    if isinstance(x, Interval):
        return x
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return iv.mpf(x)
    if isinstance(x, float):
        return iv.mpf(x)
    raise TypeError(f"not a scalar: {x!r}")


def unify(*xs):
    """Return the scalars unchanged if all exact, else all as intervals.

    ``Fraction`` and ``iv.mpf`` do not combine directly, so mixed
    expressions must lift their exact operands first.
    """
    if all(is_exact(x) for x in xs):
        return xs
    return tuple(to_interval(x) for x in xs)


def to_float(x: Scalar) -> float:
    if isinstance(x, Interval):
        return float(x.mid)
    return float(x)


def sign_of(x: Scalar) -> SignVerdict:
    if is_exact(x):
        if x > 0:
            return SignVerdict(Sign.POSITIVE, True)
        if x < 0:
            return SignVerdict(Sign.NEGATIVE, True)
        return SignVerdict(Sign.ZERO, True)
    if x > 0:
        return SignVerdict(Sign.POSITIVE, False)
    if x < 0:
        return SignVerdict(Sign.NEGATIVE, False)
    if x.a == 0 and x.b == 0:
        return SignVerdict(Sign.ZERO, False)
    return SignVerdict(Sign.UNDETERMINED, False)


def relative_error(x: Scalar) -> float:
    """Relative error certificate of a scalar (0 for exact values)."""
    if is_exact(x):
        return 0.0
    mag = min(abs(float(x.a)), abs(float(x.b)))
    if mag == 0.0:
        return math.inf
    return float(x.delta) / mag


def _check_q(q: Scalar) -> None:
    if not (q > 0 and q < 1):
        raise DomainError(f"q must lie in (0,1), got {q}")


def _integer_root(n: int, d: int) -> int | None:
    if n < 0:
        return None
    lo, hi = 0, 1 << (n.bit_length() // d + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**d < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**d == n else None


def qpow(q: Scalar, x, *, exact_only: bool = False) -> Scalar:
    """``q**x`` for rational (or interval) exponent ``x``.

    Stays exact when ``x`` is an integer, or when ``x = p/d`` and both the
    numerator and denominator of ``q`` are perfect ``d``-th powers.
    Otherwise returns an interval, or raises :class:`ModeError` when
    ``exact_only`` is set.
    """
    if is_exact(q) and is_exact(x):
        x = Fraction(x)
        q = Fraction(q)
        if x.denominator == 1:
            return q ** int(x)
        d = x.denominator
        rn, rd = _integer_root(q.numerator, d), _integer_root(q.denominator, d)
        if rn is not None and rd is not None:
            return Fraction(rn, rd) ** x.numerator
    if exact_only:
        raise ModeError(f"q**x is not rational for q={q}, x={x}")
    return to_interval(q) ** to_interval(x)


def integer_exponent(ratio: Scalar, q: Scalar, limit: int = 4096) -> int | None:
    """Return ``j`` with ``ratio == q**j`` exactly, or None.

    Only meaningful for exact inputs; intervals always give None.
    """
    if not (is_exact(ratio) and is_exact(q)) or ratio <= 0:
        return None
    ratio, q = Fraction(ratio), Fraction(q)
    if ratio == 1:
        return 0
    step = q if ratio < 1 else 1 / q
    sgn = 1 if ratio < 1 else -1
    cur, j = Fraction(1), 0
    while j < limit:
        cur *= step
        j += 1
        if cur == ratio:
            return sgn * j
        if (ratio < 1 and cur < ratio) or (ratio > 1 and cur > ratio):
            return None
    return None


# ---------------------------------------------------------------------------
# q-primitives
# ---------------------------------------------------------------------------


def q_number(x, q: Scalar) -> Scalar:
    """``[x]_q = (1 - q**x)/(1 - q)``."""
    _check_q(q)
    if is_exact(q) and is_exact(x) and Fraction(x).denominator != 1:
        raise ModeError("exact q-number needs an integer argument; pass an interval q")
    if is_exact(q) and is_exact(x):
        return (1 - Fraction(q) ** int(x)) / (1 - Fraction(q))
    return (1 - qpow(q, x)) / (1 - q)


def q_pochhammer(a: Scalar, q: Scalar, n: int) -> Scalar:
    """Finite q-shifted factorial ``(a;q)_n``."""
    _check_q(q)
    if n < 0:
        raise DomainError("n must be non-negative")
    out = Fraction(1) if is_exact(a) and is_exact(q) else iv.mpf(1)
    term = a
    for _ in range(n):
        out *= 1 - term
        term = term * q
    return out


def _tail_terms(absx, q, eps) -> int:
    """Smallest ``N`` with sum_{k>=N} |x| q^k / (1 - |x| q^k) < eps."""
    absx, q = float(absx), float(q)
    if absx == 0.0:
        return 0
    n = 0
    while True:
        t = absx * q**n
        if t < 0.5 and t / ((1 - q) * (1 - t)) < eps:
            return n
        n += 1


def _qpoch_inf_enclosure(x: Scalar, q: Scalar, eps: float) -> Interval:
    """Rigorous enclosure of ``(x;q)_inf`` for any real ``x``.

    Explicit factors are multiplied up to ``N``; the remaining product is
    enclosed through ``|log(1-y)| <= |y|/(1-|y|)``.
    """
    xi, qi = to_interval(x), to_interval(q)
    absx = max(abs(float(xi.a)), abs(float(xi.b)))
    n = _tail_terms(absx * (1 + 1e-12), float(qi.b) * (1 + 1e-12), eps)
    prod = iv.mpf(1)
    term = xi
    for _ in range(n):
        prod *= 1 - term
        term *= qi
    if absx == 0.0:
        return prod
    # term = x q^N; bound for the log of the tail product
    tmag = abs(term).b
    bound = tmag / ((1 - qi) * (1 - tmag))
    bound = iv.mpf(bound.b)
    if float(xi.a) >= 0:
        tail = iv.exp(iv.mpf([-bound.b, 0]))
    else:
        tail = iv.exp(iv.mpf([-bound.b, bound.b]))
    return prod * tail


def _eps_prec(eps) -> int:
    return max(DEFAULT_PREC, int(-math.log2(float(eps))) + 32)


def q_pochhammer_inf(a: Scalar, q: Scalar, eps=Fraction(1, 10**30)) -> Interval:
    """``(a;q)_inf`` for ``0 <= a < 1`` with relative error at most ``2*eps``.

    The result is an interval whose width is the error certificate.
    """
    _check_q(q)
    if eps <= 0:
        raise DomainError("eps must be positive")
    if a < 0 or not (a < 1):
        raise DomainError(f"(a;q)_inf needs 0 <= a < 1, got {a}")
    with working_precision(_eps_prec(eps)):
        return _qpoch_inf_enclosure(a, q, float(eps))


def q_gamma(z, q: Scalar, eps=Fraction(1, 10**30)) -> Scalar:
    """``Gamma_q(z) = (1-q)**(1-z) (q;q)_inf / (q**z;q)_inf`` for ``z > 0``.

    Positive integer ``z`` with exact ``q`` gives the exact value
    ``(q;q)_{z-1}/(1-q)**(z-1)``; otherwise an interval.
    """
    _check_q(q)
    if not z > 0:
        raise DomainError(f"q_gamma is only provided for z > 0, got {z}")
    if is_exact(z) and is_exact(q) and Fraction(z).denominator == 1:
        n = int(z)
        return q_pochhammer(q, q, n - 1) / (1 - Fraction(q)) ** (n - 1)
    with working_precision(_eps_prec(eps)):
        zi, qi = to_interval(z), to_interval(q)
        qz = qi**zi
        num = _qpoch_inf_enclosure(qi, qi, float(eps))
        den = _qpoch_inf_enclosure(qz, qi, float(eps))
        return (1 - qi) ** (1 - zi) * num / den


def q_gamma_ratio(a: Scalar, q: Scalar, k: int) -> Scalar:
    """``Gamma_q(x+k)/Gamma_q(x) = (a;q)_k/(1-q)**k`` where ``a = q**x``."""
    _check_q(q)
    if k < 0:
        raise DomainError("k must be non-negative")
    return q_pochhammer(a, q, k) / (1 - q) ** k


def gamma_shift_ratio(x: Scalar, q: Scalar, n: int) -> Scalar:
    """``Gamma_q(z)/Gamma_q(z+n)`` for any integer ``n``, with ``x = q**z``.

    Rational in ``x`` and ``q``; valid for every ``z`` at which both gammas
    are finite, and it returns 0 exactly when ``z+n`` is a pole.
    """
    if n >= 0:
        den = q_pochhammer(x, q, n)
        if den == 0:
            raise ZeroDivisorError(f"(x;q)_{n} vanishes for x={x}")
        return (1 - q) ** n / den
    m = -n
    return q_pochhammer(x * q**n, q, m) / (1 - q) ** m
