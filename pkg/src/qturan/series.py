"""Truncated power series, the four parameter families and ``r phi s``.

A family series is always produced in *normalized* form: a series with
coefficients rational in ``(q, A)`` where ``A = q**nu`` is the family
parameter, together with a :class:`Scale` recording the q-gamma prefactor
that was stripped off.

=======  ==============================  ===============================
family   series                          normalized coefficient
=======  ==============================  ===============================
F        sum f_n (A;q)_n/(q;q)_n x^n     f_n (A;q)_n/(q;q)_n
D        sum d_n Gamma_q(nu+n) x^n       d_n (A;q)_n/(1-q)^n, times Gamma_q(nu)
G        sum g_n x^n/Gamma_q(nu+n)       g_n Gamma_q(nu+j)/Gamma_q(nu+n), over Gamma_q(nu+j)
H        sum h_n x^n/(A;q)_n             h_n/(A;q)_n
=======  ==============================  ===============================

For G the shift ``j`` is the least integer with ``A q**j < 1`` so the
stripped prefactor is a gamma value at a positive argument; for ``nu > 0``
this is ``j = 0`` and the coefficient is ``g_n (1-q)^n/(A;q)_n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import iv

from .qcore import (
    unify,
    DomainError,
    QTuranError,
    Scalar,
    ZeroDivisorError,
    _check_q,
    is_exact,
    q_pochhammer,
    to_interval,
    working_precision,
)

DEFAULT_ORDER = 32


class OrderMismatchError(QTuranError, ValueError):
    pass


class Family(enum.Enum):
    F = "F"
    D = "D"
    G = "G"
    H = "H"


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_M`` of a formal power series in ``x``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return cauchy_product(self, other)
        return TruncatedSeries(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatchError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def partial_sum(self, x):
        """Horner evaluation of the truncated polynomial."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        return cls((Fraction(1),) + (Fraction(0),) * order)


def cauchy_product(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    s1._check(s2)
    a, b = s1.coeffs, s2.coeffs
    return TruncatedSeries(
        sum((a[k] * b[m - k] for k in range(m + 1)), start=0 * a[0]) for m in range(len(a))
    )


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Scale:
    """Prefactor ``Gamma_q(z)**power`` with ``q**z == point``."""

    power: int
    point: Scalar | None = None


@dataclass(frozen=True)
class FamilySpec:
    """One of the four families with its base sequence.

    ``base`` maps ``n`` to the n-th base coefficient (f_n, d_n, g_n or h_n).
    ``a`` is the family parameter ``q**mu`` used by :func:`family_series`;
    Turanian routines take their four parameter values from an exponent
    quadruple instead.
    """

    family: Family
    base: Callable[[int], Scalar]
    q: Scalar
    a: Scalar | None = None
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        _check_q(self.q)

    def at(self, a: Scalar) -> "FamilySpec":
        return replace(self, a=a)

    def base_coeffs(self, order: int) -> list:
        return [self.base(n) for n in range(order + 1)]


def _lt_one(x) -> bool:
    return bool(x < 1)


def g_shift(a: Scalar, q: Scalar) -> int:
    """Least ``j >= 0`` with ``a q**j < 1``."""
    if not a > 0:
        raise DomainError(f"family parameter must be positive, got {a}")
    j, x = 0, a
    while not _lt_one(x):
        x = x * q
        j += 1
        if j > 10_000:
            raise DomainError(f"cannot shift parameter {a} below 1")
    return j


def family_multipliers(family: Family, a: Scalar, q: Scalar, order: int) -> tuple[list, Scale]:
    """Normalized coefficient multipliers (without the base sequence)."""
    a, q = unify(a, q)
    if family is Family.F:
        out, cur = [], q_pochhammer(a, q, 0)
        for n in range(order + 1):
            out.append(cur)
            cur = cur * (1 - a * q**n) / (1 - q ** (n + 1))
        return out, Scale(0)
    if family is Family.H:
        out, poch = [], q_pochhammer(a, q, 0)
        for n in range(order + 1):
            if poch == 0:
                raise ZeroDivisorError(f"(a;q)_{n} vanishes for a={a}")
            out.append(1 / poch)
            poch = poch * (1 - a * q**n)
        return out, Scale(0)
    if family is Family.D:
        if not (a > 0 and _lt_one(a)):
            raise DomainError(f"family D needs mu > 0, i.e. 0 < q**mu < 1, got {a}")
        out, cur = [], q_pochhammer(a, q, 0)
        for n in range(order + 1):
            out.append(cur)
            cur = cur * (1 - a * q**n) / (1 - q)
        return out, Scale(1, a)
    if family is Family.G:
        j = g_shift(a, q)
        out = [None] * (order + 1)
        one = q_pochhammer(a, q, 0)
        # R(n) = Gamma(nu+j)/Gamma(nu+n); R(n+1) = R(n) (1-q)/(1 - a q^n)
        cur = one
        for n in range(j, order + 1):
            out[n] = cur
            den = 1 - a * q**n
            if den == 0:
                raise ZeroDivisorError(f"1 - a q^{n} vanishes for a={a}")
            cur = cur * (1 - q) / den
        cur = one
        for n in range(j - 1, -1, -1):
            cur = cur * (1 - a * q**n) / (1 - q)
            if n <= order:
                out[n] = cur
        return out, Scale(-1, a * q**j)
    raise ValueError(family)


def normalized_series(spec: FamilySpec, a: Scalar, order: int, base: Sequence | None = None):
    """Return ``(TruncatedSeries, Scale)`` for the family at parameter ``a``."""
    base = spec.base_coeffs(order) if base is None else base
    mult, scale = family_multipliers(spec.family, a, spec.q, order)
    if not all(is_exact(m) for m in mult) or not all(is_exact(b) for b in base):
        base = [to_interval(b) for b in base]
        mult = [to_interval(m) for m in mult]
    return TruncatedSeries(b * m for b, m in zip(base, mult)), scale


def family_series(spec: FamilySpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Normalized family series at ``spec.a`` up to ``x**order``."""
    if spec.a is None:
        raise DomainError("FamilySpec.a is not set")
    return normalized_series(spec, spec.a, order)[0]


# ---------------------------------------------------------------------------
# basic hypergeometric series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HypergeometricParams:
    upper: tuple
    lower: tuple
    q: Scalar

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        _check_q(self.q)
        if len(self.upper) > len(self.lower) + 1:
            raise DomainError("r phi s needs r <= s+1")


def rphis(p: HypergeometricParams, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients of ``r phi s(a; b; q; z)`` in ``z`` up to ``order``.

    Includes the factor ``[(-1)^n q^(n(n-1)/2)]^(1+s-r)``.
    """
    r, s = len(p.upper), len(p.lower)
    q, *vals = unify(p.q, *p.upper, *p.lower)
    upper, lower = vals[:r], vals[r:]
    e = 1 + s - r
    out = []
    cur = Fraction(1) if is_exact(q) else iv.mpf(1)
    for n in range(order + 1):
        out.append(cur)
        num = 1
        for a in upper:
            num = num * (1 - a * q**n)
        den = 1 - q ** (n + 1)
        for b in lower:
            den = den * (1 - b * q**n)
        if den == 0:
            raise ZeroDivisorError(f"lower parameter gives (b;q)_{n + 1} = 0")
        # [(-1)^(n+1) q^(n(n+1)/2)]/[(-1)^n q^(n(n-1)/2)] = -q^n
        cur = cur * num / den * (-(q**n)) ** e
    return TruncatedSeries(out)


# ---------------------------------------------------------------------------
# radius of convergence and evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadiusEstimate:
    value: Scalar
    monotone: bool
    ratios: tuple


def radius_estimate(coeffs: Sequence, n: int) -> RadiusEstimate:
    """Ratio-test estimate ``|c_{n-1}/c_n|``.

    Leading zeros are skipped; a zero after the first nonzero coefficient is
    an internal zero and raises :class:`ZeroDivisorError` naming its index.
    ``monotone`` reports whether the ratio sequence is non-decreasing.
    """
    if n < 1 or n >= len(coeffs):
        raise DomainError(f"need 1 <= n < {len(coeffs)}, got {n}")
    start = next((k for k, c in enumerate(coeffs[: n + 1]) if c != 0), None)
    if start is None or start >= n:
        raise ZeroDivisorError("no nonzero coefficients before the requested index")
    for k in range(start, n + 1):
        if coeffs[k] == 0:
            raise ZeroDivisorError(f"internal zero at index {k}")
    ratios = tuple(abs(coeffs[k] / coeffs[k + 1]) for k in range(start, n))
    monotone = all(not (ratios[i + 1] < ratios[i]) for i in range(len(ratios) - 1))
    return RadiusEstimate(ratios[-1], monotone, ratios)


def _ratio_bound(spec: FamilySpec, a, base, order):
    """Upper bound for ``|c_{n+1}/c_n|`` valid for all ``n >= order``.

    Relies on the log-concave base sequence having non-increasing ratios
    beyond ``order``; returns ``(bound, rigorous)`` where ``rigorous`` is
    False when the base fails log-concavity on the computed prefix.
    """
    q = spec.q
    fam = spec.family
    if fam is Family.D:
        # d_n (q;q)_n (1-q)^-n is the log-concave sequence here
        adj, w = [], 1
        for n, b in enumerate(base):
            adj.append(b * w)
            w = w * (1 - q ** (n + 1)) / (1 - q)
    else:
        adj = list(base)
    m = order
    rigorous = all(
        not (adj[k] * adj[k] < adj[k - 1] * adj[k + 1]) for k in range(1, len(adj) - 1)
    )
    if adj[m] == 0:
        return 0, rigorous
    base_ratio = adj[m + 1] / adj[m]
    if not rigorous:
        window = [adj[k + 1] / adj[k] for k in range(max(0, m - 8), m + 1) if adj[k] != 0]
        base_ratio = max(window, key=lambda v: float(to_interval(v).b))
    aq = a * q**m
    if fam in (Family.F, Family.D):
        factor = max(1, abs(1 - aq), key=lambda v: float(to_interval(v).b)) / (1 - q ** (m + 1))
    elif fam is Family.G:
        factor = (1 - q) / (1 - aq)
    else:
        factor = 1 / (1 - aq)
    return abs(base_ratio) * factor, rigorous


@dataclass(frozen=True)
class SeriesValue:
    value: Scalar
    order: int
    tail: Scalar
    rigorous: bool


def evaluate_family(
    spec: FamilySpec,
    a: Scalar,
    x: Scalar,
    *,
    prec: int | None = None,
    min_order: int = 48,
    max_order: int = 4096,
) -> SeriesValue:
    """Enclose the normalized family series at ``x >= 0``.

    The partial sum is computed in interval arithmetic and widened by a
    geometric bound on the truncation tail.  Raises :class:`DomainError`
    when ``x`` lies outside the region where the tail bound converges.
    """
    if x < 0:
        raise DomainError("evaluation is provided for x >= 0")
    with working_precision(prec) as p:
        if x == 0:
            s, _ = normalized_series(spec, a, 0)
            return SeriesValue(to_interval(s[0]), 0, iv.mpf(0), True)
        xi = to_interval(x)
        qi, ai = to_interval(spec.q), to_interval(a)
        target = iv.mpf(2) ** (-(p - 8))
        order = min_order
        while True:
            base = [to_interval(b) for b in spec.base_coeffs(order + 1)]
            fam_spec = replace(spec, q=qi)
            mult, _ = family_multipliers(spec.family, ai, qi, order + 1)
            coeffs = [b * m for b, m in zip(base, mult)]
            r, rigorous = _ratio_bound(fam_spec, ai, base, order)
            rx = to_interval(r) * xi
            total = TruncatedSeries(coeffs[: order + 1]).partial_sum(xi)
            if rx < 1:
                last = abs(coeffs[order]) * xi**order
                tail = iv.mpf((last * rx / (1 - rx)).b)
                if tail <= target * abs(total).a or order >= max_order:
                    return SeriesValue(total + iv.mpf([-tail.b, tail.b]), order, tail, rigorous)
            elif order >= max_order:
                raise DomainError(f"x={x} lies outside the convergence region (ratio bound {r})")
            order = min(order * 2, max_order)


def dual_spec(spec: FamilySpec) -> FamilySpec:
    """The family sharing normalized coefficients with ``spec``.

    D with ``d_n`` maps to F with ``f_n = d_n (q;q)_n (1-q)**-n`` and G with
    ``g_n`` maps to H with ``h_n = g_n (1-q)**n`` (and back).
    """
    q, base = spec.q, spec.base
    if spec.family is Family.D:
        fam, new = Family.F, (lambda n: base(n) * q_pochhammer(q, q, n) / (1 - q) ** n)
    elif spec.family is Family.F:
        fam, new = Family.D, (lambda n: base(n) * (1 - q) ** n / q_pochhammer(q, q, n))
    elif spec.family is Family.G:
        fam, new = Family.H, (lambda n: base(n) * (1 - q) ** n)
    else:
        fam, new = Family.G, (lambda n: base(n) / (1 - q) ** n)
    return replace(spec, family=fam, base=new, name=f"dual({spec.name})")
