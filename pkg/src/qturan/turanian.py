"""Generalized Turanian coefficients and their sign analysis.

For a family parameterized by ``A = q**nu`` the Turanian is

    Delta(alpha, beta; x) = y(mu+alpha) y(mu+beta) - y(mu) y(mu+alpha+beta).

Each of the four functions is split as ``prefactor * normalized series``
(see :mod:`qturan.series`).  Dividing by the positive prefactor of the first
product leaves

    delta_m  ~  P_m - kappa Q_m,

with ``P = N1 N2`` and ``Q = N0 N3`` rational-coefficient Cauchy products and
``kappa`` a ratio of four q-gamma values.  ``kappa = 1`` for F and H; for D
and G it is rational whenever alpha or beta is an integer and an interval
enclosure of an infinite-product quotient otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from mpmath import iv

from .qcore import (
    DEFAULT_PREC,
    DomainError,
    Scalar,
    Sign,
    SignVerdict,
    _qpoch_inf_enclosure,
    gamma_shift_ratio,
    integer_exponent,
    is_exact,
    q_pochhammer,
    qpow,
    sign_of,
    to_interval,
    unify,
    working_precision,
)
from .series import (
    DEFAULT_ORDER,
    Family,
    FamilySpec,
    Scale,
    TruncatedSeries,
    evaluate_family,
    family_multipliers,
    g_shift,
    normalized_series,
    radius_estimate,
)

MAX_PREC = 2048


class InconsistentQuadError(DomainError):
    pass


class HypothesisError(DomainError):
    pass


@dataclass(frozen=True)
class Quad:
    """Parameter values ``(q^mu, q^(mu+alpha), q^(mu+beta), q^(mu+alpha+beta))``."""

    q: Scalar
    a0: Scalar
    a1: Scalar
    a2: Scalar
    a3: Scalar
    exponents: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        lhs, rhs = self.a0 * self.a3, self.a1 * self.a2
        if is_exact(lhs) and is_exact(rhs):
            ok = lhs == rhs
        else:
            diff = to_interval(lhs) - to_interval(rhs)
            ok = not (diff > 0 or diff < 0)
        if not ok:
            raise InconsistentQuadError(
                "exponent quadruple violates q^mu q^(mu+alpha+beta) = q^(mu+alpha) q^(mu+beta)"
            )
        if not all(v > 0 for v in (self.a0, self.a1, self.a2, self.a3)):
            raise DomainError("quadruple entries must be positive")

    @classmethod
    def from_powers(cls, q, a, s, t) -> "Quad":
        """From ``a = q^mu``, ``s = q^alpha``, ``t = q^beta``."""
        return cls(q, a, a * s, a * t, a * s * t)

    @classmethod
    def from_exponents(cls, q, mu, alpha, beta) -> "Quad":
        """From real exponents; exact whenever every power is rational."""
        a, s, t = qpow(q, mu), qpow(q, alpha), qpow(q, beta)
        if not all(is_exact(v) for v in (a, s, t)):
            a, s, t = (to_interval(v) for v in (a, s, t))
        return cls(q, a, a * s, a * t, a * s * t, exponents=(mu, alpha, beta))

    @property
    def values(self) -> tuple:
        return (self.a0, self.a1, self.a2, self.a3)

    @property
    def s(self):
        return self.a1 / self.a0

    @property
    def t(self):
        return self.a2 / self.a0

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in (self.q, *self.values))

    def alpha_integer(self) -> int | None:
        return integer_exponent(self.s, self.q)

    def beta_integer(self) -> int | None:
        return integer_exponent(self.t, self.q)

    def swapped(self) -> "Quad":
        ex = None if self.exponents is None else (self.exponents[0], self.exponents[2], self.exponents[1])
        return Quad(self.q, self.a0, self.a2, self.a1, self.a3, exponents=ex)

    def label(self) -> dict:
        if self.exponents is not None:
            mu, al, be = self.exponents
            return {"mu": str(mu), "alpha": str(al), "beta": str(be)}
        return {"a": _fmt(self.a0), "s": _fmt(self.s), "t": _fmt(self.t)}


def _fmt(x) -> str:
    if is_exact(x):
        return str(x)
    return iv.nstr(x, 12) if hasattr(iv, "nstr") else str(x)


# ---------------------------------------------------------------------------
# gamma ratios
# ---------------------------------------------------------------------------


def gamma_product_ratio(num: Sequence, den: Sequence, q: Scalar, prec: int | None = None) -> Scalar:
    """``prod Gamma_q(z_i) / prod Gamma_q(w_j)`` from points ``q**z``, ``q**w``.

    Every point must lie in ``(0, 1)``.  Pairs whose points differ by an
    integer power of ``q`` are reduced to finite products; when every point
    pairs off the result is exact.  Unpaired points go through enclosed
    infinite products.
    """
    if len(num) != len(den):
        raise ValueError("numerator and denominator need the same number of gammas")
    num, den = list(num), list(den)
    out = Fraction(1)
    for x in list(num):
        for y in den:
            j = integer_exponent(x / y, q) if is_exact(x) and is_exact(y) else None
            if j is not None:
                # Gamma(w + j)/Gamma(w) with q^w = y
                out = out / gamma_shift_ratio(y, q, j)
                num.remove(x)
                den.remove(y)
                break
    if not num:
        return out
    with working_precision(prec) as p:
        eps = 2.0 ** (-p)
        qi = to_interval(q)
        prod = to_interval(out)
        for y in den:
            prod *= _qpoch_inf_enclosure(y, qi, eps)
        for x in num:
            prod /= _qpoch_inf_enclosure(x, qi, eps)
        r = Fraction(1) if all(is_exact(v) for v in (*num, *den)) else iv.mpf(1)
        for y in den:
            r = r * y
        for x in num:
            r = r / x
        e = integer_exponent(r, q) if is_exact(r) else None
        if e is None:
            e = iv.log(to_interval(r)) / iv.log(qi)
        return prod * (1 - qi) ** e


def gamma_quad_ratio(quad: Quad, prec: int | None = None) -> Scalar:
    """``rho = Gamma_q(mu+alpha)Gamma_q(mu+beta)/(Gamma_q(mu)Gamma_q(mu+alpha+beta))``.

    Written as ``(a0;q)_inf (a3;q)_inf / ((a1;q)_inf (a2;q)_inf)``, which
    continues to ``mu <= 0``; exact when alpha or beta is an integer.
    """
    q = quad.q
    j = quad.alpha_integer()
    if j is not None and j >= 0:
        return q_pochhammer(quad.a0, q, j) / q_pochhammer(quad.a2, q, j)
    k = quad.beta_integer()
    if k is not None and k >= 0:
        return q_pochhammer(quad.a0, q, k) / q_pochhammer(quad.a1, q, k)
    with working_precision(prec) as p:
        eps = 2.0 ** (-p)
        qi = to_interval(q)
        encl = [_qpoch_inf_enclosure(v, qi, eps) for v in quad.values]
        return encl[0] * encl[3] / (encl[1] * encl[2])


def _kappa(scales: Sequence[Scale], q, prec) -> Scalar:
    """``pref0 pref3 / (pref1 pref2)`` for the four stripped prefactors."""
    num, den = [], []
    for i, sc in enumerate(scales):
        if sc.power == 0:
            continue
        top = (i in (0, 3)) == (sc.power > 0)
        (num if top else den).append(sc.point)
    if not num and not den:
        return Fraction(1)
    return gamma_product_ratio(num, den, q, prec)


# ---------------------------------------------------------------------------
# Turanian coefficients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignPattern:
    """Summary of a coefficient sign sequence.

    ``kind`` is ``all_positive_after`` / ``all_negative_after`` when every
    coefficient from ``start`` on has that sign and the earlier ones vanish,
    and ``mixed`` otherwise (``entries`` then lists ``(m, sign)`` pairs).
    """

    kind: str
    start: int = 0
    entries: tuple = ()

    def __str__(self) -> str:
        if self.kind == "mixed":
            return "mixed(" + ",".join(f"{m}:{s}" for m, s in self.entries) + ")"
        return f"{self.kind}({self.start})"


def summarize_signs(verdicts: Sequence[SignVerdict]) -> SignPattern:
    signs = [v.sign for v in verdicts]
    k = 0
    while k < len(signs) and signs[k] is Sign.ZERO:
        k += 1
    rest = signs[k:]
    if rest and all(s is Sign.POSITIVE for s in rest):
        return SignPattern("all_positive_after", k)
    if rest and all(s is Sign.NEGATIVE for s in rest):
        return SignPattern("all_negative_after", k)
    return SignPattern("mixed", 0, tuple((m, s.name.lower()) for m, s in enumerate(signs)))


@dataclass(frozen=True)
class TuranianReport:
    family: Family
    quad: Quad
    delta: TruncatedSeries
    verdicts: tuple
    pattern: SignPattern
    kappa: Scalar
    normalized: bool
    prec: int | None = None

    def signs_from(self, m0: int) -> list:
        return [v.sign for v in self.verdicts[m0:]]

    def all_positive(self, m0: int = 0) -> bool:
        return all(s is Sign.POSITIVE for s in self.signs_from(m0))

    def all_negative(self, m0: int = 0) -> bool:
        return all(s is Sign.NEGATIVE for s in self.signs_from(m0))

    @property
    def certified(self) -> bool:
        return all(v.certified for v in self.verdicts)


def _lift(series: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(to_interval(c) for c in series)


def _turanian_parts(spec: FamilySpec, quad: Quad, order: int):
    base = spec.base_coeffs(order)
    parts = [normalized_series(spec, a, order, base) for a in quad.values]
    series = [p[0] for p in parts]
    scales = [p[1] for p in parts]
    return series, scales


def turanian_coeffs(
    spec: FamilySpec,
    quad: Quad,
    order: int = DEFAULT_ORDER,
    *,
    prec: int | None = None,
) -> TuranianReport:
    """Coefficients ``delta_0 .. delta_order`` of the normalized Turanian.

    The normalization divides by the (positive) q-gamma prefactor of
    ``y(mu+alpha) y(mu+beta)``; for F and H nothing is divided out.  When
    ``kappa`` is only known as an interval and some sign is undetermined,
    the precision is doubled up to ``MAX_PREC`` bits.
    """
    if is_exact(quad.q) and is_exact(spec.q) and quad.q != spec.q:
        raise DomainError("quadruple and family use different q")
    series, scales = _turanian_parts(spec, quad, order)
    p_series = series[1] * series[2]
    q_series = series[0] * series[3]
    p = prec or DEFAULT_PREC
    while True:
        kappa = _kappa(scales, spec.q, p)
        if is_exact(kappa):
            delta = p_series - (q_series if kappa == 1 else q_series * kappa)
        else:
            delta = _lift(p_series) - _lift(q_series) * kappa
        verdicts = tuple(sign_of(d) for d in delta)
        undetermined = any(v.sign is Sign.UNDETERMINED for v in verdicts)
        if is_exact(kappa) or not undetermined or p >= MAX_PREC or not quad.exact:
            break
        p *= 2
    return TuranianReport(
        family=spec.family,
        quad=quad,
        delta=delta,
        verdicts=verdicts,
        pattern=summarize_signs(verdicts),
        kappa=kappa,
        normalized=spec.family in (Family.D, Family.G),
        prec=None if is_exact(kappa) and quad.exact else p,
    )


@dataclass(frozen=True)
class AkDiagnostics:
    m: int
    a_k: tuple
    sign_changes: int
    pattern_ok: bool
    partial_sum: Scalar
    undetermined: int = 0


def count_sign_changes(values: Sequence) -> tuple[int, bool, int]:
    """Sign changes among nonzero entries, Lemma-5 pattern flag, undetermined count.

    The admissible pattern is ``(- ... - 0 ... 0 + ... +)`` with any block
    possibly empty.
    """
    signs = [sign_of(v).sign for v in values]
    undetermined = sum(s is Sign.UNDETERMINED for s in signs)
    nz = [s for s in signs if s in (Sign.POSITIVE, Sign.NEGATIVE)]
    changes = sum(1 for x, y in zip(nz, nz[1:]) if x is not y)
    rank = {Sign.NEGATIVE: 0, Sign.ZERO: 1, Sign.POSITIVE: 2}
    ranked = [rank[s] for s in signs if s in rank]
    pattern_ok = undetermined == 0 and all(x <= y for x, y in zip(ranked, ranked[1:]))
    return changes, pattern_ok, undetermined


def ak_diagnostics(
    spec: FamilySpec, quad: Quad, m: int, *, prec: int | None = None
) -> AkDiagnostics:
    """The symmetric grouping ``delta_m = sum_{k<=m/2} b_k b_{m-k} A_k``.

    ``A_k = M_k + M_{m-k}`` for ``k < m/2`` and ``A_{m/2} = M_{m/2}``, where
    ``M_k`` is the bracket multiplying ``b_k b_{m-k}`` in the Cauchy product.
    """
    q = spec.q
    mults, scales = [], []
    for a in quad.values:
        mult, sc = family_multipliers(spec.family, a, q, m)
        mults.append(mult)
        scales.append(sc)
    kappa = _kappa(scales, q, prec)
    if not is_exact(kappa) or not all(is_exact(c) for mult in mults for c in mult):
        kappa = to_interval(kappa)
        mults = [[to_interval(c) for c in mult] for mult in mults]
    c0, c1, c2, c3 = mults
    big_m = [c1[k] * c2[m - k] - kappa * c0[k] * c3[m - k] for k in range(m + 1)]
    a_k = []
    for k in range(m // 2 + 1):
        a_k.append(big_m[k] if 2 * k == m else big_m[k] + big_m[m - k])
    changes, pattern_ok, undetermined = count_sign_changes(a_k)
    return AkDiagnostics(m, tuple(a_k), changes, pattern_ok, sum(big_m), undetermined)


# ---------------------------------------------------------------------------
# the reciprocal q-gamma sum
# ---------------------------------------------------------------------------


def s_m_direct(a: Scalar, b: Scalar, q: Scalar, m: int) -> Scalar:
    """``Gamma_q(mu+1)Gamma_q(mu+beta+1) S_m(mu,beta)`` summed term by term.

    ``a = q**mu`` and ``b = q**beta``.
    """
    if m < 0:
        raise DomainError("m must be non-negative")
    x1, x2 = a * q, a * b * q
    total = 0
    for k in range(m + 1):
        total += gamma_shift_ratio(x1, q, k) * gamma_shift_ratio(x2, q, m - k - 1)
        total -= gamma_shift_ratio(x1, q, k - 1) * gamma_shift_ratio(x2, q, m - k)
    return total


def s_m_closed(a: Scalar, b: Scalar, q: Scalar, m: int) -> Scalar:
    """Closed form of :func:`s_m_direct` via the telescoping identity."""
    if m < 0:
        raise DomainError("m must be non-negative")
    diff = q_pochhammer(a * b, q, m + 1) - q_pochhammer(a, q, m + 1)
    return (
        gamma_shift_ratio(a * q, q, m)
        * gamma_shift_ratio(a * b * q, q, m)
        * diff
        / (1 - q) ** (m + 1)
    )


# ---------------------------------------------------------------------------
# Turanian evaluation and the corollary sandwiches
# ---------------------------------------------------------------------------


def _values_at(spec: FamilySpec, quad: Quad, x, prec):
    """Normalized series values N0..N3 at ``x`` plus ``kappa``."""
    if x == 0:
        base0 = spec.base(0)
        vals, scales = [], []
        for a in quad.values:
            mult, sc = family_multipliers(spec.family, a, spec.q, 0)
            vals.append(base0 * mult[0])
            scales.append(sc)
        return vals, _kappa(scales, spec.q, prec), True
    vals, rig = [], True
    for a in quad.values:
        sv = evaluate_family(spec, a, x, prec=prec)
        vals.append(sv.value)
        rig = rig and sv.rigorous
    scales = [normalized_series(spec, a, 0)[1] for a in quad.values]
    return vals, _kappa(scales, spec.q, prec), rig


def turanian_value(spec: FamilySpec, quad: Quad, x, *, prec: int | None = None) -> Scalar:
    """Enclosure of the normalized ``Delta(alpha, beta; x)`` for ``x >= 0``."""
    with working_precision(prec):
        vals, kappa, _ = _values_at(spec, quad, x, prec)
        n0, n1, n2, n3, kappa = unify(*vals, kappa)
        return n1 * n2 - kappa * n0 * n3


@dataclass(frozen=True)
class Inequality:
    """``lhs <= rhs`` (or ``<`` when ``strict``); ``equal_at_zero`` marks sides
    that must hold with equality at ``x = 0`` and strictly elsewhere."""

    name: str
    lhs: Scalar
    rhs: Scalar
    strict: bool
    equal_at_zero: bool = False

    @property
    def margin(self):
        return self.rhs - self.lhs


@dataclass(frozen=True)
class BoundRow:
    x: Scalar
    name: str
    lhs: Scalar
    rhs: Scalar
    margin: Scalar
    status: str  # "pass", "fail", "undetermined", "skipped"
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class BoundsReport:
    family: Family
    quad: Quad
    rows: tuple
    hypothesis_violations: tuple
    radius: Scalar
    rigorous_tails: bool

    @property
    def failures(self) -> list:
        return [r for r in self.rows if r.status == "fail"]

    @property
    def ok(self) -> bool:
        return all(r.status in ("pass", "skipped") for r in self.rows)


def _zero_like(v) -> bool:
    if is_exact(v):
        return v == 0
    return not (v > 0 or v < 0)


def _judge(ineq: Inequality, at_zero: bool) -> str:
    margin = ineq.margin
    if at_zero and ineq.equal_at_zero:
        return "pass" if _zero_like(margin) else "fail"
    v = sign_of(margin)
    if v.sign is Sign.POSITIVE:
        return "pass"
    if v.sign is Sign.UNDETERMINED:
        return "undetermined"
    return "fail"


def check_hypotheses(spec: FamilySpec, quad: Quad, order: int = 24) -> list[str]:
    """Corollary hypotheses violated by ``(spec, quad)``, as readable tags."""
    from .seqprops import is_doubly_positive

    q = spec.q
    issues = []
    fam = spec.family
    base = spec.base_coeffs(order)
    if fam is Family.D:
        seq = [b * q_pochhammer(q, q, n) for n, b in enumerate(base)]
    else:
        seq = base
    if not is_doubly_positive(seq).doubly_positive:
        issues.append("base sequence not doubly positive")
    if not (quad.s < 1 and quad.t < 1):
        issues.append("requires alpha, beta > 0")
    if fam is Family.F and not quad.a0 <= 1:
        issues.append("requires mu >= 0")
    if fam in (Family.D, Family.H) and not quad.a0 < 1:
        issues.append("requires mu > 0")
    if fam in (Family.G, Family.H):
        j = quad.alpha_integer()
        if j is None or j < 1:
            issues.append("requires alpha in N")
    if fam is Family.G:
        if not (quad.a0 * quad.t <= 1 and quad.a0 * q <= 1):
            issues.append("requires mu >= max(-beta, -1)")
        j = quad.alpha_integer()
        if j is not None and not quad.t * q <= q**j:
            issues.append("requires alpha <= beta + 1")
    return issues


def _sandwiches(spec: FamilySpec, quad: Quad, x, vals, kappa, rho) -> list[Inequality]:
    n0, n1, n2, n3, kappa, rho, x, q, a, s, t, b0, b1 = unify(
        *vals, kappa, rho, x, spec.q, quad.a0, quad.s, quad.t, spec.base(0), spec.base(1)
    )
    fam = spec.family
    if fam is Family.F:
        ratio = n0 * n3 / (n1 * n2)
        delta = n1 * n2 - n0 * n3
        return [
            Inequality("ratio_lower", rho, ratio, strict=True),
            Inequality("ratio_upper", ratio, 1, strict=False, equal_at_zero=True),
            Inequality(
                "turanian_lower", b0 * b1 * (1 - s) * (1 - t) * a * x / (1 - q), delta,
                strict=False, equal_at_zero=True,
            ),
            Inequality("turanian_upper", delta, (1 - rho) * n1 * n2, strict=True),
        ]
    if fam is Family.D:
        # everything divided by Gamma(mu+alpha)Gamma(mu+beta); kappa = 1/rho
        ratio = rho * n1 * n2 / (n0 * n3)
        delta = n1 * n2 - kappa * n0 * n3
        return [
            Inequality("ratio_lower", rho, ratio, strict=False, equal_at_zero=True),
            Inequality("ratio_upper", ratio, 1, strict=True),
            Inequality("turanian_lower", (rho - 1) * kappa * n0 * n3, delta, strict=False, equal_at_zero=True),
            Inequality("turanian_upper", delta, b0 * b0 * (1 - kappa), strict=False, equal_at_zero=True),
        ]
    if fam is Family.G:
        # everything multiplied by Gamma(mu+alpha+j1)Gamma(mu+beta+j2)
        ratio = kappa * n0 * n3 / (n1 * n2)
        delta = n1 * n2 - kappa * n0 * n3
        out = [
            Inequality("ratio_lower", rho, ratio, strict=False, equal_at_zero=True),
            Inequality("ratio_upper", ratio, 1, strict=True),
            Inequality("turanian_upper", delta, (1 - rho) * n1 * n2, strict=False, equal_at_zero=True),
        ]
        alpha = quad.alpha_integer()
        if alpha is None or alpha < 0:
            # hypothesis fails; bounds_check marks this side skipped
            out.append(Inequality("turanian_lower", delta, delta, strict=False))
            return out
        j1, j2 = g_shift(quad.a1, q), g_shift(quad.a2, q)
        lower = (
            b0 * b0
            * (
                q_pochhammer(a * q**alpha, q, j1) * q_pochhammer(a * t, q, j2)
                - q_pochhammer(a, q, alpha + j1) * q_pochhammer(a * t, q, j2) / q_pochhammer(a * t, q, alpha)
            )
            / (1 - q) ** (j1 + j2)
        )
        (lower,) = unify(lower) if is_exact(delta) else (to_interval(lower),)
        out.append(Inequality("turanian_lower", lower, delta, strict=False, equal_at_zero=True))
        return out
    ratio = n1 * n2 / (n0 * n3)
    delta = n1 * n2 - n0 * n3
    # delta_1 x; note the factor (1 - a^2 s t) coming from the two cross terms
    upper = (
        -b0 * b1 * x * a * (1 - s) * (1 - t) * (1 - a * a * s * t)
        / ((1 - a) * (1 - a * s * t) * (1 - a * s) * (1 - a * t))
    )
    return [
        Inequality("ratio_lower", rho, ratio, strict=True),
        Inequality("ratio_upper", ratio, 1, strict=False, equal_at_zero=True),
        Inequality("turanian_lower", (rho - 1) * n0 * n3, delta, strict=True),
        Inequality("turanian_upper", delta, upper, strict=False, equal_at_zero=True),
    ]


# sides that survive without the full corollary hypotheses
_WEAK_OK = {
    Family.F: {"ratio_lower", "turanian_upper"},
    Family.D: {"ratio_upper", "turanian_upper"},
    Family.H: {"ratio_upper", "turanian_upper"},
    Family.G: set(),
}


def bounds_check(
    spec: FamilySpec,
    quad: Quad,
    x_grid: Sequence,
    *,
    prec: int | None = None,
    radius_order: int = 64,
) -> BoundsReport:
    """Check both two-sided corollary bounds at every ``x`` in ``x_grid``.

    Raises :class:`DomainError` for grid points at or beyond the ratio-test
    radius estimate.  Violated hypotheses are listed in the report and the
    sides that depend on them are marked ``skipped``.
    """
    coeffs = normalized_series(spec, quad.a0, radius_order)[0].coeffs
    try:
        radius = radius_estimate(coeffs, radius_order).value
    except ZeroDivisionError:
        radius = None
    for x in x_grid:
        if x < 0 or (radius is not None and not x < radius):
            raise DomainError(f"x={x} outside [0, R) with R~{radius}")
    issues = tuple(check_hypotheses(spec, quad))
    needs_sum_lower = spec.family is Family.G and "requires alpha <= beta + 1" in issues
    hard = [i for i in issues if i != "requires alpha <= beta + 1"]
    rows, rig_all = [], True
    with working_precision(prec):
        rho = gamma_quad_ratio(quad, prec)
        for x in x_grid:
            vals, kappa, rig = _values_at(spec, quad, x, prec)
            rig_all = rig_all and rig
            for ineq in _sandwiches(spec, quad, x, vals, kappa, rho):
                skip = (hard and ineq.name not in _WEAK_OK[spec.family]) or (
                    needs_sum_lower and ineq.name == "turanian_lower"
                )
                if skip:
                    rows.append(BoundRow(x, ineq.name, ineq.lhs, ineq.rhs, ineq.margin, "skipped", "; ".join(issues)))
                    continue
                status = _judge(ineq, x == 0)
                rows.append(BoundRow(x, ineq.name, ineq.lhs, ineq.rhs, ineq.margin, status))
    return BoundsReport(spec.family, quad, tuple(rows), issues, radius, rig_all)


def turanian_from_exponents(
    spec: FamilySpec, mu, alpha, beta, order: int = DEFAULT_ORDER, *, prec: int | None = None
) -> TuranianReport:
    """:func:`turanian_coeffs` with real exponents instead of a quadruple."""
    with working_precision(prec):
        quad = Quad.from_exponents(spec.q, mu, alpha, beta)
        return turanian_coeffs(spec, quad, order, prec=prec)
