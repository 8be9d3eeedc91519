"""Command line front end: batch verification, conjecture exploration, tables.

Exit codes: 0 when every check passes, 1 when at least one check fails or
stays undetermined, 2 for usage and domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import mpmath

from . import __version__
from .examples import (
    BASE_NAMES,
    ExampleName,
    bessel_turan,
    classical_bessel_i,
    decr_condition,
    example_spec,
    load_manifest,
    named_base,
    q_bessel,
)
from .identities import verify_heine_gauss, verify_q_binomial, verify_symmetric_vandermonde
from .qcore import (
    DEFAULT_PREC,
    DomainError,
    QTuranError,
    Sign,
    is_exact,
    q_pochhammer,
    q_pochhammer_inf,
    qpow,
    to_interval,
    working_precision,
)
from .series import Family, FamilySpec, dual_spec, evaluate_family, normalized_series, radius_estimate
from .seqprops import (
    Direction,
    check_cm_proxy,
    check_gg_three_point,
    gg_passes,
    is_doubly_positive,
)
from .turanian import (
    Quad,
    ak_diagnostics,
    bounds_check,
    s_m_closed,
    s_m_direct,
    turanian_coeffs,
    turanian_value,
)

PASS, FAIL, UNDET, SKIP = "pass", "fail", "undetermined", "skipped"
THEOREMS = (
    "T1", "T2", "T3", "T4", "L6", "L7",
    "C-bounds-F", "C-bounds-D", "C-bounds-G", "C-bounds-H",
    "EX1", "DUAL", "SEQ",
)
DEFAULT_SEED = 20240101


class UsageError(QTuranError):
    pass


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def fmt(x) -> str:
    """Stable text for a scalar: ``p/q`` when exact, ``[lo, hi]`` otherwise."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if is_exact(x):
        return str(Fraction(x))
    if isinstance(x, float):
        return repr(x)
    x = to_interval(x)
    with mpmath.workprec(mpmath.iv.prec):
        return f"[{mpmath.nstr(mpmath.mpf(x.a), 17)}, {mpmath.nstr(mpmath.mpf(x.b), 17)}]"


def approx(x) -> float | None:
    if x is None:
        return None
    if is_exact(x) or isinstance(x, float):
        return float(x)
    return float(to_interval(x).mid)


@dataclass
class Row:
    params: dict
    verdict: str
    certified: bool = True
    m_range: tuple | None = None
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"params": {k: fmt(v) if not isinstance(v, str) else v for k, v in self.params.items()}}
        if self.m_range is not None:
            out["m_range"] = list(self.m_range)
        out["verdict"] = self.verdict
        out["certified"] = self.certified
        out["detail"] = {k: v if isinstance(v, (str, int, bool, list)) or v is None else fmt(v) for k, v in self.detail.items()}
        return out


@dataclass
class Report:
    theorem: str
    grid: str
    mode: str
    order: int | None
    seed: int | None
    rows: list

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, UNDET: 0}
        for r in self.rows:
            if r.verdict in counts:
                counts[r.verdict] += 1
        return counts

    @property
    def exit_code(self) -> int:
        s = self.summary
        return 0 if s[FAIL] == 0 and s[UNDET] == 0 else 1

    def to_json(self) -> str:
        data = {
            "meta": {"theorem": self.theorem, "grid": self.grid, "mode": self.mode, "order": self.order, "seed": self.seed},
            "rows": [r.as_dict() for r in self.rows],
            "summary": self.summary,
        }
        return json.dumps(data, indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        rows = [r.as_dict() for r in self.rows]
        pkeys = sorted({k for r in rows for k in r["params"]})
        dkeys = sorted({k for r in rows for k in r["detail"]})
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(pkeys + ["m_range", "verdict", "certified"] + dkeys)
        for r in rows:
            mr = r.get("m_range")
            w.writerow(
                [r["params"].get(k, "") for k in pkeys]
                + ["" if mr is None else f"{mr[0]}..{mr[1]}", r["verdict"], str(r["certified"]).lower()]
                + [json.dumps(r["detail"].get(k)) if isinstance(r["detail"].get(k), list) else r["detail"].get(k, "") for k in dkeys]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"# {self.theorem} grid={self.grid} mode={self.mode} order={self.order} seed={self.seed}"]
        for r in self.rows:
            ps = " ".join(f"{k}={fmt(v) if not isinstance(v, str) else v}" for k, v in r.params.items())
            mr = "" if r.m_range is None else f" m={r.m_range[0]}..{r.m_range[1]}"
            cert = "" if r.certified else " (interval)"
            lines.append(f"{r.verdict.upper():13s} {ps}{mr}{cert}")
        s = self.summary
        lines.append(f"summary: pass={s[PASS]} fail={s[FAIL]} undetermined={s[UNDET]}")
        return "\n".join(lines) + "\n"

    def render(self, fmt_name: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt_name]()


# ---------------------------------------------------------------------------
# grid helpers
# ---------------------------------------------------------------------------


def parse_token(token: str, q: Fraction) -> Fraction:
    token = str(token).strip()
    if token == "q":
        return q
    if token.startswith("q^"):
        return q ** int(token[2:])
    return Fraction(token)


def parse_list(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [t for t in text.split(",") if t.strip()]


def _grid(name: str, section: str) -> dict:
    manifest = load_manifest()
    if name == "small" and section == "turanian":
        return manifest["small"]
    if name in ("full", "default", "acceptance"):
        return manifest[section]
    raise UsageError(f"unknown grid {name!r}")


def _interval_quad(quad: Quad, prec: int) -> Quad:
    with working_precision(prec):
        vals = [to_interval(v) for v in quad.values]
        return Quad(to_interval(quad.q), *vals)


def _float_spec(spec: FamilySpec) -> FamilySpec:
    base = spec.base
    return FamilySpec(spec.family, lambda n: to_interval(base(n)), to_interval(spec.q), spec.a, spec.name, spec.meta)


def _sign_rows(report, lo: int, want: Sign) -> tuple[str, bool, dict]:
    signs = [v.sign for v in report.verdicts[lo:]]
    certified = all(v.certified for v in report.verdicts[lo:])
    bad = [lo + i for i, s in enumerate(signs) if s is not want and s is not Sign.UNDETERMINED]
    und = [lo + i for i, s in enumerate(signs) if s is Sign.UNDETERMINED]
    verdict = FAIL if bad else UNDET if und else PASS
    detail = {"pattern": str(report.pattern), "kappa": report.kappa, "first_bad": bad[0] if bad else None}
    if und:
        detail["undetermined_m"] = und
    return verdict, certified, detail


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


@dataclass
class Options:
    q: list | None = None
    grid: str = "default"
    order: int | None = None
    mode: str = "exact"
    prec: int = DEFAULT_PREC
    m_max: int | None = None
    mu: list | None = None
    seed: int = DEFAULT_SEED
    samples: int | None = None


_THEOREM_FAMILY = {"T1": Family.F, "T2": Family.D, "T4": Family.H}


def suite_turanian_sign(theorem: str, opt: Options) -> Report:
    """Theorems for families F, D and H over an exact quadruple grid."""
    fam = _THEOREM_FAMILY[theorem]
    g = _grid(opt.grid, "turanian")
    order = opt.order or g["order"]
    qs = [Fraction(v) for v in (opt.q or g["q"])]
    rows = []
    for q in qs:
        if opt.mu is not None:
            a_vals = []
            for mu in opt.mu:
                mu = Fraction(mu)
                if fam in (Family.D, Family.H) and mu <= 0:
                    raise UsageError(f"{theorem} requires mu > 0, got {mu}")
                if mu < 0:
                    raise UsageError(f"{theorem} requires mu >= 0, got {mu}")
                a_vals.append(qpow(q, mu, exact_only=True))
        else:
            a_vals = [parse_token(t, q) for t in g["a"]]
        s_vals = [parse_token(t, q) for t in g["s"]]
        t_vals = [parse_token(t, q) for t in g["t"]]
        for base_name in g["bases"]:
            spec = FamilySpec(fam, named_base(base_name, q), q, name=base_name)
            if opt.mode == "float":
                spec = _float_spec(spec)
            for a in a_vals:
                for s in s_vals:
                    for t in t_vals:
                        if fam in (Family.D, Family.H) and not a < 1:
                            raise UsageError(f"{theorem} requires 0 < q^mu < 1")
                        quad = Quad.from_powers(q, a, s, t)
                        if opt.mode == "float":
                            quad = _interval_quad(quad, opt.prec)
                        rep = turanian_coeffs(spec, quad, order, prec=opt.prec)
                        if fam is Family.D:
                            lo, want = 0, Sign.NEGATIVE
                        elif fam is Family.F:
                            lo, want = 1, Sign.POSITIVE
                        else:
                            lo, want = 1, Sign.NEGATIVE
                        verdict, cert, detail = _sign_rows(rep, lo, want)
                        if lo == 1:
                            zero0 = rep.verdicts[0].sign is Sign.ZERO
                            detail["delta0_zero"] = zero0
                            if not zero0 and verdict == PASS:
                                verdict = FAIL
                        rows.append(Row({"q": q, "base": base_name, "a": a, "s": s, "t": t}, verdict, cert, (lo, order), detail))
    return Report(theorem, opt.grid, opt.mode, order, None, rows)


def _gamma_grid(opt: Options):
    g = _grid(opt.grid, "gamma_denominator")
    qs = [Fraction(v) for v in (opt.q or g["q"])]
    mus = [Fraction(v) for v in (opt.mu or g["mu"])]
    return g, qs, mus


def suite_t3(opt: Options) -> Report:
    """Theorem for family G; alpha > beta + 1 rows check the sum at sampled x."""
    g, qs, mus = _gamma_grid(opt)
    order = opt.order or g["order"]
    rows = []
    for q in qs:
        for base_name in g["bases"]:
            spec = FamilySpec(Family.G, named_base(base_name, q), q, name=base_name)
            for mu in mus:
                for al in map(Fraction, g["alpha"]):
                    for be in map(Fraction, g["beta"]):
                        if mu < max(-be, -1):
                            raise UsageError(f"T3 requires mu >= max(-beta, -1), got mu={mu}")
                        try:
                            quad = Quad.from_exponents(q, mu, al, be)
                        except DomainError as exc:
                            raise UsageError(str(exc)) from exc
                        if opt.mode == "exact" and not quad.exact:
                            raise UsageError(f"q={q}: q^{mu}, q^{be} not rational; use --mode float or a perfect-square q")
                        if opt.mode == "float":
                            quad = _interval_quad(quad, opt.prec)
                        params = {"q": q, "base": base_name, "mu": mu, "alpha": al, "beta": be}
                        if al > be + 1:
                            rows.append(Row(params, SKIP, True, None, {"note": "alpha > beta + 1 lies outside the theorem"}))
                            continue
                        rep = turanian_coeffs(spec if opt.mode == "exact" else _float_spec(spec), quad, order, prec=opt.prec)
                        verdict, cert, detail = _sign_rows(rep, 0, Sign.POSITIVE)
                        m_max = opt.m_max if opt.m_max is not None else g["lemma_m_max"]
                        ak = _ak_summary(spec, quad, al, m_max, opt.prec)
                        detail.update(ak)
                        if verdict == PASS and not ak["ak_ok"]:
                            verdict = FAIL
                        rows.append(Row(params, verdict, cert, (0, order), detail))
    return Report("T3", opt.grid, opt.mode, order, None, rows)


def _ak_summary(spec, quad, alpha, m_max: int, prec: int) -> dict:
    """A_k sign pattern and the positive total for ``m <= m_max``.

    At ``alpha = 1`` the total times ``(1-ab)/(1-q)`` must equal the closed
    form of the reciprocal q-gamma sum exactly.
    """
    worst_changes, closed_ok, positive = 0, True, True
    a, b = quad.a0, quad.t if alpha == 1 else None
    for m in range(m_max + 1):
        d = ak_diagnostics(spec, quad, m, prec=prec)
        worst_changes = max(worst_changes, d.sign_changes)
        total = d.partial_sum
        positive = positive and (total > 0 if is_exact(total) else bool(to_interval(total) > 0))
        if b is not None and is_exact(total):
            closed_ok = closed_ok and total * (1 - a * b) / (1 - spec.q) == s_m_closed(a, b, spec.q, m)
    return {
        "ak_max_sign_changes": worst_changes,
        "sum_positive": positive,
        "closed_form_equal": closed_ok if b is not None else None,
        "ak_ok": worst_changes <= 1 and positive and closed_ok,
    }


def suite_l7(opt: Options) -> Report:
    """Closed form of the reciprocal q-gamma sum against direct summation."""
    g, qs, mus = _gamma_grid(opt)
    m_max = opt.m_max if opt.m_max is not None else g["lemma_m_max"]
    rng = random.Random(opt.seed)
    cases = []
    for q in qs:
        for mu in mus:
            for be in map(Fraction, g["beta"]):
                cases.append((q, qpow(q, mu), qpow(q, be), {"mu": mu, "beta": be}))
    for _ in range(opt.samples or 10):
        q = Fraction(rng.randint(1, 9), 10)
        cases.append((q, Fraction(rng.randint(1, 19), 20), Fraction(rng.randint(1, 19), 20), {"random": "yes"}))
    rows = []
    for q, a, b, extra in cases:
        worst, ok = Fraction(0), True
        for m in range(m_max + 1):
            d, c = s_m_direct(a, b, q, m), s_m_closed(a, b, q, m)
            worst = max(worst, abs(d - c))
            ok = ok and d == c
        rows.append(Row({"q": q, "a": a, "b": b, **extra}, PASS if ok else FAIL, True, (0, m_max), {"residual": worst}))
    return Report("L7", opt.grid, opt.mode, None, opt.seed, rows)


def _rand_unit(rng: random.Random, den: int = 12) -> Fraction:
    return Fraction(rng.randint(1, den - 1), den)


def suite_l6(opt: Options) -> Report:
    rng = random.Random(opt.seed)
    n = opt.samples or 50
    rows = []
    for _ in range(n):
        a, b, q = _rand_unit(rng), _rand_unit(rng), _rand_unit(rng)
        r = verify_symmetric_vandermonde(a, b, q, 16)
        rows.append(Row({"identity": "symmetric_vandermonde", "a": a, "b": b, "q": q}, PASS if r.passed else FAIL, True, (0, 16), {"residual": r.residual}))
    for _ in range(n):
        a, q = _rand_unit(rng), _rand_unit(rng)
        r = verify_q_binomial(a, q, 20)
        rows.append(Row({"identity": "q_binomial", "a": a, "q": q}, PASS if r.passed else FAIL, True, (0, 20), {"residual": r.residual}))
    count = 0
    while count < 20:
        a, b, c, q = _rand_unit(rng), _rand_unit(rng), _rand_unit(rng), _rand_unit(rng)
        if not c < a * b:
            continue
        count += 1
        r = verify_heine_gauss(a, b, c, q, prec=opt.prec)
        rows.append(Row({"identity": "heine_gauss", "a": a, "b": b, "c": c, "q": q}, PASS if r.passed else FAIL, False, None, {"residual": r.residual, "bound": r.bound}))
    return Report("L6", opt.grid, "mixed", None, opt.seed, rows)


def _bounds_setup(fam: Family, q: Fraction | None = None):
    g = load_manifest()["bounds"]
    q = q if q is not None else Fraction(g["q"])
    cfg = g[fam.value]
    spec = FamilySpec(fam, named_base(cfg["base"], q), q, name=cfg["base"])
    if fam is Family.G:
        quad = Quad.from_exponents(q, Fraction(cfg["mu"]), Fraction(cfg["alpha"]), Fraction(cfg["beta"]))
    else:
        quad = Quad.from_powers(q, Fraction(cfg["a"]), Fraction(cfg["s"]), Fraction(cfg["t"]))
    return spec, quad, g["x_points"]


def bounds_grid(spec: FamilySpec, quad: Quad, n_points: int, order: int = 64) -> list[Fraction]:
    """``n_points`` exact points in ``[0, R)`` starting at 0 (R capped at 4)."""
    coeffs = normalized_series(spec, quad.a0, order)[0].coeffs
    radius = radius_estimate(coeffs, order).value
    rmax = min(Fraction(approx(radius)).limit_denominator(1000) * Fraction(9, 10), Fraction(4))
    return [rmax * Fraction(k, n_points) for k in range(n_points)]


def suite_bounds(fam: Family, opt: Options) -> Report:
    spec, quad, n_points = _bounds_setup(fam, Fraction(opt.q[0]) if opt.q else None)
    xs = bounds_grid(spec, quad, n_points)
    rep = bounds_check(spec, quad, xs, prec=opt.prec)
    rows = []
    for r in rep.rows:
        verdict = {"pass": PASS, "fail": FAIL, "undetermined": UNDET, "skipped": SKIP}[r.status]
        cert = is_exact(r.margin)
        rows.append(Row({"x": r.x, "bound": r.name}, verdict, cert, None, {"lhs": r.lhs, "rhs": r.rhs, "margin": r.margin, "note": r.note or None}))
    return Report(f"C-bounds-{fam.value}", opt.grid, "mixed", None, None, rows)


def bessel_y_grid(j: int, n: int, y_max: Fraction) -> list[Fraction]:
    top = min(Fraction(2) if j == 1 else y_max, y_max)
    return [top * Fraction(k, n + 1) for k in range(1, n + 1)]


def suite_ex1(opt: Options) -> Report:
    g = load_manifest()["bessel"]
    q = Fraction(opt.q[0]) if opt.q else Fraction(g["q"])
    rows = []
    for j in g["j"]:
        for nu in map(Fraction, g["nu"]):
            for y in bessel_y_grid(j, g["y_points"], Fraction(g["y_max"])):
                bt = bessel_turan(j, nu, y, q, prec=opt.prec)
                lo_ok, hi_ok = bt.margin_lower, bt.margin_upper
                verdict = PASS if (lo_ok >= 0 and hi_ok >= 0) else FAIL if (lo_ok < 0 or hi_ok < 0) else UNDET
                rows.append(Row({"j": j, "nu": nu, "y": y, "q": q}, verdict, False, None, {"lower": bt.lower, "value": bt.middle, "upper": bt.upper}))
    lq = Fraction(g["limit_q"])
    val = q_bessel(1, 1, (1 - lq), lq, prec=opt.prec)
    ref = classical_bessel_i(1, 1)
    rel = abs(float(val.mid) - float(ref)) / float(ref)
    rows.append(Row({"check": "q_to_1", "q": lq}, PASS if rel < 0.01 else FAIL, False, None, {"relative_error": repr(rel)}))
    return Report("EX1", opt.grid, "float", None, None, rows)


def suite_dual(opt: Options) -> Report:
    rng = random.Random(opt.seed)
    order = opt.order or 32
    rows = []
    for i in range(opt.samples or 20):
        q = _rand_unit(rng, 10)
        fam = (Family.D, Family.G)[i % 2]
        c1, c2 = _rand_unit(rng), _rand_unit(rng)
        base = (lambda c1, c2, q: (lambda n: q_pochhammer(c1, q, n) / q_pochhammer(c2, q, n)))(c1, c2, q)
        spec = FamilySpec(fam, base, q)
        a = _rand_unit(rng)
        s1 = normalized_series(spec, a, order)[0]
        s2 = normalized_series(dual_spec(spec), a, order)[0]
        back = normalized_series(dual_spec(dual_spec(spec)), a, order)[0]
        ok = s1.coeffs == s2.coeffs == back.coeffs
        rows.append(Row({"family": fam.value, "q": q, "a": a, "b": c1, "c": c2}, PASS if ok else FAIL, True, (0, order), {}))
    return Report("DUAL", opt.grid, "exact", order, opt.seed, rows)


def example_instances(q: Fraction) -> list[tuple[str, dict]]:
    """One admissible parameter set per named example (q = 1/2 defaults)."""
    return [
        ("QBessel1", {}),
        ("QBessel2", {"nu": Fraction(1)}),
        ("QKummer1", {"b": Fraction(1, 3)}),
        ("QKummer2", {"b": Fraction(1, 3)}),
        ("QKummer1Denominator", {"a": q * q}),
        ("QKummer2Denominator", {"a": q * q}),
        ("Heine2phi1Upper", {"b": q * q, "c": q}),
        ("Heine2phi1Lower", {"a": q * q, "b": q * q}),
        ("RPlus1PhiS", {"alphas": [Fraction(2)], "betas": [Fraction(1)]}),
        ("RPhiSUnitDenominator", {"alphas": [Fraction(1)], "betas": [Fraction(1)]}),
    ]


def _log_grid(lo: Fraction, hi: Fraction, n: int) -> tuple[list[Fraction], Fraction]:
    """``n`` points ``lo * r^k`` with exact ratio ``r`` chosen so the last is < hi."""
    r = Fraction(3, 4)
    pts = [hi * r ** (k + 1) for k in range(n)]
    return sorted(pts), r


def suite_seq(opt: Options) -> Report:
    q = Fraction(opt.q[0]) if opt.q else Fraction(1, 2)
    cfg = load_manifest()["seqprops"]
    rows = []
    for c, ratio in ((Fraction(3), Fraction(1, 2)), (Fraction(1, 5), Fraction(7, 3))):
        prof = is_doubly_positive([c * ratio**k for k in range(12)])
        ok = prof.doubly_positive and prof.tight
        rows.append(Row({"check": "geometric", "c": c, "ratio": ratio}, PASS if ok else FAIL, True, None, {"tight": prof.tight}))
    for name, params in example_instances(q):
        spec = example_spec(name, params, q)
        prof = is_doubly_positive(spec.base_coeffs(16))
        rows.append(Row({"check": "example_pf2", "example": name}, PASS if prof.doubly_positive else FAIL, True, (0, 16), {}))
    n_log, n_cm, cm_order = cfg["log_grid_points"], cfg["cm_grid_points"], cfg["cm_order"]
    for fam in Family:
        spec, quad, _ = _bounds_setup(fam, q)
        sign = -1 if fam in (Family.D, Family.H) else 1
        f = (lambda spec, quad, sign: (lambda x: sign * turanian_value(spec, quad, x, prec=opt.prec)))(spec, quad, sign)
        coeffs = normalized_series(spec, quad.a0, 64)[0].coeffs
        radius = Fraction(approx(radius_estimate(coeffs, 64).value)).limit_denominator(1000)
        rmax = min(radius, Fraction(4))
        pts, step = _log_grid(Fraction(0), rmax * Fraction(9, 10), n_log + 2)
        verdicts = [check_gg_three_point(f, x, step, Direction.CONVEX) for x in pts[1:-1]]
        ok = all(gg_passes(v) for v in verdicts)
        rows.append(Row({"check": "gg_convex", "family": fam.value}, PASS if ok else FAIL, False, None, {"points": len(verdicts)}))
        # y -> sign * Delta(1/y) on a uniform grid inside (1/R, inf)
        y0 = 1 / rmax + Fraction(1, 4)
        ys = [y0 + Fraction(k, 2) for k in range(n_cm)]
        g = (lambda f: (lambda y: f(1 / y)))(f)
        cm = check_cm_proxy(g, ys, cm_order)
        rows.append(Row({"check": "cm_proxy", "family": fam.value}, PASS if cm.passed else FAIL, False, None, {"label": cm.label, "checked": cm.checked}))
    # parameter direction: a -> f(a;x), h(a;x) and (a;q)_inf h-type g series
    pts, step = _log_grid(Fraction(0), Fraction(9, 10), n_log + 2)
    x = Fraction(1, 4)
    for label, fam, base_name, direction, with_inf in (
        ("f_in_a", Family.F, "ones", Direction.CONCAVE, False),
        ("h_in_a", Family.H, "ones", Direction.CONVEX, False),
        ("g_hat_in_a", Family.H, "inv_qpoch", Direction.CONCAVE, True),
    ):
        spec = FamilySpec(fam, named_base(base_name, q), q)
        f = (lambda spec, with_inf: (lambda a: _param_value(spec, a, x, with_inf, opt.prec)))(spec, with_inf)
        verdicts = [check_gg_three_point(f, a, step, direction) for a in pts[1:-1]]
        ok = all(gg_passes(v) for v in verdicts)
        rows.append(Row({"check": label, "x": x}, PASS if ok else FAIL, False, None, {"points": len(verdicts)}))
    dec = decr_condition([Fraction(1)], [Fraction(1), Fraction(1)], q)
    g7 = example_spec("RPhiSUnitDenominator", {"alphas": [Fraction(1)], "betas": [Fraction(1)]}, q)
    pf2 = is_doubly_positive(g7.base_coeffs(11)).doubly_positive
    rows.append(Row({"check": "decr_example7"}, PASS if dec.holds and pf2 else FAIL, True, (0, 11), {}))
    return Report("SEQ", opt.grid, "mixed", None, None, rows)


def _param_value(spec: FamilySpec, a, x, with_inf: bool, prec: int):
    v = evaluate_family(spec, a, x, prec=prec).value
    return v * q_pochhammer_inf(a, spec.q, Fraction(1, 2**prec)) if with_inf else v


SUITES: dict[str, Callable[[Options], Report]] = {
    "T1": lambda o: suite_turanian_sign("T1", o),
    "T2": lambda o: suite_turanian_sign("T2", o),
    "T3": suite_t3,
    "T4": lambda o: suite_turanian_sign("T4", o),
    "L6": suite_l6,
    "L7": suite_l7,
    "C-bounds-F": lambda o: suite_bounds(Family.F, o),
    "C-bounds-D": lambda o: suite_bounds(Family.D, o),
    "C-bounds-G": lambda o: suite_bounds(Family.G, o),
    "C-bounds-H": lambda o: suite_bounds(Family.H, o),
    "EX1": suite_ex1,
    "DUAL": suite_dual,
    "SEQ": suite_seq,
}


# ---------------------------------------------------------------------------
# conjecture explorer
# ---------------------------------------------------------------------------


@dataclass
class ConjectureSample:
    alpha: Fraction
    q: Fraction
    mu: Fraction
    beta: Fraction
    base: str
    signs: list
    first_bad: int | None
    undetermined: list


def sample_alphas(n: int, lo: Fraction, hi: Fraction, dens: Iterable[int], rng: random.Random) -> list[Fraction]:
    dens = list(dens)
    out = []
    while len(out) < n:
        d = rng.choice(dens)
        k = rng.randint(int(lo * d) + 1, int(hi * d) - 1) if int(hi * d) - 1 >= int(lo * d) + 1 else None
        if k is None:
            continue
        a = Fraction(k, d)
        if a.denominator != 1 and lo < a < hi:
            out.append(a)
    return out


def _g_signs(q, mu, alpha, beta, base: str, order: int, prec: int):
    spec = FamilySpec(Family.G, named_base(base, q), q, name=base)
    with working_precision(prec):
        quad = Quad.from_exponents(q, mu, alpha, beta)
        if not quad.exact:
            quad = _interval_quad(quad, prec)
            spec = _float_spec(spec)
        rep = turanian_coeffs(spec, quad, order, prec=prec)
    signs = [v.sign for v in rep.verdicts]
    bad = [m for m, s in enumerate(signs) if s in (Sign.NEGATIVE, Sign.ZERO)]
    und = [m for m, s in enumerate(signs) if s is Sign.UNDETERMINED]
    return signs, (bad[0] if bad else None), und


def minimize_counterexample(s: ConjectureSample, order: int, prec: int, steps: int = 12) -> dict:
    """Smallest failing m, then bisect alpha toward the nearest integer."""
    m = s.first_bad
    target = Fraction(round(s.alpha))
    good_side, bad_side = target, s.alpha
    for _ in range(steps):
        mid = (good_side + bad_side) / 2
        if mid.denominator == 1:
            break
        _, fb, _ = _g_signs(s.q, s.mu, mid, s.beta, s.base, m, prec)
        if fb is not None:
            bad_side = mid
        else:
            good_side = mid
    return {"alpha": str(bad_side), "m": m, "q": str(s.q), "mu": str(s.mu), "beta": str(s.beta), "base": s.base}


def run_conjecture(
    *,
    samples: int,
    alpha_lo: Fraction,
    alpha_hi: Fraction,
    order: int,
    seed: int,
    prec: int,
    qs=None,
    betas=None,
    mus=None,
    bases=None,
    alphas=None,
) -> dict:
    g = load_manifest()
    gg, cc = g["gamma_denominator"], g["conjecture"]
    qs = [Fraction(v) for v in (qs or gg["q"])]
    betas = [Fraction(v) for v in (betas or gg["beta"])]
    mus = [Fraction(v) for v in (mus or gg["mu"])]
    bases = list(bases or gg["bases"])
    rng = random.Random(seed)
    if alphas is None:
        if samples <= 0 or not alpha_lo < alpha_hi:
            raise UsageError("empty alpha range")
        alphas = sample_alphas(samples, alpha_lo, alpha_hi, cc["alpha_denominators"], rng)
    if not alphas:
        raise UsageError("empty alpha range")
    rows, counter = [], None
    for alpha in alphas:
        q, mu, beta, base = rng.choice(qs), rng.choice(mus), rng.choice(betas), rng.choice(bases)
        if mu < max(-beta, -1):
            continue
        signs, fb, und = _g_signs(q, mu, alpha, beta, base, order, prec)
        s = ConjectureSample(alpha, q, mu, beta, base, signs, fb, und)
        rows.append(s)
        if fb is not None and counter is None:
            counter = minimize_counterexample(s, order, prec)
    controls = []
    for q in qs:
        for mu in mus:
            for beta in betas:
                for alpha in (Fraction(1), Fraction(2)):
                    if alpha > beta + 1:
                        continue
                    signs, fb, und = _g_signs(q, mu, alpha, beta, bases[0], order, prec)
                    controls.append({"alpha": str(alpha), "q": str(q), "mu": str(mu), "beta": str(beta), "verdict": PASS if fb is None and not und else FAIL})
    n_bad = sum(1 for r in rows if r.first_bad is not None)
    n_und = sum(1 for r in rows if r.first_bad is None and r.undetermined)
    if n_bad:
        summary = f"{n_bad} counterexample(s) in {len(rows)} samples"
    else:
        summary = f"no counterexample found in {len(rows)} samples"
    return {
        "label": "CONJECTURE",
        "meta": {"family": "G", "order": order, "seed": seed, "samples": len(rows)},
        "rows": [
            {
                "alpha": str(r.alpha), "q": str(r.q), "mu": str(r.mu), "beta": str(r.beta), "base": r.base,
                "signs": "".join({Sign.POSITIVE: "+", Sign.NEGATIVE: "-", Sign.ZERO: "0", Sign.UNDETERMINED: "?"}[s] for s in r.signs),
                "first_bad": r.first_bad,
            }
            for r in rows
        ],
        "controls": controls,
        "summary": {"text": summary, "counterexamples": n_bad, "undetermined": n_und, "controls_pass": all(c["verdict"] == PASS for c in controls)},
        "counterexample": counter,
    }


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

TABLE_COLUMNS = ("x", "lower", "value", "upper", "margin_lower", "margin_upper", "status")


def table_rows(example: str, params: dict, xs: list, q: Fraction, prec: int) -> tuple[list[str], list[list[str]]]:
    """Rows with the column order params..., x, lower, value, upper, margins."""
    name = ExampleName(example)
    pkeys = sorted(params)
    out = []
    if name in (ExampleName.QBessel1, ExampleName.QBessel2):
        j = 1 if name is ExampleName.QBessel1 else 2
        nu = Fraction(params.get("nu", 1))
        for y in xs:
            try:
                bt = bessel_turan(j, nu, y, q, prec=prec)
                vals = [bt.lower, bt.middle, bt.upper, bt.margin_lower, bt.margin_upper]
                status = "ok" if bt.holds else "violated"
            except DomainError as exc:
                vals, status = [None] * 5, f"outside_domain: {exc}"
            out.append([fmt(params[k]) for k in pkeys] + [fmt(y)] + [fmt_mid(v) for v in vals] + [status])
        return pkeys + list(TABLE_COLUMNS), out
    mu, al, be = (Fraction(params.pop(k)) for k in ("mu", "alpha", "beta"))
    pkeys = sorted(params) + ["mu", "alpha", "beta"]
    spec = example_spec(name, params, q)
    quad = Quad.from_exponents(q, mu, al, be)
    for x in xs:
        try:
            rep = bounds_check(spec, quad, [x], prec=prec)
            low = next(r for r in rep.rows if r.name == "turanian_lower")
            up = next(r for r in rep.rows if r.name == "turanian_upper")
            value = low.rhs
            vals = [low.lhs, value, up.rhs, low.margin, up.margin]
            status = "ok" if all(r.status in ("pass", "skipped") for r in rep.rows) else "violated"
        except DomainError as exc:
            vals, status = [None] * 5, f"outside_radius: {exc}"
        row_params = {**params, "mu": mu, "alpha": al, "beta": be}
        out.append([fmt(row_params[k]) if not isinstance(row_params[k], list) else ";".join(map(str, row_params[k])) for k in pkeys] + [fmt(x)] + [fmt_mid(v) for v in vals] + [status])
    return pkeys + list(TABLE_COLUMNS), out


def fmt_mid(v) -> str:
    if v is None:
        return ""
    if is_exact(v):
        return str(Fraction(v))
    with mpmath.workprec(mpmath.iv.prec):
        return mpmath.nstr(mpmath.mpf(to_interval(v).mid), 20)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qturan", description="Certified Turan-type inequalities for q-series families.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("theorem", choices=THEOREMS)
    v.add_argument("--q", help="comma separated q values")
    v.add_argument("--grid", default="default", help="grid name from the manifest (default, small)")
    v.add_argument("--order", type=int)
    v.add_argument("--mode", choices=("exact", "float"), default="exact")
    v.add_argument("--prec", type=int, default=DEFAULT_PREC, help="interval precision in bits")
    v.add_argument("--m-max", type=int, dest="m_max")
    v.add_argument("--mu", help="comma separated exponents mu")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--samples", type=int)
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--output")

    c = sub.add_parser("conjecture", help="explore family G positivity for non-integer alpha")
    c.add_argument("--samples", type=int, default=None)
    c.add_argument("--alpha-min", type=_frac, default=None)
    c.add_argument("--alpha-max", type=_frac, default=None)
    c.add_argument("--alpha", help="explicit comma separated alpha values")
    c.add_argument("--q")
    c.add_argument("--beta")
    c.add_argument("--mu")
    c.add_argument("--base", help="comma separated base names: " + ",".join(BASE_NAMES))
    c.add_argument("--order", type=int)
    c.add_argument("--prec", type=int, default=DEFAULT_PREC)
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--output")

    t = sub.add_parser("table", help="tabulate an example and its bounds")
    t.add_argument("example", choices=[e.value for e in ExampleName])
    t.add_argument("--param", action="append", default=[], help="key=value (lists as a;b)")
    t.add_argument("--q", type=_frac, default=Fraction(1, 2))
    t.add_argument("--x", required=True, help="comma separated grid points")
    t.add_argument("--prec", type=int, default=DEFAULT_PREC)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--output")
    return p


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_params(items: list[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"malformed --param {item!r}")
        k, v = item.split("=", 1)
        out[k] = [Fraction(x) for x in v.split(";")] if ";" in v or k in ("alphas", "betas") else Fraction(v)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            if args.mode == "float" and args.prec is None:
                raise UsageError("--mode float needs --prec")
            opt = Options(
                q=parse_list(args.q), grid=args.grid, order=args.order, mode=args.mode, prec=args.prec,
                m_max=args.m_max, mu=parse_list(args.mu), seed=args.seed, samples=args.samples,
            )
            with working_precision(args.prec):
                report = SUITES[args.theorem](opt)
                text = report.render(args.format)
            _write(text, args.output)
            return report.exit_code
        if args.command == "conjecture":
            cfg = load_manifest()["conjecture"]
            explicit = [Fraction(a) for a in parse_list(args.alpha)] if args.alpha is not None else None
            if explicit is not None and not explicit:
                raise UsageError("empty alpha range")
            result = run_conjecture(
                samples=args.samples if args.samples is not None else cfg["samples"],
                alpha_lo=args.alpha_min if args.alpha_min is not None else Fraction(cfg["alpha_range"][0]),
                alpha_hi=args.alpha_max if args.alpha_max is not None else Fraction(cfg["alpha_range"][1]),
                order=args.order or cfg["order"],
                seed=args.seed if args.seed is not None else cfg["seed"],
                prec=args.prec,
                qs=parse_list(args.q), betas=parse_list(args.beta), mus=parse_list(args.mu),
                bases=parse_list(args.base), alphas=explicit,
            )
            _write(json.dumps(result, indent=2) + "\n", args.output)
            ok = result["counterexample"] is None and result["summary"]["controls_pass"]
            return 0 if ok else 1
        if args.command == "table":
            params = _parse_params(args.param)
            xs = [Fraction(x) for x in parse_list(args.x)]
            with working_precision(args.prec):
                header, rows = table_rows(args.example, dict(params), xs, args.q, args.prec)
            if args.format == "csv":
                buf = io.StringIO()
                w = csv.writer(buf, lineterminator="\n")
                w.writerow(header)
                w.writerows(rows)
                text = buf.getvalue()
            else:
                text = json.dumps({"meta": {"example": args.example, "q": str(args.q)}, "columns": header, "rows": rows}, indent=2) + "\n"
            _write(text, args.output)
            return 0 if all(r[-1] == "ok" for r in rows) else 1
    except (UsageError, DomainError, ValueError) as exc:
        sys.stderr.write(f"qturan: error: {exc}\n")
        return 2
    return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
