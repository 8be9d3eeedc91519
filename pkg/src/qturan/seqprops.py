"""Hypothesis detection (doubly positive sequences) and structural checks.

The three-point and finite-difference checks accept exact or interval
values.  Weak inequalities in Float mode pass when the value is at least
``-tol * scale``, with ``scale`` the largest term entering it, so that
equality cases do not flake.  ``tol`` is ``FLOAT_TOL`` or a few ulps at the
current interval precision, whichever is larger.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from mpmath import iv

from .qcore import DomainError, Scalar, Sign, SignVerdict, is_exact, to_interval

FLOAT_TOL = 1e-20


@dataclass(frozen=True)
class SequenceProfile:
    nonneg: bool
    log_concave: bool
    internal_zeros: tuple
    nontrivial: bool
    tight: bool = False  # f_k^2 == f_{k-1} f_{k+1} at every interior k

    @property
    def doubly_positive(self) -> bool:
        return self.nonneg and self.log_concave and not self.internal_zeros and self.nontrivial


def _ge0(v, scale=None) -> bool | None:
    """``v >= 0`` (weakly, with Float tolerance); None when undecidable."""
    if is_exact(v):
        return v >= 0
    v = to_interval(v)
    tol = max(FLOAT_TOL, 2.0 ** (8 - iv.prec))
    tol *= float(abs(to_interval(scale)).b) if scale is not None else 1.0
    if float(v.a) >= -tol:
        return True
    if float(v.b) < -tol:
        return False
    return None


def is_doubly_positive(seq: Sequence[Scalar]) -> SequenceProfile:
    """Profile a finite prefix ``f_0 .. f_N`` against the PF2 definition.

    An internal zero is an index ``k`` with ``f_k = 0`` and nonzero entries on
    both sides of it.  Undecidable Float comparisons count as failures.
    """
    seq = list(seq)
    nonneg = all(_ge0(f, f) is True for f in seq)
    nz = [k for k, f in enumerate(seq) if not _is_zero(f)]
    internal = tuple(
        k for k, f in enumerate(seq) if nz and nz[0] < k < nz[-1] and _is_zero(f)
    )
    log_concave, tight = True, True
    for k in range(1, len(seq) - 1):
        lhs, rhs = seq[k] * seq[k], seq[k - 1] * seq[k + 1]
        diff = lhs - rhs
        if _ge0(diff, max_abs(lhs, rhs)) is not True:
            log_concave = False
        if not _is_zero(diff):
            tight = False
    return SequenceProfile(nonneg, log_concave, internal, bool(nz), tight and len(seq) >= 3)


def _is_zero(v) -> bool:
    if is_exact(v):
        return v == 0
    v = to_interval(v)
    return v.a == 0 and v.b == 0


def max_abs(*vals):
    best = 0.0
    for v in vals:
        best = max(best, float(abs(to_interval(v)).b))
    return best


class Direction(enum.Enum):
    CONCAVE = "concave"
    CONVEX = "convex"


def gg_gap(evaluator: Callable[[Scalar], Scalar], a, qstep, direction: Direction):
    """``f(a)^2 - f(a/q)f(aq)`` (concave) or its negative (convex), and a scale."""
    if not (0 < qstep < 1):
        raise DomainError("qstep must lie in (0,1)")
    mid, lo, hi = evaluator(a), evaluator(a * qstep), evaluator(a / qstep)
    sq, cross = mid * mid, lo * hi
    gap = sq - cross if direction is Direction.CONCAVE else cross - sq
    return gap, max_abs(sq, cross)


def check_gg_three_point(
    evaluator: Callable[[Scalar], Scalar], a, qstep, direction: Direction
) -> SignVerdict:
    """Jensen multiplicative concavity/convexity at one point.

    The verdict is POSITIVE for a strict pass, ZERO for equality (or a Float
    value within tolerance of it), NEGATIVE for a violation.
    """
    gap, scale = gg_gap(evaluator, a, qstep, direction)
    if is_exact(gap):
        sign = Sign.POSITIVE if gap > 0 else Sign.NEGATIVE if gap < 0 else Sign.ZERO
        return SignVerdict(sign, True)
    g = to_interval(gap)
    if g > 0:
        return SignVerdict(Sign.POSITIVE, False)
    ok = _ge0(g, scale)
    if ok is True:
        return SignVerdict(Sign.ZERO, False)
    if ok is False:
        return SignVerdict(Sign.NEGATIVE, False)
    return SignVerdict(Sign.UNDETERMINED, False)


def gg_passes(verdict: SignVerdict) -> bool:
    return verdict.sign in (Sign.POSITIVE, Sign.ZERO)


@dataclass(frozen=True)
class CMReport:
    """Alternating forward-difference check; a necessary condition only."""

    passed: bool
    n_max: int
    failures: tuple = ()  # (order, start index, value)
    undetermined: tuple = ()
    label: str = "proxy"
    checked: int = 0
    extra: dict = field(default_factory=dict)


def check_cm_proxy(
    evaluator: Callable[[Scalar], Scalar], y_grid: Sequence[Scalar], n_max: int
) -> CMReport:
    """``(-1)^n Delta_h^n f(y_i) >= 0`` for ``n <= n_max`` at every start ``i``."""
    ys = list(y_grid)
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    if len(ys) < n_max + 1 or len(ys) < 2:
        raise DomainError(f"grid of {len(ys)} points too short for order {n_max}")
    h = ys[1] - ys[0]
    for a, b in zip(ys, ys[1:]):
        d = (b - a) - h
        if is_exact(d):
            uniform = d == 0
        else:
            uniform = abs(float(to_interval(d).mid)) <= 1e-12 * max(1.0, abs(float(to_interval(h).mid)))
        if not uniform:
            raise DomainError("grid must be uniform")
    vals = [evaluator(y) for y in ys]
    fails, und, checked = [], [], 0
    for n in range(n_max + 1):
        for i in range(len(ys) - n):
            terms = [comb(n, k) * (-1) ** (n - k) * vals[i + k] for k in range(n + 1)]
            diff = sum(terms[1:], terms[0])
            val = (-1) ** n * diff
            ok = _ge0(val, max_abs(*terms))
            checked += 1
            if ok is False:
                fails.append((n, i, val))
            elif ok is None:
                und.append((n, i, val))
    return CMReport(not fails and not und, n_max, tuple(fails), tuple(und), "proxy", checked)
