from fractions import Fraction as F
from itertools import combinations
from math import prod

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qturan.examples import (
    ExampleName,
    RestrictionError,
    bessel_turan,
    classical_bessel_i,
    decr_condition,
    elementary_symmetric,
    example_spec,
    load_manifest,
    named_base,
    q_bessel,
)
from qturan.qcore import DomainError, qpow, working_precision
from qturan.series import Family, HypergeometricParams, normalized_series, rphis
from qturan.seqprops import is_doubly_positive

Q = F(1, 2)


def _family_coeffs(spec, a, order=10):
    return list(normalized_series(spec, a, order)[0].coeffs)


def test_qkummer2_is_2phi1_with_zero():
    a, b = F(1, 3), F(1, 5)
    spec = example_spec("QKummer2", {"b": b}, Q)
    assert spec.family is Family.F
    want = rphis(HypergeometricParams((a, 0), (b,), Q), 10).coeffs
    assert _family_coeffs(spec, a) == list(want)


def test_qkummer1_is_1phi1_at_minus_z():
    a, b = F(1, 3), F(1, 5)
    spec = example_spec("QKummer1", {"b": b}, Q)
    want = rphis(HypergeometricParams((a,), (b,), Q), 10).coeffs
    assert _family_coeffs(spec, a) == [(-1) ** n * c for n, c in enumerate(want)]


def test_heine_upper_is_2phi1():
    a, b, c = F(1, 3), F(1, 5), F(1, 2)
    spec = example_spec("Heine2phi1Upper", {"b": b, "c": c}, Q)
    assert _family_coeffs(spec, a) == list(rphis(HypergeometricParams((a, b), (c,), Q), 10).coeffs)


def test_heine_lower_is_2phi1_in_denominator_parameter():
    a, b, c = F(1, 4), F(1, 4), F(1, 3)
    spec = example_spec("Heine2phi1Lower", {"a": a, "b": b}, Q)
    assert spec.family is Family.H
    assert _family_coeffs(spec, c) == list(rphis(HypergeometricParams((a, b), (c,), Q), 10).coeffs)


@pytest.mark.parametrize("name,sign", [("QKummer1Denominator", -1), ("QKummer2Denominator", 1)])
def test_qkummer_denominator_variants(name, sign):
    a, b = F(1, 4), F(1, 3)
    spec = example_spec(name, {"a": a}, Q)
    assert spec.family is Family.H
    if sign == 1:
        want = rphis(HypergeometricParams((a, 0), (b,), Q), 10).coeffs
    else:
        want = [(-1) ** n * c for n, c in enumerate(rphis(HypergeometricParams((a,), (b,), Q), 10).coeffs)]
    assert _family_coeffs(spec, b) == list(want)


def test_r_plus_1_phi_s():
    alphas, betas, a = [F(2), F(3)], [F(1), F(1, 2), F(1, 3)], F(1, 3)
    q = F(1, 4)
    up = [a, q**2, q**3]
    with working_precision(200):
        # interval parameters carry the precision they were created with
        spec = example_spec("RPlus1PhiS", {"alphas": alphas, "betas": betas}, q, require_pf2=False)
        lo = [qpow(q, x) for x in betas]
        want = rphis(HypergeometricParams(up, lo, q), 8).coeffs
        got = normalized_series(spec, a, 8)[0].coeffs
    s_r = len(betas) - len(alphas)
    with mp.workdps(50):
        for n, (g, w) in enumerate(zip(got, want)):
            assert mp.almosteq(oracles.mid(g), (-1) ** (n * s_r) * oracles.mid(w), rel_eps=1e-30)


def test_r_phi_s_unit_denominator_against_definition():
    q, mu = F(1, 2), F(3, 2)
    alphas, betas = [F(1)], [F(2)]
    spec = example_spec("RPhiSUnitDenominator", {"alphas": alphas, "betas": betas}, q, require_pf2=False)
    assert spec.family is Family.G
    raw = oracles.raw_coeffs("G", spec.base, q, mu, 8)
    with mp.workdps(60):
        qm = oracles._m(q)
        pref = 1 / oracles.qgamma(mu, q)
        r, s = 1, 2
        for n in range(9):
            term = (
                oracles.qpoch(qm ** int(alphas[0]), qm, n)
                / (oracles.qpoch(qm ** oracles._m(mu), qm, n) * oracles.qpoch(qm ** int(betas[0]), qm, n) * oracles.qpoch(qm, qm, n))
                * ((-1) ** n * qm ** (n * (n - 1) // 2)) ** (1 + s - r)
                * ((1 - qm) * (-1) ** (1 + s - r)) ** n
            )
            assert mp.almosteq(raw[n], pref * term, rel_eps=1e-40)


@pytest.mark.parametrize("nu", [F(1, 2), F(1), F(2)])
@pytest.mark.parametrize("j", [1, 2])
def test_q_bessel_against_oracle(j, nu):
    y = F(3, 2)
    v = q_bessel(j, nu, y, Q, prec=200)
    ref = oracles.q_bessel(j, nu, y, Q)
    with mp.workdps(60):
        assert mp.mpf(v.a) <= ref * (1 + mp.mpf(10) ** -40) and ref * (1 - mp.mpf(10) ** -40) <= mp.mpf(v.b)


def test_q_bessel1_family_mapping():
    # I^(1)_nu(y) = (y/2)^nu (1-q)^-nu g(nu+1; (y/2)^2)
    nu, y = F(1), F(1)
    spec = example_spec("QBessel1", {}, Q)
    g = oracles.raw_value("G", spec.base, Q, nu + 1, (y / 2) ** 2, order=200)
    with mp.workdps(60):
        want = (oracles._m(y) / 2) ** oracles._m(nu) / (1 - oracles._m(Q)) ** oracles._m(nu) * g
        assert mp.almosteq(oracles.q_bessel(1, nu, y, Q), want, rel_eps=1e-40)


@pytest.mark.parametrize("nu", [F(1, 2), F(1), F(2)])
@pytest.mark.parametrize("y", [F(1, 4), F(1), F(19, 10)])
def test_bessel1_turan_sandwich_holds(nu, y):
    assert bessel_turan(1, nu, y, Q, prec=160).holds


def test_bessel2_turan_matches_oracle_counterexample():
    # for j = 2 the base depends on nu; the Turan expression vanishes at y = 2
    # and the lower bound fails (see the decisions ledger)
    nu = F(1)
    for y in (F(1, 2), F(2), F(3)):
        bt = bessel_turan(2, nu, y, Q, prec=200)
        with mp.workdps(60):
            ref = oracles.q_bessel(2, nu, y, Q) ** 2 - oracles.q_bessel(2, nu - 1, y, Q) * oracles.q_bessel(2, nu + 1, y, Q)
            assert abs(oracles.mid(bt.middle) - ref) < mp.mpf(10) ** -30 * max(1, abs(ref))
        assert not bt.holds


def test_bessel_domain():
    with pytest.raises(DomainError):
        q_bessel(1, 1, F(5, 2), Q)
    with pytest.raises(DomainError):
        q_bessel(3, 1, F(1), Q)


def test_bessel_q_to_one_limit():
    q = F(999, 1000)
    v = q_bessel(1, 1, 1 - q, q, prec=128)
    ref = classical_bessel_i(1, 1)
    assert abs(float(v.mid) - float(ref)) / float(ref) < 0.01


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=0, max_value=5, max_denominator=9), min_size=0, max_size=6), st.integers(0, 6))
def test_elementary_symmetric_matches_combinations(c, m):
    if m > len(c):
        with pytest.raises(DomainError):
            elementary_symmetric(m, c)
        return
    assert elementary_symmetric(m, c) == sum((prod(t) for t in combinations(c, m)), F(0))


def test_elementary_symmetric_small():
    assert elementary_symmetric(0, [F(5)]) == 1
    assert elementary_symmetric(2, [1, 2, 3]) == 11
    assert elementary_symmetric(3, [F(1, 2), 2, 3]) == 3


def test_decr_single_pair():
    assert decr_condition([F(2)], [F(1)], Q).holds
    assert decr_condition([F(1)], [F(1)], Q).holds
    rep = decr_condition([F(1)], [F(2)], Q)
    assert not rep.holds and rep.first_failure == 1


def test_decr_implies_log_concave_base():
    alphas, betas = [F(2), F(3)], [F(1), F(1), F(1, 2)]
    rep = decr_condition(alphas, betas, Q)
    spec = example_spec("RPlus1PhiS", {"alphas": alphas, "betas": betas}, Q, require_pf2=False)
    prof = is_doubly_positive([spec.base(n) for n in range(20)])
    if rep.holds:
        assert prof.doubly_positive


def test_restrictions_named():
    with pytest.raises(RestrictionError, match="0<b<c<1"):
        example_spec("Heine2phi1Upper", {"b": F(1, 2), "c": F(1, 3)}, Q)
    with pytest.raises(RestrictionError, match="0<b<1"):
        example_spec("QKummer2", {"b": F(3, 2)}, Q)
    with pytest.raises(RestrictionError, match="a\\+b<=q"):
        example_spec("Heine2phi1Lower", {"a": F(2, 5), "b": F(2, 5)}, Q)
    with pytest.raises(RestrictionError, match="0<a<q"):
        example_spec("QKummer2Denominator", {"a": F(3, 4)}, Q)


def test_heine_lower_restriction_is_sharp_in_the_limit():
    # a + b > q eventually breaks log-concavity of (a;q)_n (b;q)_n/(q;q)_n
    spec = example_spec("Heine2phi1Lower", {"a": F(9, 20), "b": F(9, 20)}, Q, require_pf2=False)
    assert not is_doubly_positive([spec.base(n) for n in range(40)]).doubly_positive
    spec = example_spec("Heine2phi1Lower", {"a": F(1, 4), "b": F(1, 4)}, Q)
    assert is_doubly_positive([spec.base(n) for n in range(40)]).doubly_positive


def test_all_examples_listed():
    assert {e.value for e in ExampleName} >= {
        "QBessel1", "QBessel2", "QKummer1", "QKummer2", "Heine2phi1Upper",
        "Heine2phi1Lower", "RPlus1PhiS", "RPhiSUnitDenominator",
    }


def test_manifest_and_named_bases():
    m = load_manifest()
    assert m["version"] == 1
    for name in m["turanian"]["bases"]:
        f = named_base(name, Q)
        assert is_doubly_positive([f(n) for n in range(20)]).doubly_positive
    with pytest.raises(DomainError):
        named_base("nope", Q)
