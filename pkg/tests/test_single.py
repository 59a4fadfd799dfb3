"""Single series: phi, the bilateral extension Phi, and depth-one Li.

Expected values come from the independent oracles (Euler-Maclaurin tails,
Euler-transformed alternating sums, Richardson on raw partial sums, bilateral
pairing) plus the classical closed forms they corroborate.
"""

import random

import mpmath as mp
import pytest

from czeta.config import EvalConfig
from czeta.errors import DivergenceError, PoleError
from czeta.roots import MINUS_ONE, ONE, RootOfUnity
from czeta.series.single import li_single, phi, phi_ext

from conftest import mdiff
import oracles as oc

I_ROOT = RootOfUnity(1, 4)


# ---------------------------------------------------------------- phi


def test_phi_alternating_log2(cfg):
    got = phi(1, MINUS_ONE, cfg)
    want = oc.alternating_sum(lambda n: mp.mpf(-1) ** n / (n + 1), 160)
    assert mdiff(got, want) < 1e-30
    with mp.workprec(240):
        assert mdiff(got, mp.log(2)) < 1e-40


def test_phi_shifted_one_minus_log2(cfg):
    got = phi(2, MINUS_ONE, cfg)
    want = oc.alternating_sum(lambda n: mp.mpf(-1) ** n / (n + 2), 160)
    assert mdiff(got, want) < 1e-30
    with mp.workprec(240):
        assert mdiff(got, 1 - mp.log(2)) < 1e-40


def test_phi_half_pi_over_two(cfg):
    got = phi(0.5, MINUS_ONE, cfg)
    brute = oc.richardson_single_sum(1, -1, mp.mpf(1) / 2, M0=64, doublings=8)
    # oracle sums x^n/(n+c-1) from n=1: that's minus the phi series here
    # (negate the package value -- bare `-brute` would round at ambient prec)
    assert mdiff(-got, brute) < 1e-17
    with mp.workprec(240):
        assert mdiff(got, mp.pi / 2) < 1e-40


def test_phi_inside_disk(cfg):
    # |x| < 1 goes through the Lerch branch: sum (1/2)^k/(k+1) = 2 ln 2
    got = phi(1, 0.5, cfg)
    with mp.workprec(240):
        assert mdiff(got, 2 * mp.log(2)) < 1e-40


def test_phi_quarter_root(cfg):
    got = phi(mp.mpf(1) / 3, I_ROOT, cfg)
    # oracle sums x^n/(n+s-1) from n=1, which is x * sum_{k>=0} x^k/(k+s)
    want = oc.richardson_single_sum(1, 1j, mp.mpf(1) / 3, M0=64, doublings=8)
    with mp.workprec(240):
        want = want / 1j
    assert mdiff(got, want) < 1e-17


def test_phi_rejects_pole_and_divergence(cfg):
    with pytest.raises(PoleError):
        phi(0, MINUS_ONE, cfg)
    with pytest.raises(PoleError):
        phi(-3, MINUS_ONE, cfg)
    with pytest.raises(DivergenceError):
        phi(1, ONE, cfg)
    with pytest.raises(DivergenceError):
        phi(2, 1.0, cfg)
    with pytest.raises(ValueError):
        phi(2, 1.5, cfg)


# ---------------------------------------------------------------- phi_ext


def test_phi_ext_at_one_is_zero(cfg):
    got = phi_ext(0.5, ONE, cfg)
    assert got.magnitude() < 1e-45


def test_phi_ext_at_minus_one_is_pi(cfg):
    got = phi_ext(0.5, MINUS_ONE, cfg)
    want = oc.bilateral_phi(mp.mpf(1) / 2, 1, 2)
    assert mdiff(got, want) < 1e-20
    with mp.workprec(240):
        assert mdiff(got, mp.pi) < 1e-40


def test_phi_ext_bilateral_oracle_generic_root(cfg):
    with mp.workprec(240):
        s = mp.mpf("0.3") + mp.mpf("0.1") * 1j
    got = phi_ext(s, I_ROOT, cfg)
    want = oc.bilateral_phi(s, 1, 4)
    assert mdiff(got, want) < 1e-20


def test_phi_ext_cot_and_csc_identities(cfg):
    """Phi(s;1) = pi cot(pi s) and Phi(s;-1) = pi csc(pi s), random s."""
    rng = random.Random(40)
    checked = 0
    while checked < 50:
        s = complex(rng.uniform(-5, 5), rng.uniform(-2, 2))
        if abs(s.real - round(s.real)) < 0.05 and abs(s.imag) < 0.05:
            continue
        v1 = phi_ext(s, ONE, cfg)
        v2 = phi_ext(s, MINUS_ONE, cfg)
        with mp.workprec(240):
            sz = mp.mpc(s)
            assert mdiff(v1, mp.pi * mp.cot(mp.pi * sz)) < 1e-12
            assert mdiff(v2, mp.pi / mp.sin(mp.pi * sz)) < 1e-12
        checked += 1


def test_phi_ext_laurent_leading_coefficient(cfg):
    # (s - n) Phi(s;x) -> x^{-n} at the simple pole s = n
    n = 3
    eps = mp.mpf(1) / 10 ** 4
    got = phi_ext(3 + eps, I_ROOT, cfg)
    want = I_ROOT.pow(-n)  # i^{-3} = i
    with mp.workprec(240):
        lead = got.as_mpc() * eps
        assert abs(lead - want.as_mpc()) < 1e-3


def test_phi_ext_integer_pole(cfg):
    for s in (0, 1, -2, 5):
        with pytest.raises(PoleError):
            phi_ext(s, I_ROOT, cfg)


# ---------------------------------------------------------------- li_single


def test_li_basel(cfg):
    got = li_single(2, ONE, 1, cfg)
    want = oc.em_single_sum(2, 1)
    assert mdiff(got, want) < 1e-40
    with mp.workprec(240):
        assert mdiff(got, mp.pi ** 2 / 6) < 1e-40


def test_li_alternating_log(cfg):
    got = li_single(1, MINUS_ONE, 1, cfg)
    want = oc.alternating_sum(lambda n: mp.mpf(-1) ** n / n, 160, start=1)
    assert mdiff(got, want) < 1e-30
    with mp.workprec(240):
        assert mdiff(got, -mp.log(2)) < 1e-40


def test_li_half_shift(cfg):
    got = li_single(2, ONE, 0.5, cfg)
    want = oc.richardson_single_sum(2, 1, mp.mpf(1) / 2, M0=64, doublings=8)
    assert mdiff(got, want) < 1e-17
    with mp.workprec(240):
        assert mdiff(got, mp.pi ** 2 / 2) < 1e-40


def test_li_complex_shift_vs_em(cfg):
    with mp.workprec(240):
        c = mp.mpf(1) / 3 + mp.mpf(1) / 7 * 1j
    got = li_single(3, ONE, c, cfg)
    want = oc.em_single_sum(3, c)
    assert mdiff(got, want) < 1e-40


def test_li_root_twist_vs_brute(cfg):
    got = li_single(2, I_ROOT, 1, cfg)
    want = oc.richardson_single_sum(2, 1j, 1, M0=64, doublings=8)
    assert mdiff(got, want) < 1e-17


def test_li_errors(cfg):
    with pytest.raises(DivergenceError):
        li_single(1, ONE, 1, cfg)
    with pytest.raises(PoleError):
        li_single(2, ONE, 0, cfg)  # n=1 denominator vanishes
    with pytest.raises(PoleError):
        li_single(2, MINUS_ONE, -3, cfg)
    with pytest.raises(ValueError):
        li_single(0, ONE, 1, cfg)


def test_li_error_field_is_honest(cfg):
    got = li_single(2, ONE, 1, cfg)
    with mp.workprec(240):
        true_err = float(mdiff(got, mp.pi ** 2 / 6))
    assert true_err <= max(got.err, 1e-55)
