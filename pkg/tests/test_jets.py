"""Truncated Taylor jets for cot(pi a) and x^a, and the closed-form RHS jet."""

import random

import mpmath as mp
import pytest

from czeta.errors import PoleError
from czeta.hp import HPComplex
from czeta.jets import Jet, cot_jet, jet_rhs_closed_form, xpow_jet
from czeta.roots import MINUS_ONE, ONE, RootOfUnity

from conftest import mdiff
from oracles import central_diff

PREC = 192
I_ROOT = RootOfUnity(1, 4)


def _hp(z, prec=PREC):
    # strings parse at full precision; pre-built mpf/complex pass through as-is
    with mp.workprec(prec):
        return HPComplex.exact(mp.mpmathify(z), prec)


def _rand_jet(rng, order, prec=PREC):
    return Jet(tuple(
        _hp(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), prec)
        for _ in range(order + 1)
    ))


def test_const_jet():
    j = Jet.const(_hp(3.5), 4)
    assert j.order == 4
    assert complex(j.coeffs[0].as_mpc()) == 3.5
    assert all(c.magnitude() == 0 for c in j.coeffs[1:])


def test_mul_matches_cauchy_product_by_hand():
    a = Jet((_hp(1), _hp(2)))
    b = Jet((_hp(3), _hp(4)))
    p = a * b
    assert complex(p.coeffs[0].as_mpc()) == 3
    assert complex(p.coeffs[1].as_mpc()) == 10  # 1*4 + 2*3


@pytest.mark.parametrize("order", [1, 3, 8])
def test_mul_associative_and_commutative(order):
    rng = random.Random(order)
    A, B, C = (_rand_jet(rng, order) for _ in range(3))
    left = (A * B) * C
    right = A * (B * C)
    for lc, rc in zip(left.coeffs, right.coeffs):
        assert (lc - rc).magnitude() <= lc.err + rc.err + 1e-40
    ab, ba = A * B, B * A
    for lc, rc in zip(ab.coeffs, ba.coeffs):
        assert (lc - rc).magnitude() <= lc.err + rc.err + 1e-40


def test_cot_jet_low_coefficients():
    a = _hp("2/7")  # parse inside workprec: the fraction must be sharp at 192 bits
    j = cot_jet(a, 2)
    with mp.workprec(PREC):
        pa = mp.pi * mp.mpf(2) / 7
        c0 = mp.cot(pa)
        c1 = -mp.pi / mp.sin(pa) ** 2
        c2 = mp.pi ** 2 * mp.cos(pa) / mp.sin(pa) ** 3
    assert mdiff(j.coeffs[0], c0) < 1e-50
    assert mdiff(j.coeffs[1], c1) < 1e-49
    assert mdiff(j.coeffs[2], c2) < 1e-48


def test_cot_jet_rejects_near_pole():
    with pytest.raises(PoleError):
        cot_jet(_hp(0), 1)
    with pytest.raises(PoleError):
        cot_jet(_hp(1e-13), 1)  # sin(pi a) ~ 3e-13 < 2^-40
    cot_jet(_hp(1e-11), 1)  # just outside the floor: fine


def test_xpow_jet_coefficients():
    a = _hp(complex(0.3, 0.2))
    j = xpow_jet(I_ROOT, a, 3)
    with mp.workprec(PREC):
        theta = mp.pi / 2
        az = a.as_mpc()
        base = mp.exp(1j * theta * az)
        for m in range(4):
            want = base * (1j * theta) ** m / mp.factorial(m)
            assert mdiff(j.coeffs[m], want) < 1e-48


def test_xpow_jet_rejects_one():
    with pytest.raises(PoleError):
        xpow_jet(ONE, _hp(0.3), 1)


def test_rhs_closed_form_minus_pi():
    got = jet_rhs_closed_form(0, MINUS_ONE, _hp("1/2"))
    with mp.workprec(PREC):
        assert mdiff(got, -mp.pi) < 1e-50


def test_rhs_closed_form_fourth_root():
    got = jet_rhs_closed_form(0, I_ROOT, _hp("1/3"))
    with mp.workprec(PREC):
        want = mp.pi * mp.exp(1j * mp.pi / 6) * (1j - mp.cot(mp.pi / 3))
        assert mdiff(got, want) < 1e-50


@pytest.mark.parametrize("m", [1, 2, 3])
def test_rhs_jet_matches_finite_differences(m):
    """Order-m coefficient == (1/m!) d^m/da^m of the order-0 value."""
    a0 = mp.mpf(3) / 10

    def f0(t):
        return jet_rhs_closed_form(0, I_ROOT, HPComplex.exact(t, 220)).as_mpc()

    deriv = central_diff(f0, a0, m, mp.mpf(1) / 10 ** 6, prec=220)
    with mp.workprec(220):
        want = deriv / mp.factorial(m)
    got = jet_rhs_closed_form(m, I_ROOT, _hp(a0, 220))
    assert mdiff(got, want) < 1e-8 * max(1.0, float(abs(want)))
