"""Truncated multiple harmonic sums: DP prefix recursion vs the definition."""

import mpmath as mp
import pytest

from czeta.errors import PoleError
from czeta.roots import MINUS_ONE, ONE, RootOfUnity
from czeta.series.harmonic import mhs, mhs_hurwitz

from conftest import mdiff
import oracles as oc

I_ROOT = RootOfUnity(1, 4)
W6 = RootOfUnity(1, 6)


def test_empty_index_is_one(cfg):
    got = mhs(0, (), (), cfg)
    assert complex(got.as_mpc()) == 1


def test_short_range_is_zero(cfg):
    # fewer terms than depth: empty sum by convention
    got = mhs(1, (1, 1), (ONE, ONE), cfg)
    assert got.magnitude() == 0.0
    assert mhs(2, (1, 1, 2), (ONE, ONE, ONE), cfg).magnitude() == 0.0


def test_hand_sum_alternating(cfg):
    got = mhs(3, (1,), (MINUS_ONE,), cfg)
    with mp.workprec(240):
        assert mdiff(got, mp.mpf(-5) / 6) < 1e-50


def test_depth_two_hand_value(cfg):
    # sum over 1 <= m < n <= 3 of 1/(m n^2): (1,2),(1,3),(2,3)
    got = mhs(3, (1, 2), (ONE, ONE), cfg)
    with mp.workprec(240):
        want = mp.mpf(1) / 4 + mp.mpf(1) / 9 + mp.mpf(1) / (2 * 9)
        assert mdiff(got, want) < 1e-50


@pytest.mark.parametrize(
    "n,k,x",
    [
        (200, (2,), (ONE,)),
        (200, (1, 2), (ONE, MINUS_ONE)),
        (200, (1, 1), (I_ROOT, I_ROOT)),
        (120, (1, 2, 3), (ONE, MINUS_ONE, I_ROOT)),
        (120, (1, 1, 1), (W6, W6, RootOfUnity(2, 3))),
        (60, (2, 2, 2), (ONE, ONE, ONE)),
    ],
)
def test_dp_matches_naive_nested_loops(cfg, n, k, x):
    got = mhs(n, k, x, cfg)
    with mp.workprec(260):
        xs = [r.as_mpc() for r in x]
    want = oc.naive_nested(k, xs, [1] * len(k), n, prec=260)
    assert mdiff(got, want) < 1e-30 * max(1.0, float(abs(want)))


def test_hurwitz_shift(cfg):
    # n=3, k=(2,), a=(1/2,): 1/(1.5)^2 + 1/(2.5)^2 + 1/(3.5)^2... wait:
    # mhs_hurwitz denominators are (n_i + a_i) per the truncated Hurwitz sums
    got = mhs_hurwitz(3, (2,), (ONE,), (0.5,), cfg)
    with mp.workprec(240):
        want = sum(1 / (mp.mpf(n) + mp.mpf(1) / 2) ** 2 for n in (1, 2, 3))
        assert mdiff(got, want) < 1e-50


def test_hurwitz_matches_plain_at_zero_shift(cfg):
    a = mhs_hurwitz(50, (1, 2), (MINUS_ONE, I_ROOT), (0, 0), cfg)
    b = mhs(50, (1, 2), (MINUS_ONE, I_ROOT), cfg)
    assert (a - b).magnitude() < 1e-50


def test_hurwitz_pole_detection(cfg):
    with pytest.raises(PoleError):
        mhs_hurwitz(5, (2,), (ONE,), (-3,), cfg)  # n=3 term divides by zero
    # shift outside the truncated range is fine
    mhs_hurwitz(5, (2,), (ONE,), (-7.5,), cfg)


def test_complex_shift(cfg):
    with mp.workprec(240):
        a = mp.mpf(1) / 3 + mp.mpf(1) / 5 * 1j
        want = sum(1 / (n + a) for n in range(1, 8))
    got = mhs_hurwitz(7, (1,), (ONE,), (complex(mp.mpf(1) / 3, mp.mpf(1) / 5),), cfg)
    # the float conversion of a is not the same number as the mpf one; compare
    # against the float-accurate target instead
    with mp.workprec(240):
        af = mp.mpc(complex(mp.mpf(1) / 3, mp.mpf(1) / 5))
        want_f = sum(1 / (n + af) for n in range(1, 8))
    assert mdiff(got, want_f) < 1e-50
