"""Nested series evaluators: known values, oracle cross-checks, invariants.

Pinned reference constants below were computed two independent ways before
being frozen: an integral representation evaluated with mp.quad (after
swapping summation order the inner sums telescope into logarithms), and
truncated partial sums with Richardson extrapolation; integer-relation
detection (mp.pslq) against {pi^2 ln 2, zeta(3), zeta(5), zeta(2) zeta(3)}
then identified each one in closed form.  The closed forms are asserted, the
digit strings are kept as comments so a regression is visible even if the
closed-form arithmetic itself were wrong.
"""

import itertools

import mpmath as mp
import pytest

from czeta.config import EvalConfig
from czeta.errors import DivergenceError, PoleError, PrecisionNotMetError
from czeta.roots import MINUS_ONE, ONE, RootOfUnity
from czeta.series.harmonic import mhs
from czeta.series.nested import ZetaIndex, cmhzv, cmzv, mtv, mtv_T, pole_free
from czeta.series.single import li_single

from conftest import mdiff
import oracles as oc

I_ROOT = RootOfUnity(1, 4)
W3 = RootOfUnity(1, 3)


# ---------------------------------------------------------------------------
# index type


def test_index_validation():
    with pytest.raises(ValueError):
        ZetaIndex((1, 2), (ONE,), (1, 1))
    with pytest.raises(ValueError):
        ZetaIndex((), (), ())
    with pytest.raises(ValueError):
        ZetaIndex((0,), (ONE,), (1,))
    with pytest.raises(ValueError):
        ZetaIndex((2,), (1.0,), (1,))  # bare float is not a root


def test_index_properties():
    idx = ZetaIndex((1, 2), (MINUS_ONE, I_ROOT), (1, 0.5))
    assert idx.depth == 2
    assert idx.weight == 3
    assert idx.convergent()
    assert not ZetaIndex((2, 1), (I_ROOT, ONE), (1, 1)).convergent()
    rev = idx.reverse()
    assert rev.k == (2, 1) and rev.x == (I_ROOT, MINUS_ONE)
    inv = idx.invert_x()
    assert inv.x == (MINUS_ONE, RootOfUnity(3, 4))


def test_pole_free():
    assert pole_free(ZetaIndex((2,), (ONE,), (0.5,)))
    assert not pole_free(ZetaIndex((2,), (ONE,), (0,)))  # n = 1 annihilates
    # c = -1 puts the zero at n = 2, inside the admissible range
    assert not pole_free(ZetaIndex((2,), (ONE,), (-1,)))


# ---------------------------------------------------------------------------
# known depth-2 / depth-3 values


def test_zeta_1_2_is_zeta_3(cfg):
    got = cmzv((1, 2), (ONE, ONE), cfg)
    with mp.workprec(240):
        assert mdiff(got, mp.zeta(3)) < 1e-13
    # independent route: Richardson-extrapolated truncated nested sums
    brute = oc.richardson_nested((1, 2), (1, 1), (1, 1), M0=2048, doublings=6)
    assert mdiff(got, brute) < 1e-4


def test_alternating_outer_eighth(cfg):
    # value 0.15025711289157244868947112663006150312021527136831...
    got = cmzv((1, 2), (ONE, MINUS_ONE), cfg)
    with mp.workprec(240):
        assert mdiff(got, mp.zeta(3) / 8) < 1e-13


def test_depth_three_weight_five(cfg):
    # 0.096551159989443734465645531428942764032010372343691...
    got = cmzv((1, 1, 3), (ONE, ONE, ONE), cfg)
    with mp.workprec(240):
        want = 2 * mp.zeta(5) - mp.zeta(2) * mp.zeta(3)
        assert mdiff(got, want) < 1e-12


def test_depth_one_reduces_to_single(cfg):
    a = cmzv((2,), (ONE,), cfg)
    b = li_single(2, ONE, 1, cfg)
    assert mdiff(a, b) < 1e-50
    with mp.workprec(240):
        assert mdiff(a, mp.pi**2 / 6) < 1e-50


def test_conditionally_convergent_depth_one(cfg):
    got = cmzv((1,), (MINUS_ONE,), cfg)
    with mp.workprec(240):
        assert mdiff(got, -mp.log(2)) < 1e-14


def test_root_twist_matches_oracle(cfg):
    got = cmzv((1, 2), (W3, I_ROOT), cfg)
    with mp.workprec(260):
        xs = [W3.as_mpc(), I_ROOT.as_mpc()]
    brute = oc.richardson_nested((1, 2), xs, (1, 1), M0=1536, doublings=6, prec=260)
    assert mdiff(got, brute) < 1e-5


def test_hurwitz_shift_against_oracle(cfg):
    idx = ZetaIndex((2, 2), (ONE, MINUS_ONE), (1.25, 0.75))
    got = cmhzv(idx, cfg)
    brute = oc.richardson_nested(
        (2, 2), (1, -1), (mp.mpf("1.25"), mp.mpf("0.75")), M0=2048, doublings=6
    )
    assert mdiff(got, brute) < 1e-10


def test_complex_shift_depth_one_dual_route(cfg):
    c = mp.mpc(1, 0.3)
    got = cmhzv(ZetaIndex((2,), (ONE,), (c,)), cfg)
    other = li_single(2, ONE, c, cfg)
    assert mdiff(got, other) < 1e-45


# ---------------------------------------------------------------------------
# t-values and the staggered T-variant


def test_t_depth_one_closed_forms(cfg):
    with mp.workprec(240):
        assert mdiff(mtv((2,), (ONE,), cfg), mp.pi**2 / 2) < 1e-14
        assert mdiff(mtv((1,), (MINUS_ONE,), cfg), -mp.pi / 2) < 1e-14


def test_t_1_2_closed_form(cfg):
    # 2.6338893027985365459483955886640211036223270249961674...
    got = mtv((1, 2), (ONE, ONE), cfg)
    with mp.workprec(240):
        want = mp.pi**2 * mp.log(2) - mp.mpf(7) / 2 * mp.zeta(3)
        assert mdiff(got, want) < 1e-13


def test_T_depth_one(cfg):
    with mp.workprec(240):
        assert mdiff(mtv_T((2,), cfg), mp.pi**2 / 4) < 1e-14


def test_T_1_2_closed_form(cfg):
    # 2.1035995805292899994495417826450374838387260115958730...
    got = mtv_T((1, 2), cfg)
    with mp.workprec(240):
        assert mdiff(got, mp.mpf(7) / 4 * mp.zeta(3)) < 1e-13


def test_T_1_2_against_shifted_oracle(cfg):
    # (2n_1 - 1)(2n_2 - 2)^2 = 8 (n_1 - 1/2)(n_2 - 1)^2, so the T-variant at
    # (1, 2) equals 1/2 of the nested sum with c = (1/2, 0)
    got = mtv_T((1, 2), cfg)
    half = mp.mpf(1) / 2
    brute = oc.richardson_nested((1, 2), (1, 1), (half, 0), M0=2048, doublings=6)
    with mp.workprec(240):
        assert mdiff(got, brute / 2) < 1e-4


def test_T_rejects_outermost_one():
    with pytest.raises(DivergenceError):
        mtv_T((2, 1))


# ---------------------------------------------------------------------------
# error paths


def test_divergent_index_rejected(cfg):
    with pytest.raises(DivergenceError):
        cmzv((2, 1), (I_ROOT, ONE), cfg)


def test_pole_in_denominator_rejected(cfg):
    with pytest.raises(PoleError):
        cmhzv(ZetaIndex((2,), (ONE,), (0,)), cfg)
    with pytest.raises(PoleError):
        cmhzv(ZetaIndex((1, 2), (ONE, ONE), (1, -1)), cfg)


def test_precision_not_met_carries_best_value():
    cfg = EvalConfig(cutoff=200, target_err=1e-40)
    with pytest.raises(PrecisionNotMetError) as ei:
        cmzv((1, 2), (ONE, ONE), cfg)
    err = ei.value
    assert err.value is not None
    assert err.err > 1e-40
    with mp.workprec(240):
        # the carried estimate is still in the right neighbourhood
        assert mdiff(err.value, mp.zeta(3)) < 10 * err.err


def test_repeat_call_is_deterministic(cfg):
    a = cmzv((1, 2), (W3, I_ROOT), cfg)
    b = cmzv((1, 2), (W3, I_ROOT), cfg)
    assert (a - b).magnitude() == 0.0


# ---------------------------------------------------------------------------
# invariants


def _force_eval(idx, cutoff):
    """Evaluate with the full cutoff budget (unreachable target), returning
    (value, reported err) whether or not the target was met."""
    cfg = EvalConfig(cutoff=cutoff, target_err=1e-60)
    try:
        res = cmhzv(idx, cfg)
        return res, res.err
    except PrecisionNotMetError as e:
        return e.value, e.err


@pytest.mark.parametrize(
    "k,x",
    [
        ((1, 2), (ONE, ONE)),
        ((1, 1, 2), (ONE, ONE, ONE)),
        ((2, 2), (MINUS_ONE, ONE)),
    ],
)
def test_monotone_tail(k, x):
    idx = ZetaIndex(k, x, (1,) * len(k))
    a, err_a = _force_eval(idx, 20_000)
    b, _ = _force_eval(idx, 40_000)
    assert float(mdiff(a, b)) <= err_a


def test_truncated_sums_converge_to_limit(cfg):
    z = cmzv((1, 2), (ONE, ONE), cfg)
    diffs = [float(mdiff(mhs(n, (1, 2), (ONE, ONE), cfg), z)) for n in (12800, 25600, 51200)]
    assert diffs[0] > diffs[1] > diffs[2]
    # tail decays like log(n)/n: successive ratios just under 2
    for hi, lo in zip(diffs, diffs[1:]):
        assert 1.5 < hi / lo < 2.2


def test_truncation_gap_within_reported_err(cfg):
    # at this weight the raw partial-sum tail at n = 10^5 is below the
    # evaluator's own error bar, so the two routes must agree within it
    z = cmzv((2, 4), (ONE, ONE), cfg)
    h = mhs(100_000, (2, 4), (ONE, ONE), cfg)
    assert float(mdiff(z, h)) <= 10 * z.err


def test_stuffle_depth_one_battery(cfg):
    roots = [
        RootOfUnity(0, 1),
        RootOfUnity(1, 2),
        RootOfUnity(1, 4),
        RootOfUnity(3, 4),
        RootOfUnity(1, 3),
        RootOfUnity(2, 3),
    ]
    pairs = [(q, x) for q in (1, 2, 3) for x in roots if not (q == 1 and x.is_one())]
    worst = 0.0
    for (q, x), (k, y) in itertools.combinations_with_replacement(pairs, 2):
        lhs = li_single(q, x, 1, cfg) * li_single(k, y, 1, cfg)
        rhs = (
            cmzv((q, k), (x, y), cfg)
            + cmzv((k, q), (y, x), cfg)
            + li_single(q + k, x * y, 1, cfg)
        )
        worst = max(worst, float((lhs - rhs).magnitude()))
    assert worst < 1e-12
