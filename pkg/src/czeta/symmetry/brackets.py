"""Bilateral polylogarithm brackets at roots of unity.

These are the scalar factors multiplying the nested sums in the symmetry
formulas.  `hat_li` is computed along two independent routes — a pair of
one-variable series and a closed form assembled from a cotangent jet — and
the two must agree to working precision or the call fails loudly.
"""

from __future__ import annotations

import mpmath as mp

from ..config import EvalConfig
from ..errors import InternalConsistencyError, PoleError
from ..hp import HPComplex
from ..jets import cot_jet, jet_rhs_closed_form
from ..roots import RootOfUnity
from ..series.single import li_single


def _root_hp(x: RootOfUnity, prec: int) -> HPComplex:
    with mp.workprec(prec + 20):
        return HPComplex.exact(x.as_mpc(), prec)


def _coerce_param(a, prec: int) -> HPComplex:
    if isinstance(a, HPComplex):
        return a
    with mp.workprec(prec + 20):
        return HPComplex.exact(mp.mpmathify(a), prec)


def sym_li_bracket(j: int, x: RootOfUnity, cfg: EvalConfig | None = None) -> HPComplex:
    """(-1)^j Li_j(1/x) + Li_j(x), regularised at the two degenerate spots.

    j = 0 means the constant -1, and j = 1 at x = 1 means 0 (the two
    logarithmic singularities cancel in the bilateral combination).
    """
    cfg = cfg or EvalConfig()
    if j < 0:
        raise ValueError("bracket order must be >= 0")
    if j == 0:
        return HPComplex(mp.mpf(-1), mp.mpf(0), cfg.prec_bits, 0.0)
    if j == 1 and x.is_one():
        return HPComplex(mp.mpf(0), mp.mpf(0), cfg.prec_bits, 0.0)
    left = li_single(j, x.inverse(), 1, cfg)
    if j % 2:
        left = -left
    return left + li_single(j, x, 1, cfg)


def hat_li(jp1: int, x: RootOfUnity, a, cfg: EvalConfig | None = None) -> HPComplex:
    """(-1)^j Li_{j+1}(1/x; 1-a) - (1/x) Li_{j+1}(x; a), with jp1 = j + 1.

    The shifted polylogarithms carry Hurwitz parameter a in the second slot.
    At x = 1 the difference of divergent series is replaced by its principal
    value, read off from the Taylor jet of pi*cot(pi*a).  Off x = 1 the
    series route is cross-checked against the closed form
    (-1)^j * [pi cot jet] and a disagreement raises
    :class:`InternalConsistencyError`.
    """
    cfg = cfg or EvalConfig()
    if jp1 < 1:
        raise ValueError("jp1 must be >= 1")
    prec = cfg.prec_bits
    a_hp = _coerce_param(a, prec)

    if x.is_one():
        # Principal value: (-1)^{jp1} * pi * c_{jp1-1} where c are the
        # Taylor coefficients of cot(pi(a + delta)) around delta = 0.
        coeffs = cot_jet(a_hp, jp1 - 1)
        with mp.workprec(prec + 20):
            pi_hp = HPComplex.exact(+mp.pi, prec)
        val = pi_hp * coeffs.coeffs[jp1 - 1]
        if jp1 % 2:
            val = -val
        return val

    j = jp1 - 1
    one = HPComplex(mp.mpf(1), mp.mpf(0), prec, 0.0)
    primary = li_single(jp1, x.inverse(), one - a_hp, cfg)
    if j % 2:
        primary = -primary
    primary = primary - _root_hp(x.inverse(), prec) * li_single(jp1, x, a_hp, cfg)

    cross = jet_rhs_closed_form(j, x.inverse(), a_hp)
    if j % 2:
        cross = -cross
    diff = (primary - cross).magnitude()
    budget = 64.0 * (primary.err + cross.err) + (primary.magnitude() + 1.0) * 2.0 ** (20 - prec)
    if diff > budget:
        raise InternalConsistencyError(
            f"series and jet routes for hat_li({jp1}, {x}, ...) disagree: "
            f"|diff|={diff:.3e} > budget={budget:.3e}"
        )
    return primary


def hat_ti(jp1: int, x: RootOfUnity, cfg: EvalConfig | None = None) -> HPComplex:
    """hat_li specialised to parameter a = 1/2 (the t-variant bracket)."""
    cfg = cfg or EvalConfig()
    with mp.workprec(cfg.prec_bits + 20):
        half = HPComplex.exact(mp.mpf(1) / 2, cfg.prec_bits)
    return hat_li(jp1, x, half, cfg)
