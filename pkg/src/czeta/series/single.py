"""Depth-one series: the generalized digamma function phi, its bilateral
extension, and single Hurwitz polylogarithms at roots of unity.

All three reduce to finite combinations of Hurwitz zeta / digamma values by
splitting the summation index into residue classes mod the root order N:
for x != 1 the phases x^j sum to zero over a period, which upgrades the
divergent digamma pieces into a convergent combination.  No series is
actually summed term by term here; that happens only in the nested evaluator.
"""

from __future__ import annotations

import mpmath as mp

from ..config import EvalConfig
from ..errors import DivergenceError, PoleError
from ..hp import HPComplex
from ..roots import RootOfUnity

_POLE_TOL = 2.0**-40


def _dist_to_integers(z: mp.mpc, upper: int | None = None) -> float:
    """Distance from z to the integers (<= upper when given)."""
    re = z.real
    n = int(mp.nint(re))
    if upper is not None and n > upper:
        n = upper
    return float(abs(z - n))


def _zeta_shifted(k: int, z: mp.mpc):
    """Hurwitz zeta(k, z) = sum_{n>=0} (n+z)^-k, valid for any pole-free z.

    mpmath's zeta wants Re(z) reasonably positive; shift the argument into
    Re >= 0.5 and add the finitely many explicit terms.  Integer k keeps the
    explicit terms branch-free.
    """
    head = mp.mpc(0)
    shift = 0
    if z.real < 0.5:
        shift = int(mp.ceil(0.5 - z.real))
        for t in range(shift):
            head += (z + t) ** (-k)
    return head + mp.zeta(k, z + shift)


def _psi_shifted(z: mp.mpc):
    """digamma(z) with the same manual shift into Re >= 0.5."""
    head = mp.mpc(0)
    shift = 0
    if z.real < 0.5:
        shift = int(mp.ceil(0.5 - z.real))
        for t in range(shift):
            head -= 1 / (z + t)
    return head + mp.digamma(z + shift)


def _min_denominator(c: mp.mpc) -> float:
    """min over n >= 1 of |n + c - 1|, the closest the series gets to a pole."""
    n = max(1, int(mp.nint(1 - c.real)))
    return min(float(abs(n + c - 1)), float(abs(n + c)))


def li_single(k: int, x: RootOfUnity, c, cfg: EvalConfig | None = None) -> HPComplex:
    """Sum_{n>=1} x^n / (n + c - 1)^k  for a root of unity x.

    (k, x) = (1, 1) diverges; a vanishing denominator (c a nonpositive
    integer) is a pole.  Everything else is a finite Hurwitz-zeta combination.
    """
    cfg = cfg or EvalConfig()
    prec = cfg.prec_bits
    if not isinstance(c, HPComplex):
        c = HPComplex.exact(c, prec)
    if k < 1:
        raise ValueError(f"exponent must be a positive integer, got {k}")
    if k == 1 and x.is_one():
        raise DivergenceError("Li_1 at x = 1 diverges")
    with mp.workprec(prec + 20):
        cz = c.as_mpc()
        if _dist_to_integers(cz, upper=0) < _POLE_TOL:
            raise PoleError(f"denominator n + c - 1 vanishes for some n >= 1 (c={cz})")
        dmin = _min_denominator(cz)
        N = x.den
        if x.is_one():
            val = _zeta_shifted(k, cz)
        else:
            acc = mp.mpc(0)
            xw = x.as_mpc()
            if k >= 2:
                for j in range(1, N + 1):
                    acc += xw**j * _zeta_shifted(k, (j + cz - 1) / N)
                val = acc / mp.mpf(N) ** k
            else:
                for j in range(1, N + 1):
                    acc += xw**j * _psi_shifted((j + cz - 1) / N)
                val = -acc / N
        mag = float(abs(val))
    # conditioning in c: |d/dc| <= k * (dmin^-(k+1) + zeta tail bound)
    cond = k * (dmin ** -(k + 1) + 2.0)
    err = cond * c.err + (mag + 1.0) * 2.0 ** (4 - prec) * (x.den + 1)
    return HPComplex.from_mpc(val, prec, err)


def phi(s, x, cfg: EvalConfig | None = None) -> HPComplex:
    """Generalized digamma series sum_{k>=0} x^k / (k+s).

    x may be a root of unity (period-block closed form) or a complex number
    with |x| < 1 (Lerch transcendent).  x = 1 diverges; s must avoid the
    nonpositive integers where a term's denominator vanishes.
    """
    cfg = cfg or EvalConfig()
    prec = cfg.prec_bits
    if not isinstance(s, HPComplex):
        s = HPComplex.exact(s, prec)
    with mp.workprec(prec + 20):
        sz = s.as_mpc()
        if _dist_to_integers(sz, upper=0) < _POLE_TOL:
            raise PoleError(f"phi has a pole at nonpositive integer s (s={sz})")
        if isinstance(x, RootOfUnity):
            if x.is_one():
                raise DivergenceError("phi(s; 1) is the harmonic series")
            N = x.den
            xw = x.as_mpc()
            acc = mp.mpc(0)
            for j in range(N):
                acc += xw**j * _psi_shifted((j + sz) / N)
            val = -acc / N
            scale = N + 1
        else:
            xz = mp.mpc(x)
            if abs(xz - 1) < _POLE_TOL:
                raise DivergenceError("phi(s; 1) is the harmonic series")
            if abs(xz) > 1 + _POLE_TOL:
                raise ValueError("phi needs |x| <= 1")
            val = mp.lerchphi(xz, 1, sz)
            scale = 4
        mag = float(abs(val))
        dmin = min(_dist_to_integers(sz, upper=0), 1.0)
    err = (dmin**-2 + 2.0) * s.err + (mag + 1.0) * 2.0 ** (4 - prec) * scale
    return HPComplex.from_mpc(val, prec, err)


def phi_ext(s, x: RootOfUnity, cfg: EvalConfig | None = None) -> HPComplex:
    """Bilateral extension Phi(s;x) = phi(s;x) - phi(-s;x^-1) - 1/s.

    Every integer is a simple pole.  At x = 1 the two phi pieces diverge
    individually but their symmetric pairing is digamma(1-s) - digamma(s)
    (the cotangent reflection), which is what the bilateral summation
    converges to for roots of unity.
    """
    cfg = cfg or EvalConfig()
    prec = cfg.prec_bits
    if not isinstance(s, HPComplex):
        s = HPComplex.exact(s, prec)
    with mp.workprec(prec + 20):
        sz = s.as_mpc()
        if _dist_to_integers(sz) < _POLE_TOL:
            raise PoleError(f"Phi has a simple pole at every integer (s={sz})")
        if x.is_one():
            val = _psi_shifted(1 - sz) - _psi_shifted(sz)
            mag = float(abs(val))
            dmin = min(_dist_to_integers(sz), 1.0)
            err = 2 * (dmin**-2 + 2.0) * s.err + (mag + 1.0) * 2.0 ** (5 - prec)
            return HPComplex.from_mpc(val, prec, err)
    a = phi(s, x, cfg)
    b = phi(-s, x.inverse(), cfg)
    return a - b - 1 / s
