"""Nested cyclotomic Hurwitz sums.

The evaluator computes

    sum_{0 < n_1 < ... < n_r}  prod_j  x_j^{n_j} / (stride*n_j + c_j - 1)^{k_j}

(stride = 1 for everything except the staggered T-variant, which uses
denominators 2n - j).  The method:

  * one upward dynamic-programming sweep maintains the prefix sums
    S_j(n) = sum over chains ending at n_j = n, cost O(M r);
  * the partial value A(C) = S_r(C) is recorded on a geometric checkpoint
    grid aligned to the lcm N of the root orders, so block-level phase
    cancellation is already built into the sample points;
  * when the depth-(r-1) prefix converges on its own, the outermost layer is
    split: A(C) + L * tail(C) with L the prefix limit (computed recursively)
    and tail(C) the closed-form single tail; the remainder then decays one
    power faster, which buys several digits at the same cutoff;
  * the limit is extracted by least-squares fitting A(C) against the basis
    {1} + {C^-p log^t C}; log powers appear exactly when inner (k, x) = (1, 1)
    entries are present (their prefix sums grow like log C).  The error
    estimate is the spread across dropped-node and dropped-order refits,
    quadrupled, plus a rounding floor - deliberately conservative.

Evaluation is adaptive: checkpoints double as stop candidates and the sweep
ends at the first one whose estimate meets the target.  Results are memoized
(identities reuse the same factors constantly), keyed by the full numeric
configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import gmpy2
import mpmath as mp
from gmpy2 import mpc as gmpc
from gmpy2 import mpfr as gmpfr

from ..config import EvalConfig
from ..errors import DivergenceError, PoleError, PrecisionNotMetError
from ..hp import HPComplex
from ..roots import ONE, RootOfUnity, lcm_order
from .single import _psi_shifted, _zeta_shifted

# ---------------------------------------------------------------------------
# index type


@dataclass(frozen=True)
class ZetaIndex:
    """Exponents k, phase roots x, and denominator parameters c (one each per
    depth position; denominators are (n_i + c_i - 1))."""

    k: tuple
    x: tuple
    c: tuple

    def __post_init__(self):
        k = tuple(int(v) for v in self.k)
        x = tuple(self.x)
        c = tuple(self.c)
        if not (len(k) == len(x) == len(c)):
            raise ValueError("k, x, c must have equal length")
        if len(k) == 0:
            raise ValueError("depth must be at least 1")
        if any(v < 1 for v in k):
            raise ValueError("exponents must be positive integers")
        if not all(isinstance(r, RootOfUnity) for r in x):
            raise ValueError("x entries must be RootOfUnity")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "c", c)

    @property
    def depth(self) -> int:
        return len(self.k)

    @property
    def weight(self) -> int:
        return sum(self.k)

    def convergent(self) -> bool:
        return not (self.k[-1] == 1 and self.x[-1].is_one())

    def reverse(self) -> "ZetaIndex":
        return ZetaIndex(self.k[::-1], self.x[::-1], self.c[::-1])

    def invert_x(self) -> "ZetaIndex":
        return ZetaIndex(self.k, tuple(r.inverse() for r in self.x), self.c)


def _as_mpc(v) -> mp.mpc:
    if isinstance(v, HPComplex):
        return v.as_mpc()
    return mp.mpc(v)


def _pole_slot(cs, stride: int = 1):
    """Index (1-based) of a slot whose denominator vanishes for an admissible
    n (n >= slot position), or None."""
    for i, c in enumerate(cs, start=1):
        z = (1 - _as_mpc(c)) / stride  # pole at n = z
        n = int(mp.nint(z.real))
        if n >= i and abs(z - n) < 2.0**-40:
            return i
    return None


def pole_free(idx: ZetaIndex) -> bool:
    return _pole_slot(idx.c) is None


# ---------------------------------------------------------------------------
# gmpy2 <-> mpmath bridges (exact in both directions at sufficient context
# precision; NaN never reaches these in normal operation)


def _to_g(z):
    if isinstance(z, mp.mpc) or (hasattr(z, "imag") and mp.im(z) != 0):
        return gmpc(_to_g(mp.re(z)), _to_g(mp.im(z)))
    v = mp.mpf(z)
    sign, man, exp, _ = v._mpf_
    if man == 0:
        return gmpfr(0)
    out = gmpy2.mul_2exp(gmpfr(man), exp) if exp >= 0 else gmpy2.div_2exp(gmpfr(man), -exp)
    return -out if sign else out


def _from_g(z):
    if isinstance(z, gmpc):
        return mp.mpc(_from_g(z.real), _from_g(z.imag))
    m, e = z.as_mantissa_exp()
    return mp.ldexp(mp.mpf(int(m)), int(e))


def _root_mpc(num: int, den: int, power: int = 1) -> mp.mpc:
    return mp.expjpi(mp.mpf(2 * ((num * power) % den)) / den)


# ---------------------------------------------------------------------------
# closed-form single tails (sum_{n > C} x^n / (stride*n + c - 1)^k)


def _single_tail(k: int, x: RootOfUnity, c, C: int, stride: int = 1) -> mp.mpc:
    g = (_as_mpc(c) - 1) / stride  # denominator = stride * (n + g)
    if x.is_one():
        if k == 1:
            raise DivergenceError("harmonic tail has no closed form")
        return _zeta_shifted(k, C + 1 + g) / mp.mpf(stride) ** k
    num, den = x.num, x.den
    tot = mp.mpc(0)
    for j in range(den):
        arg = (C + 1 + j + g) / den
        ph = _root_mpc(num, den, C + 1 + j)
        if k == 1:
            tot += ph * (-_psi_shifted(arg))
        else:
            tot += ph * _zeta_shifted(k, arg)
    return tot / mp.mpf(den * stride) ** k


# ---------------------------------------------------------------------------
# limit extraction


def _fit_limit(Cs, As, P: int, T: int):
    """Least-squares limit of A(C) ~ A_inf + sum c_{pt} (log C)^t / C^p."""
    rows = []
    for C in Cs:
        u = mp.mpf(1) / C
        L = mp.log(C)
        row = [mp.mpf(1)]
        for p in range(1, P + 1):
            up = u**p
            for t in range(T + 1):
                row.append(up * L**t)
        rows.append(row)
    ncol = len(rows[0])
    A = mp.matrix(len(Cs), ncol)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            A[i, j] = v
    scales = [max(abs(A[i, j]) for i in range(len(Cs))) for j in range(ncol)]
    for j in range(ncol):
        for i in range(len(Cs)):
            A[i, j] /= scales[j]
    b = mp.matrix([mp.mpc(v) for v in As])
    if len(Cs) == ncol:
        sol = mp.lu_solve(A, b)
    else:
        sol = mp.qr_solve(A, b)[0]
    return sol[0] / scales[0]


# ---------------------------------------------------------------------------
# the engine

_CACHE: dict = {}


def clear_cache() -> None:
    _CACHE.clear()


def _cache_key(ks, xs, cs, stride, cfg: EvalConfig):
    cz = []
    for c in cs:
        z = _as_mpc(c)
        cz.append((z.real._mpf_, z.imag._mpf_))
    return (
        tuple(ks),
        tuple((x.num, x.den) for x in xs),
        tuple(cz),
        stride,
        cfg.prec_bits,
        cfg.cutoff,
        cfg.richardson_levels,
        cfg.period_block,
        float(cfg.target_err),
    )


def _checkpoints(M_cap: int, N: int, aligned: bool):
    base = max(64 * N, 512)
    if base > M_cap // 4:
        base = max(N, M_cap // 8)
    cps = []
    v = mp.mpf(M_cap)
    while v >= base:
        c = int(v) // N * N if aligned else int(v)
        if c >= base:
            cps.append(c)
        v /= mp.sqrt(2)
    return sorted(set(cps))


def _engine(ks, xs, cs, stride: int, cfg: EvalConfig, _depth: int = 0):
    """Core evaluation; returns (mpmath value, float err bound).

    Never raises for missed precision - callers decide what the estimate
    means.  Raises PoleError / DivergenceError for genuinely bad input.
    """
    key = _cache_key(ks, xs, cs, stride, cfg)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit

    r = len(ks)
    prec = cfg.prec_bits
    with mp.workprec(prec + 20):
        if ks[-1] == 1 and xs[-1].is_one():
            raise DivergenceError("outermost (k, x) = (1, 1) diverges")
        bad = _pole_slot(cs, stride)
        if bad is not None:
            raise PoleError(f"denominator vanishes in slot {bad}")

        if r == 1:
            val = _single_tail(ks[0], xs[0], cs[0], 0, stride)
            out = (val, float((abs(val) + 1)) * 2.0 ** (10 - prec))
            _CACHE[key] = out
            return out

        N = lcm_order(xs)
        M_cap = cfg.cutoff
        cps = _checkpoints(M_cap, N, cfg.period_block)
        if len(cps) < 3:
            raise PoleError(
                f"cutoff {M_cap} leaves fewer than 3 checkpoints (root order {N})"
            )
        stop_cands = sorted([c for i, c in enumerate(reversed(cps)) if i % 2 == 0][:6])
        # a stop is only useful with enough grid below it to fit against
        min_nodes = min(5, len(cps))
        stop_cands = [c for c in stop_cands if sum(1 for v in cps if v <= c) >= min_nodes]
        if not stop_cands:
            stop_cands = [cps[-1]]

        # how many inner (1,1) layers feed log growth into the partial sums
        T = sum(1 for j in range(r - 1) if ks[j] == 1 and xs[j].is_one())
        # prefix converging on its own enables the tail split
        split = not (ks[r - 2] == 1 and xs[r - 2].is_one())

        Lval, Lerr = (None, 0.0)
        if split:
            inner_cfg = EvalConfig(
                cutoff=cfg.cutoff,
                richardson_levels=cfg.richardson_levels,
                period_block=cfg.period_block,
                target_err=cfg.target_err * 0.5,
                prec_bits=prec,
            )
            Lval, Lerr = _engine(ks[:-1], xs[:-1], cs[:-1], stride, inner_cfg, _depth + 1)

        # ---- DP sweep in gmpy2 ----
        gctx = gmpy2.get_context()
        saved_prec = gctx.precision
        gctx.precision = prec + 20
        try:
            tabs = []
            for x in xs:
                tabs.append(([_to_g(_root_mpc(x.num, x.den, t)) for t in range(x.den)], x.den))
            gcs = []
            for c in cs:
                z = _as_mpc(c) - 1
                gcs.append(_to_g(z.real) if z.imag == 0 else _to_g(z))

            S = [gmpc(0)] * (r + 1)
            S[0] = gmpc(1)
            Psingle = gmpc(0)
            recA: dict = {}
            recP: dict = {}
            cpset = set(cps)
            kr = ks[-1]
            n = 0
            best = None

            for M_s in stop_cands:
                while n < M_s:
                    n += 1
                    # update outermost first; the min(r, n) guard keeps slots
                    # whose denominators only make sense for n >= j untouched
                    for j in range(min(r, n), 0, -1):
                        tab, den = tabs[j - 1]
                        d = (stride * n) + gcs[j - 1]
                        k = ks[j - 1]
                        if k == 1:
                            term = S[j - 1] / d
                        elif k == 2:
                            term = S[j - 1] / (d * d)
                        else:
                            term = S[j - 1] / d**k
                        if den > 1:
                            term = term * tab[n % den]
                        if j == r:
                            ph = tab[n % den] if den > 1 else 1
                            if k == 1:
                                Psingle += ph / d
                            elif k == 2:
                                Psingle += ph / (d * d)
                            else:
                                Psingle += ph / d**k
                        S[j] = S[j] + term
                    if n in cpset:
                        recA[n] = S[r]
                        recP[n] = Psingle

                # ---- extrapolate at this stop candidate ----
                nodes = [c for c in cps if c <= M_s]
                tail_top = (
                    _single_tail(kr, xs[-1], cs[-1], M_s, stride) if split else None
                )
                Ptop = recP[M_s] if split else None
                Cs_used, As_used = [], []
                max_tail = 0.0
                for C in nodes:
                    A = _from_g(recA[C])
                    if split:
                        tail_C = tail_top + _from_g(Ptop - recP[C])
                        A = A + Lval * tail_C
                        max_tail = max(max_tail, float(abs(tail_C)))
                    Cs_used.append(C)
                    As_used.append(A)

                navail = len(Cs_used)
                P_cap = cfg.richardson_levels + 2
                Tb = T
                P = max(2, min(P_cap, (navail - 3) // (Tb + 1)))
                while P > 1 and 1 + P * (Tb + 1) > navail:
                    P -= 1
                while Tb > 0 and 1 + P * (Tb + 1) > navail:
                    Tb -= 1  # degraded basis; the refit spread will show it
                ncol = 1 + P * (Tb + 1)
                J = min(navail, ncol + 3)
                fit1 = _fit_limit(Cs_used[-J:], As_used[-J:], P, Tb)
                fit2 = None
                if J - 1 >= ncol:
                    fit2 = _fit_limit(Cs_used[-(J - 1) :], As_used[-(J - 1) :], P, Tb)
                fit3 = None
                if P > 1:
                    P3 = P - 1
                    J3 = min(navail, 1 + P3 * (Tb + 1) + 3)
                    fit3 = _fit_limit(Cs_used[-J3:], As_used[-J3:], P3, Tb)

                floor = (float(abs(fit1)) + 1.0) * 2.0 ** (16 - prec)
                spreads = [abs(fit1 - f) for f in (fit2, fit3) if f is not None]
                if spreads:
                    err = 4.0 * float(max(spreads)) + floor
                else:
                    # no independent refit possible: bound by the distance to
                    # the raw corrected partial, which the fit must beat
                    err = 4.0 * float(abs(fit1 - As_used[-1])) + floor
                err += Lerr * max_tail
                if best is None or err < best[1]:
                    best = (fit1, err)
                if err <= cfg.target_err:
                    break
        finally:
            gctx.precision = saved_prec

        out = (best[0], best[1])
    _CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# public evaluators


def cmhzv(idx: ZetaIndex, cfg: EvalConfig | None = None) -> HPComplex:
    """Cyclotomic multiple Hurwitz zeta value for a convergent pole-free index.

    Raises PrecisionNotMetError (carrying the best value and its achieved
    bound) when the cutoff budget cannot reach cfg.target_err.
    """
    cfg = cfg or EvalConfig()
    if not idx.convergent():
        raise DivergenceError("(k_r, x_r) = (1, 1): series diverges")
    cfg.validate_for_order(lcm_order(idx.x))
    val, err = _engine(idx.k, idx.x, idx.c, 1, cfg)
    res = HPComplex.from_mpc(val, cfg.prec_bits, err)
    if err > cfg.target_err:
        raise PrecisionNotMetError(
            f"achieved error {err:.2e} exceeds target {cfg.target_err:.2e} "
            f"at cutoff {cfg.cutoff}",
            value=res,
            err=err,
        )
    return res


def cmzv(k, x, cfg: EvalConfig | None = None) -> HPComplex:
    """Cyclotomic multiple zeta value: all denominator parameters c = 1."""
    k = tuple(k)
    return cmhzv(ZetaIndex(k, tuple(x), (1,) * len(k)), cfg)


def mtv(k, x, cfg: EvalConfig | None = None) -> HPComplex:
    """Cyclotomic multiple t-value: denominators (n - 1/2), i.e. c = 1/2."""
    k = tuple(k)
    half = mp.mpf(1) / 2
    return cmhzv(ZetaIndex(k, tuple(x), (half,) * len(k)), cfg)


def mtv_T(k, cfg: EvalConfig | None = None) -> HPComplex:
    """Staggered T-variant: 2^r * sum over chains of prod 1/(2 n_j - j)^{k_j}.

    Implemented directly on the stride-2 engine (denominator parameters
    c_j = 1 - j), not routed through cmhzv, so the power-of-two rescaling
    relation between the two stays a meaningful cross-check.
    """
    cfg = cfg or EvalConfig()
    k = tuple(int(v) for v in k)
    r = len(k)
    if r == 0:
        raise ValueError("depth must be at least 1")
    if k[-1] == 1:
        raise DivergenceError("T-variant needs k_r > 1")
    cfg.validate_for_order(1)
    xs = (ONE,) * r
    cs = tuple(1 - j for j in range(1, r + 1))
    val, err = _engine(k, xs, cs, 2, cfg)
    scale = 2**r
    res = HPComplex.from_mpc(val * scale, cfg.prec_bits, err * scale)
    if err * scale > cfg.target_err:
        raise PrecisionNotMetError(
            f"achieved error {err * scale:.2e} exceeds target {cfg.target_err:.2e}",
            value=res,
            err=err * scale,
        )
    return res
