"""Truncated Laurent/Taylor expansion checks for the kernel functions.

Each lemma states an expansion of a shifted nested sum (or of the bilateral
kernel Phi) around an expansion point; ``expansion_residual`` evaluates
(function at point + delta) minus (series truncated at order M, evaluated at
delta).  For a correct order-M expansion the residual scales like
delta^(M+1), which callers verify by halving delta.

L3_6_principal is special: only the negative powers of its Laurent expansion
are written down, so the residual there is delta^{k_j} * LHS minus the
principal-part polynomial sum_{m<k_j} coeff_m delta^m, which must converge
(like delta^{k_j}) instead of vanishing at a prescribed order.
"""

from __future__ import annotations

import mpmath as mp

from ..combinatorics import binomial, weak_compositions, weak_compositions_fixed_slot
from ..config import EvalConfig
from ..errors import AdmissibilityError
from ..hp import HPComplex
from ..roots import RootOfUnity, product
from ..series.harmonic import mhs_hurwitz
from ..series.nested import ZetaIndex, cmhzv, cmzv
from ..series.single import li_single, phi_ext
from .brackets import _coerce_param, _root_hp, hat_li
from .cases import _near_integer, _near_negative_integer
from .coeffs import coeff_B

LEMMA_IDS = ("L3_2", "L3_3", "L3_4", "L3_5", "L3_7", "L3_6_principal")


def _one(prec: int) -> HPComplex:
    return HPComplex(mp.mpf(1), mp.mpf(0), prec, 0.0)


def _zero(prec: int) -> HPComplex:
    return HPComplex.zero(prec)


def _chz(ks, xs, cs, cfg: EvalConfig) -> HPComplex:
    if not ks:
        return _one(cfg.prec_bits)
    return cmhzv(ZetaIndex(tuple(ks), tuple(xs), tuple(cs)), cfg)


def _mhs(n, ks, xs, avals, cfg: EvalConfig) -> HPComplex:
    return mhs_hurwitz(n, tuple(ks), tuple(xs), tuple(avals), cfg)


def expansion_residual(
    lemma_id: str,
    params: dict,
    M: int,
    delta,
    cfg: EvalConfig | None = None,
) -> HPComplex:
    """LHS(point + delta) minus order-M truncated series at delta.

    params by lemma:
      L3_2: n (integer), x (root != 1)
      L3_3: k, x
      L3_4: k, x, avec, a          (a_l - a never a negative integer)
      L3_5: k, x, avec, n (>= 1)
      L3_7: n (>= 0), x, a (not an integer)
      L3_6_principal: k, x, avec, j (1-based slot), n (>= j); M is ignored —
        the principal part has exactly k_j coefficients.
    """
    cfg = cfg or EvalConfig()
    prec = cfg.prec_bits
    d = _coerce_param(delta, prec)
    if d.magnitude() >= 0.5:
        raise AdmissibilityError("|delta| must be < 1/2")
    if M < 0:
        raise ValueError("truncation order M must be >= 0")

    if lemma_id == "L3_2":
        return _l3_2(params, M, d, cfg)
    if lemma_id == "L3_3":
        return _l3_3(params, M, d, cfg)
    if lemma_id == "L3_4":
        return _l3_4(params, M, d, cfg)
    if lemma_id == "L3_5":
        return _l3_5(params, M, d, cfg)
    if lemma_id == "L3_7":
        return _l3_7(params, M, d, cfg)
    if lemma_id == "L3_6_principal":
        return _l3_6_principal(params, d, cfg)
    raise ValueError(f"unknown lemma id {lemma_id!r}")


def _l3_2(params: dict, M: int, d: HPComplex, cfg: EvalConfig) -> HPComplex:
    """Phi(n + delta; x) = x^{-n} [1/delta + sum_m ((-1)^m Li_{m+1}(x) - Li_{m+1}(x^{-1})) delta^m]."""
    n, x = int(params["n"]), params["x"]
    if x.is_one():
        raise AdmissibilityError("expansion requires x != 1")
    prec = cfg.prec_bits
    one = _one(prec)
    lhs = phi_ext(n + d, x, cfg)
    acc = one / d
    dm = one
    for m in range(M + 1):
        br = li_single(m + 1, x, 1, cfg)
        if m % 2:
            br = -br
        br = br - li_single(m + 1, x.inverse(), 1, cfg)
        acc = acc + br * dm
        dm = dm * d
    return lhs - _root_hp(x.pow(-n), prec) * acc


def _l3_3(params: dict, M: int, d: HPComplex, cfg: EvalConfig) -> HPComplex:
    """All denominator parameters shifted off 1 by the same delta."""
    k, x = tuple(params["k"]), tuple(params["x"])
    prec = cfg.prec_bits
    one = _one(prec)
    r = len(k)
    lhs = _chz(k, x, (one + d,) * r, cfg)
    acc = _zero(prec)
    dm = one
    for m in range(M + 1):
        inner = _zero(prec)
        for mvec in weak_compositions(m, r):
            kk = tuple(kl + ml for kl, ml in zip(k, mvec))
            inner = inner + coeff_B(k, mvec) * cmzv(kk, x, cfg)
        acc = acc + inner * dm
        dm = dm * d
    return lhs - acc


def _l3_4(params: dict, M: int, d: HPComplex, cfg: EvalConfig) -> HPComplex:
    """Slot parameters 1 + a_l - a, all shifted by the same delta."""
    k, x = tuple(params["k"]), tuple(params["x"])
    prec = cfg.prec_bits
    one = _one(prec)
    a = _coerce_param(params["a"], prec)
    av = tuple(_coerce_param(v, prec) for v in params["avec"])
    for al in av:
        if _near_negative_integer(complex(al) - complex(a)):
            raise AdmissibilityError("a_l - a must avoid negative integers")
    r = len(k)
    base = tuple(one + al - a for al in av)
    lhs = _chz(k, x, tuple(c + d for c in base), cfg)
    acc = _zero(prec)
    dm = one
    for m in range(M + 1):
        inner = _zero(prec)
        for mvec in weak_compositions(m, r):
            kk = tuple(kl + ml for kl, ml in zip(k, mvec))
            inner = inner + coeff_B(k, mvec) * _chz(kk, x, base, cfg)
        acc = acc + inner * dm
        dm = dm * d
    return lhs - acc


def _l3_5(params: dict, M: int, d: HPComplex, cfg: EvalConfig) -> HPComplex:
    """Taylor expansion at integer offset n: harmonic head times nested tail.

    The order-m coefficient splits over the slot j at which the summation
    chain crosses n: below j a reversed finite harmonic sum with parameters
    (-a_j, ..., -a_1), above j a nested sum with bare parameters a_l, and a
    root prefactor x-tilde^n / x-tilde_{j+1,r}.
    """
    k, x = tuple(params["k"]), tuple(params["x"])
    n = int(params["n"])
    if n < 1:
        raise AdmissibilityError("n must be >= 1")
    if k[-1] == 1 and x[-1].is_one():
        raise AdmissibilityError("(k_r, x_r) = (1, 1) diverges")
    prec = cfg.prec_bits
    one = _one(prec)
    av = tuple(_coerce_param(v, prec) for v in params["avec"])
    for al in av:
        if _near_integer(complex(al)):
            raise AdmissibilityError("every a_l must avoid integers")
    r = len(k)
    lhs = _chz(k, x, tuple(one + al - n + d for al in av), cfg)

    acc = _zero(prec)
    for j in range(r + 1):
        rootfac = product(x).pow(n) * product(x[j:]).inverse()
        root_hp = _root_hp(rootfac, prec)
        dm = one
        for m in range(M + 1):
            inner = _zero(prec)
            for mvec in weak_compositions(m, r):
                sign = (sum(k[:j]) + sum(mvec[:j])) % 2
                cb = coeff_B(k, mvec)
                suf_k = tuple(k[l] + mvec[l] for l in range(j, r))
                suffix = _chz(suf_k, x[j:], av[j:], cfg)
                head = _mhs(
                    n - 1,
                    tuple(k[l] + mvec[l] for l in range(j - 1, -1, -1)),
                    tuple(x[l].inverse() for l in range(j - 1, -1, -1)),
                    tuple(-av[l] for l in range(j - 1, -1, -1)),
                    cfg,
                )
                term = cb * (suffix * head)
                inner = inner + (-term if sign else term)
            acc = acc + (root_hp * inner) * dm
            dm = dm * d
    return lhs - acc


def _l3_7(params: dict, M: int, d: HPComplex, cfg: EvalConfig) -> HPComplex:
    """Phi(-n - a + delta; x) = x^n sum_m hat_li(m+1, 1/x, a) delta^m."""
    n, x = int(params["n"]), params["x"]
    if n < 0:
        raise AdmissibilityError("n must be >= 0")
    prec = cfg.prec_bits
    a = _coerce_param(params["a"], prec)
    if _near_integer(complex(a)):
        raise AdmissibilityError("a must avoid integers")
    lhs = phi_ext(-n - a + d, x, cfg)
    acc = _zero(prec)
    dm = _one(prec)
    for m in range(M + 1):
        acc = acc + hat_li(m + 1, x.inverse(), a, cfg) * dm
        dm = dm * d
    return lhs - _root_hp(x.pow(n), prec) * acc


def _l3_6_principal(params: dict, d: HPComplex, cfg: EvalConfig) -> HPComplex:
    """Principal part at the slot-j pole s = -n - a_j.

    Returns delta^{k_j} * LHS(delta) - sum_{m=0}^{k_j-1} coeff_m delta^m,
    which tends to zero like delta^{k_j}; the omitted regular part is exactly
    what the difference converges through.
    """
    k, x = tuple(params["k"]), tuple(params["x"])
    j, n = int(params["j"]), int(params["n"])
    r = len(k)
    if not 1 <= j <= r:
        raise AdmissibilityError("slot j out of range")
    if n < j:
        raise AdmissibilityError("pole at chain position j needs n >= j")
    if k[-1] == 1 and x[-1].is_one():
        raise AdmissibilityError("(k_r, x_r) = (1, 1) diverges")
    prec = cfg.prec_bits
    one = _one(prec)
    av = tuple(_coerce_param(v, prec) for v in params["avec"])
    for li in range(r):
        for lj in range(li + 1, r):
            if _near_integer(complex(av[lj]) - complex(av[li])):
                raise AdmissibilityError("a_l - a_j must avoid integers for l != j")
    kj = k[j - 1]
    aj = av[j - 1]

    cs = tuple(one + al - n - aj + d for al in av)
    lhs = _chz(k, x, cs, cfg)
    out = (d**kj) * lhs

    xt_n = _root_hp(product(x).pow(n), prec)
    dm = one
    for m in range(kj):
        inner = _zero(prec)
        for nvec in weak_compositions_fixed_slot(m, r, j):
            sign = (sum(k[: j - 1]) + sum(nvec[j:])) % 2
            prod_binom = 1
            for l in range(r):
                if l == j - 1:
                    continue
                prod_binom *= binomial(nvec[l] + k[l] - 1, k[l] - 1)
            head = _mhs(
                n - 1,
                tuple(k[l] + nvec[l] for l in range(j - 2, -1, -1)),
                tuple(x[l].inverse() for l in range(j - 2, -1, -1)),
                tuple(aj - av[l] for l in range(j - 2, -1, -1)),
                cfg,
            )
            suf_k = tuple(k[l] + nvec[l] for l in range(j, r))
            suffix = _chz(suf_k, x[j:], tuple(one - aj + al for al in av[j:]), cfg)
            term = prod_binom * (head * suffix)
            inner = inner + (-term if sign else term)
        out = out - (xt_n * inner) * dm
        dm = dm * d
    return out
