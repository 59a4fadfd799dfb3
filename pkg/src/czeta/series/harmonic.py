"""Truncated multiple harmonic sums.

Finite analogues of the nested series: chains 0 < n_1 < ... < n_r <= n.  The
plain variant divides by n_i^{k_i}, the shifted variant by (n_i + a_i)^{k_i}
(note: the shift convention here is additive on the index itself, matching
the finite sums that appear as Laurent coefficients, not the (n + c - 1)
convention of the infinite series).

Both run on the same O(n r) prefix recursion that the infinite evaluator
uses; a naive nested-loop oracle in the tests pins the recursion down.
"""

from __future__ import annotations

import mpmath as mp

from ..config import EvalConfig
from ..errors import PoleError
from ..hp import HPComplex
from ..roots import RootOfUnity


def mhs_hurwitz(n: int, k, x, a, cfg: EvalConfig | None = None) -> HPComplex:
    """sum over 0 < n_1 < ... < n_r <= n of prod x_i^{n_i} / (n_i + a_i)^{k_i}.

    Empty index (r = 0) gives 1; n < r gives 0 (no admissible chains).
    """
    cfg = cfg or EvalConfig()
    prec = cfg.prec_bits
    k = tuple(int(v) for v in k)
    x = tuple(x)
    a = tuple(a)
    r = len(k)
    if not (len(x) == len(a) == r):
        raise ValueError("k, x, a must have equal length")
    if any(v < 1 for v in k):
        raise ValueError("exponents must be positive integers")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r == 0:
        return HPComplex.from_mpc(mp.mpc(1), prec, 0.0)
    if n < r:
        return HPComplex.zero(prec)
    with mp.workprec(prec + 20):
        az = [mp.mpc(v.as_mpc() if isinstance(v, HPComplex) else v) for v in a]
        for i, v in enumerate(az):
            m = int(mp.nint(-v.real))
            if 1 <= m <= n and abs(v + m) < 2.0**-40:
                raise PoleError(f"denominator n_{i + 1} + a vanishes at n_{i + 1} = {m}")
        xw = [root.as_mpc() if isinstance(root, RootOfUnity) else mp.mpc(root) for root in x]
        S = [mp.mpc(0)] * (r + 1)
        S[0] = mp.mpc(1)
        for m in range(1, n + 1):
            for j in range(min(r, m), 0, -1):
                S[j] += S[j - 1] * xw[j - 1] ** m / (m + az[j - 1]) ** k[j - 1]
        val = S[r]
        mag = float(abs(val))
    err = (mag + 1.0) * n * r * 2.0 ** (4 - prec)
    return HPComplex.from_mpc(val, prec, err)


def mhs(n: int, k, x, cfg: EvalConfig | None = None) -> HPComplex:
    """Plain truncated multiple harmonic sum (denominators n_i^{k_i})."""
    return mhs_hurwitz(n, k, x, (0,) * len(tuple(k)), cfg)
