"""Truncated Taylor jets for analytic derivatives.

A jet of order M is the tuple of Taylor coefficients (c_0, ..., c_M) of an
analytic function around an expansion point.  Multiplication is the Cauchy
convolution truncated at M; that is all the machinery needed to extract the
m-th derivative appearing on the closed-form side of the single-polylog
inversion identity:

    pi * [eps^m] ( i - cot(pi (a + eps)) ) * x^(a + eps),    x = e^{i theta}

The cot jet is generated from its own differential equation
f' = -pi (1 + f^2) (a Riccati relation), so no symbolic differentiation is
involved, and the power jet of x^(a+eps) is exact: x^a * (i theta)^j / j!.

Coefficients are HPComplex, so error bounds ride along through every
convolution; the closed form is used as an independent cross-check against
series evaluations and honest bounds on both sides are what make the
comparison meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .errors import PoleError
from .hp import HPComplex
from .roots import RootOfUnity

_SIN_FLOOR = 2.0**-40  # reject cot jets this close to a pole of cot(pi a)


@dataclass(frozen=True)
class Jet:
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def const(cls, value: HPComplex, order: int) -> "Jet":
        zero = HPComplex.zero(value.prec_bits)
        return cls((value,) + (zero,) * order)

    def __add__(self, other: "Jet") -> "Jet":
        assert self.order == other.order
        return Jet(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Jet") -> "Jet":
        assert self.order == other.order
        return Jet(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "Jet") -> "Jet":
        assert self.order == other.order
        n = len(self.coeffs)
        out = []
        for m in range(n):
            acc = self.coeffs[0] * other.coeffs[m]
            for i in range(1, m + 1):
                acc = acc + self.coeffs[i] * other.coeffs[m - i]
            out.append(acc)
        return Jet(tuple(out))


def cot_jet(a: HPComplex, order: int) -> Jet:
    """Taylor coefficients of cot(pi (a + eps)) in eps, up to `order`.

    Built from f' = -pi (1 + f^2): (j+1) c_{j+1} = -pi ([j = 0] + (f*f)_j).
    """
    prec = a.prec_bits
    with mp.workprec(prec + 20):
        az = a.as_mpc()
        s = mp.sin(mp.pi * az)
        if abs(s) < _SIN_FLOOR:
            raise PoleError(f"cot jet requested within 2^-40 of a pole (a={az})")
        c0z = mp.cos(mp.pi * az) / s
        pi_z = +mp.pi
    # conditioning of c0 in a: |d/da cot(pi a)| = pi |csc^2(pi a)|
    cond = float(mp.pi) * (1.0 + float(abs(c0z)) ** 2)
    c = [HPComplex.from_mpc(c0z, prec, cond * a.err + abs(c0z) * 2.0 ** (1 - prec))]
    pi_hp = HPComplex.exact(pi_z, prec)
    for j in range(order):
        conv = c[0] * c[j]
        for i in range(1, j + 1):
            conv = conv + c[i] * c[j - i]
        if j == 0:
            conv = conv + 1
        c.append(-(pi_hp * conv) / (j + 1))
    return Jet(tuple(c))


def xpow_jet(x: RootOfUnity, a: HPComplex, order: int) -> Jet:
    """Jet of x^(a+eps) = e^{i theta (a+eps)} with theta = 2 pi p/q in (0, 2 pi).

    Rejects x = 1: theta = 0 sits outside the identity's angular domain, and
    the x = 1 degeneracies are handled by principal-value conventions
    elsewhere, not here.
    """
    if x.is_one():
        raise PoleError("x = 1 has angle 0, outside the required (0, 2 pi) range")
    prec = a.prec_bits
    with mp.workprec(prec + 20):
        theta = 2 * mp.pi * mp.mpf(x.num) / x.den
        xa = mp.exp(1j * theta * a.as_mpc())
        itheta = mp.mpc(0, theta)
    # |d/da x^a| = theta |x^a|
    err0 = float(theta) * float(abs(xa)) * a.err + float(abs(xa)) * 2.0 ** (1 - prec)
    coeffs = [HPComplex.from_mpc(xa, prec, err0)]
    fact = HPComplex.exact(itheta, prec)
    for j in range(1, order + 1):
        coeffs.append((coeffs[-1] * fact) / j)
    return Jet(tuple(coeffs))


def jet_rhs_closed_form(m: int, x: RootOfUnity, a: HPComplex) -> HPComplex:
    """pi times the order-m jet coefficient of (i - cot(pi(a+eps))) x^(a+eps)."""
    if m < 0:
        raise ValueError("jet order must be nonnegative")
    prec = a.prec_bits
    i_jet = Jet.const(HPComplex.exact(mp.mpc(0, 1), prec), m)
    bracket = i_jet - cot_jet(a, m)
    prod = bracket * xpow_jet(x, a, m)
    with mp.workprec(prec + 20):
        pi_hp = HPComplex.exact(+mp.pi, prec)
    return pi_hp * prod.coeffs[m]
