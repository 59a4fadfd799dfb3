"""Error-carrying arbitrary-precision complex numbers.

HPComplex is the value type every series evaluator returns: a complex number
at a stated binary precision together with a conservative absolute error
bound.  Arithmetic propagates the bound (never shrinks it) and adds a rounding
ulp for the operation itself, so a residual assembled from dozens of terms
ends up with an honest bound on how much of it is numerical noise.

The bound is kept as a double; bounds live in [0, ~1e potentially large] and
never need more than a couple of significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
from mpmath import libmp as mp_libmp

from .errors import PoleError


def _ulp(mag: float, prec_bits: int) -> float:
    # one rounding unit at magnitude `mag`; zero magnitude contributes nothing
    return abs(mag) * 2.0 ** (1 - prec_bits)


def _mag(re: mp.mpf, im: mp.mpf) -> float:
    try:
        return float(mp.hypot(re, im))
    except OverflowError:  # pragma: no cover - values this large are bugs
        return float("inf")


def _exact_neg(v: mp.mpf) -> mp.mpf:
    return mp.make_mpf(mp_libmp.mpf_neg(v._mpf_))


@dataclass(frozen=True)
class HPComplex:
    re: mp.mpf
    im: mp.mpf
    prec_bits: int
    err: float = 0.0

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_mpc(cls, z, prec_bits: int, err: float = 0.0) -> "HPComplex":
        # mpc/mpf construction rounds to the *ambient* context precision, so
        # the conversion must happen inside workprec or high-precision inputs
        # get silently truncated to whatever the caller's context is.
        with mp.workprec(prec_bits):
            z = mp.mpc(z)
            re = +z.real
            im = +z.imag
        return cls(re, im, prec_bits, float(err))

    @classmethod
    def exact(cls, z, prec_bits: int) -> "HPComplex":
        """A value known to working accuracy (error = one ulp)."""
        v = cls.from_mpc(z, prec_bits, 0.0)
        return cls(v.re, v.im, prec_bits, _ulp(v.magnitude(), prec_bits))

    @classmethod
    def zero(cls, prec_bits: int) -> "HPComplex":
        return cls(mp.mpf(0), mp.mpf(0), prec_bits, 0.0)

    # -- views ----------------------------------------------------------------

    def as_mpc(self) -> mp.mpc:
        # raw construction: exact regardless of the ambient context precision
        return mp.make_mpc((self.re._mpf_, self.im._mpf_))

    def magnitude(self) -> float:
        return _mag(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "HPComplex":
        if isinstance(other, HPComplex):
            return other
        if isinstance(other, (int, mp.mpf, float, mp.mpc, complex)):
            return HPComplex.exact(other, self.prec_bits)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = min(self.prec_bits, o.prec_bits)
        with mp.workprec(prec):
            re = self.re + o.re
            im = self.im + o.im
        return HPComplex(re, im, prec, self.err + o.err + _ulp(_mag(re, im), prec))

    __radd__ = __add__

    def __neg__(self):
        # sign flip on the raw mantissa: unary minus on an mpf would round
        # to the ambient context precision
        return HPComplex(_exact_neg(self.re), _exact_neg(self.im), self.prec_bits, self.err)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        prec = min(self.prec_bits, o.prec_bits)
        with mp.workprec(prec):
            re = self.re * o.re - self.im * o.im
            im = self.re * o.im + self.im * o.re
        ma, mb = self.magnitude(), o.magnitude()
        err = ma * o.err + mb * self.err + self.err * o.err + _ulp(_mag(re, im), prec)
        return HPComplex(re, im, prec, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        mb = o.magnitude()
        if mb <= 2 * o.err:
            raise PoleError("division by a value indistinguishable from zero")
        prec = min(self.prec_bits, o.prec_bits)
        with mp.workprec(prec):
            q = self.as_mpc() / o.as_mpc()
            re = +q.real
            im = +q.imag
        mq = _mag(re, im)
        err = (self.err + mq * o.err) / (mb - o.err) + _ulp(mq, prec)
        return HPComplex(re, im, prec, err)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        acc = HPComplex(mp.mpf(1), mp.mpf(0), self.prec_bits, 0.0)
        for _ in range(n):
            acc = acc * self
        return acc

    def conjugate(self) -> "HPComplex":
        return HPComplex(self.re, _exact_neg(self.im), self.prec_bits, self.err)

    def widen(self, extra_err: float) -> "HPComplex":
        return HPComplex(self.re, self.im, self.prec_bits, self.err + float(extra_err))

    def __repr__(self):
        return (
            f"HPComplex({mp.nstr(self.re, 20)}, {mp.nstr(self.im, 20)}, "
            f"prec={self.prec_bits}, err={self.err:.2e})"
        )
