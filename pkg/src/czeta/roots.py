"""Exact roots of unity.

A root is stored as the reduced fraction p/q of its angle: x = e^{2*pi*i*p/q}.
Keeping the angle exact (never a float) lets convergence preconditions like
(k_r, x_r) != (1, 1) and degeneracies like "the product of all x_j equals 1"
be decided with integer arithmetic.  Products and inverses reduce the angle
mod 1; the complex embedding happens only at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import mpmath as mp

from .errors import ConfigError


@dataclass(frozen=True)
class RootOfUnity:
    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ConfigError(f"root denominator must be positive, got {self.den}")
        num = self.num % self.den
        g = gcd(num, self.den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", self.den // g)
        # canonical form of 1 is 0/1
        if self.num == 0:
            object.__setattr__(self, "den", 1)

    # -- algebra ------------------------------------------------------------

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.num, self.den)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        d = self.den * other.den
        return RootOfUnity(self.num * other.den + other.num * self.den, d)

    def pow(self, n: int) -> "RootOfUnity":
        return RootOfUnity(self.num * n, self.den)

    @property
    def order(self) -> int:
        """Multiplicative order: least N >= 1 with x^N = 1."""
        return self.den

    def is_one(self) -> bool:
        return self.num == 0

    # -- embeddings ----------------------------------------------------------

    def as_mpc(self) -> mp.mpc:
        """Complex value at the current mpmath working precision."""
        if self.num == 0:
            return mp.mpc(1)
        if 2 * self.num == self.den:
            return mp.mpc(-1)
        return mp.expjpi(mp.mpf(2 * self.num) / self.den)

    def angle_fraction(self):
        return (self.num, self.den)

    # -- text format ----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        """Parse the "p/q" angle format ("0/1" = 1, "1/2" = -1, "1/4" = i)."""
        parts = text.strip().split("/")
        if len(parts) != 2:
            raise ConfigError(f"root of unity must look like 'p/q', got {text!r}")
        try:
            num, den = int(parts[0]), int(parts[1])
        except ValueError:
            raise ConfigError(f"non-integer root components in {text!r}") from None
        return cls(num, den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ONE = RootOfUnity(0, 1)
MINUS_ONE = RootOfUnity(1, 2)


def product(roots) -> RootOfUnity:
    """Exact product of an iterable of roots (empty product = 1)."""
    acc = ONE
    for r in roots:
        acc = acc * r
    return acc


def lcm_order(roots) -> int:
    """lcm of the orders; the common period of all phase factors involved."""
    n = 1
    for r in roots:
        n = n * r.den // gcd(n, r.den)
    return n
