"""Binomials and weak compositions.

The symmetry formulas sum over weak compositions (m_1, ..., m_r) of a total m,
sometimes with one slot pinned to zero.  Enumeration is an iterative odometer
rather than recursion: counts reach C(m+r-1, r-1) and the tuples are consumed
immediately, so we avoid stack depth and per-call allocation.
"""

from __future__ import annotations

from math import comb


class Composition(tuple):
    """A weak composition: a tuple of nonnegative parts with a known total."""

    @property
    def parts(self):
        return tuple(self)

    @property
    def total(self) -> int:
        return sum(self)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with the convention 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def weak_compositions(m: int, r: int) -> list[Composition]:
    """All (m_1, ..., m_r) with m_i >= 0 and sum m, lexicographic order.

    r = 0 yields [()] when m = 0 and [] otherwise (empty product conventions).
    """
    if m < 0:
        raise ValueError("total must be nonnegative")
    if r == 0:
        return [Composition()] if m == 0 else []
    if r == 1:
        return [Composition((m,))]
    out = []
    parts = [0] * r
    parts[-1] = m
    while True:
        out.append(Composition(parts))
        # odometer step: rightmost slot before the end that has mass to its
        # right gains one unit; everything right of it resets with the rest
        j = r - 2
        while j >= 0 and sum(parts[j + 1 :]) == 0:
            j -= 1
        if j < 0:
            break
        rest = sum(parts[j + 1 :]) - 1
        parts[j] += 1
        for t in range(j + 1, r):
            parts[t] = 0
        parts[r - 1] = rest
    return out


def weak_compositions_fixed_slot(m: int, r: int, j: int) -> list[Composition]:
    """Weak compositions of m into r parts with part j (1-based) pinned to 0."""
    if not 1 <= j <= r:
        raise ValueError(f"slot index {j} out of range 1..{r}")
    out = []
    for c in weak_compositions(m, r - 1):
        parts = list(c)
        parts.insert(j - 1, 0)
        out.append(Composition(parts))
    return out
