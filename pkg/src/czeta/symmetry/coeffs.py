"""Rational coefficient families appearing in the depth-r symmetry formulas.

Conventions used throughout: ``k`` is the tuple (k_1, ..., k_r) of inner
exponents, *excluding* the leading exponent k_0 = q, and slot indices ``j``
are 1-based.  Binomials with a negative top argument are zero, which is what
truncates the i/m double sums in the identities.
"""

from __future__ import annotations

from typing import Sequence

from ..combinatorics import binomial


def coeff_B(k: Sequence[int], mvec: Sequence[int]) -> int:
    """(-1)^{|m|} * prod_l C(m_l + k_l - 1, k_l - 1).

    Weight tuple ``mvec`` must have the same length as ``k``.  This is the
    coefficient of delta^{|m|} in the Taylor expansion of a nested sum whose
    parameters are all shifted by the same delta.
    """
    if len(mvec) != len(k):
        raise ValueError("mvec and k must have equal length")
    sign = -1 if sum(mvec) % 2 else 1
    prod = 1
    for ml, kl in zip(mvec, k):
        if ml < 0 or kl < 1:
            raise ValueError("entries must satisfy m_l >= 0, k_l >= 1")
        prod *= binomial(ml + kl - 1, kl - 1)
    return sign * prod


def _outer_product(k: Sequence[int], mvec: Sequence[int], j: int) -> int:
    prod = 1
    for l in range(1, len(k) + 1):
        if l == j:
            continue
        prod *= binomial(mvec[l - 1] + k[l - 1] - 1, k[l - 1] - 1)
    return prod


def _validate_cd(q: int, m: int, i: int, j: int, k: Sequence[int], mvec: Sequence[int]) -> None:
    if q < 1:
        raise ValueError("q must be >= 1")
    if not 1 <= j <= len(k):
        raise ValueError("slot j out of range")
    if m < 0 or i < 0:
        raise ValueError("m and i must be >= 0")
    if len(mvec) != len(k):
        raise ValueError("mvec and k must have equal length")
    if mvec[j - 1] != 0:
        raise ValueError("slot j of mvec must be zero")
    if sum(mvec) != m:
        raise ValueError("mvec must sum to m")


def coeff_C(q: int, m: int, i: int, j: int, k: Sequence[int], mvec: Sequence[int]) -> int:
    """Coefficient of the slot-j correction terms in the unshifted identity.

    Equals (-1)^{(q + k_1 + ... + k_{j-1}) + (m_{j+1} + ... + m_r)}
    * C(q + k_j - m - i - 1, q - 1) * prod_{l != j} C(m_l + k_l - 1, k_l - 1),
    with the middle binomial read as zero when its top is negative.
    """
    _validate_cd(q, m, i, j, k, mvec)
    top = q + k[j - 1] - m - i - 1
    if top < 0:
        return 0
    sign_exp = (q + sum(k[: j - 1])) + sum(mvec[j:])
    sign = -1 if sign_exp % 2 else 1
    return sign * binomial(top, q - 1) * _outer_product(k, mvec, j)


def coeff_D(q: int, m: int, i: int, j: int, k: Sequence[int], mvec: Sequence[int]) -> int:
    """Shifted-parameter analogue of :func:`coeff_C`.

    Identical except the middle binomial is C(q + k_j - m - i - 2, q - 1);
    consequently coeff_C(q, m, i, j, ...) == coeff_D(q, m, i - 1, j, ...).
    """
    _validate_cd(q, m, i, j, k, mvec)
    top = q + k[j - 1] - m - i - 2
    if top < 0:
        return 0
    sign_exp = (q + sum(k[: j - 1])) + sum(mvec[j:])
    sign = -1 if sign_exp % 2 else 1
    return sign * binomial(top, q - 1) * _outer_product(k, mvec, j)
