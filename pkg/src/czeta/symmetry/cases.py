"""Identity instances and residual reports.

An :class:`IdentityCase` names one of the supported symmetry identities and
carries the scalars it is instantiated at.  ``validate_case`` enforces the
exact hypotheses of the corresponding statement (convergence of every nested
sum, no parameter poles), so a case that validates is one the evaluators can
actually certify.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import mpmath as mp

from ..errors import AdmissibilityError
from ..roots import RootOfUnity

IDENTITY_IDS = (
    "thm2_1",
    "thm2_2",
    "cor2_3",
    "cor4_1",
    "cor4_2",
    "cor5_1",
    "ex5_2a",
    "ex5_2b",
    "eq2_11",
    "zhao_family",
    "T_relation",
    "stuffle_2",
)

# Matches the pole-rejection radius used by the series evaluators.
_INT_TOL = 2.0**-40


@dataclass(frozen=True)
class IdentityCase:
    """One identity instance: which formula, and the scalars plugged into it.

    Conventions: ``q`` is the leading exponent k_0, ``x0`` the leading root,
    ``a0`` the leading shift parameter; ``k``/``x``/``a`` are the inner
    arrays (slots 1..r).  The double-zeta corollaries (cor4_1, cor4_2,
    cor5_1, stuffle_2) use (q, x0, a0) for their first index and
    (k[0], x[0], a[0]) for the second; ex5_2a/ex5_2b use x0 for the root
    argument and (a0, a[0]) for (a, b).  ``extra`` carries per-identity
    integers: {"m": ...} for eq2_11, {"l": ...} for zhao_family.
    """

    identity_id: str
    q: int | None = None
    x0: RootOfUnity | None = None
    k: tuple = ()
    x: tuple = ()
    a0: Any = None
    a: tuple = ()
    extra: dict = field(default_factory=dict)
    label: str = ""


def _as_complex(v) -> complex:
    if v is None:
        raise AdmissibilityError("missing parameter")
    return complex(v)


def _near_integer(z: complex, tol: float = _INT_TOL) -> bool:
    n = round(z.real)
    return abs(z - n) < tol


def _near_negative_integer(z: complex, tol: float = _INT_TOL) -> bool:
    n = round(z.real)
    return n <= -1 and abs(z - n) < tol


def _check_depth_arrays(case: IdentityCase) -> None:
    if case.q is None or case.q < 1:
        raise AdmissibilityError("q must be a positive integer")
    if case.x0 is None:
        raise AdmissibilityError("x0 is required")
    if len(case.k) != len(case.x):
        raise AdmissibilityError("k and x must have equal length")
    if len(case.k) < 1:
        raise AdmissibilityError("depth r must be >= 1")
    if any(kl < 1 for kl in case.k):
        raise AdmissibilityError("all exponents must be >= 1")
    if case.k[-1] == 1 and case.x[-1].is_one():
        raise AdmissibilityError("(k_r, x_r) = (1, 1) diverges")
    if case.q == 1 and case.x0.is_one():
        raise AdmissibilityError("(q, x0) = (1, 1) diverges after reversal")


def _check_a_family(avals) -> None:
    for aj in avals:
        if _near_integer(_as_complex(aj)):
            raise AdmissibilityError(f"parameter {aj} is (nearly) an integer")
    for i in range(len(avals)):
        for j in range(i + 1, len(avals)):
            d = _as_complex(avals[j]) - _as_complex(avals[i])
            if _near_negative_integer(d):
                raise AdmissibilityError(
                    f"a_{j} - a_{i} = {d} is a negative integer"
                )


def _check_pair(case: IdentityCase, need_ab: bool) -> None:
    if case.q is None or case.q < 1 or len(case.k) != 1 or case.k[0] < 1:
        raise AdmissibilityError("need q >= 1 and a single inner exponent k")
    if case.x0 is None or len(case.x) != 1:
        raise AdmissibilityError("need roots x0 and one inner root")
    if case.q == 1 and case.x0.is_one():
        raise AdmissibilityError("(q, x) = (1, 1) diverges")
    if case.k[0] == 1 and case.x[0].is_one():
        raise AdmissibilityError("(k, y) = (1, 1) diverges")
    if need_ab:
        a, b = _as_complex(case.a0), _as_complex(case.a[0] if case.a else None)
        if _near_integer(a) or _near_integer(b):
            raise AdmissibilityError("a and b must avoid integers")
        if _near_negative_integer(b - a):
            raise AdmissibilityError("b - a must avoid negative integers")


def validate_case(case: IdentityCase) -> None:
    """Raise AdmissibilityError unless `case` satisfies its identity's hypotheses."""
    iid = case.identity_id
    if iid not in IDENTITY_IDS:
        raise AdmissibilityError(f"unknown identity id {iid!r}")

    if iid in ("thm2_1", "cor2_3"):
        _check_depth_arrays(case)
    elif iid == "thm2_2":
        _check_depth_arrays(case)
        if len(case.a) != len(case.k):
            raise AdmissibilityError("a must have one entry per inner slot")
        _check_a_family((case.a0,) + tuple(case.a))
    elif iid in ("cor4_1", "cor4_2", "stuffle_2"):
        _check_pair(case, need_ab=False)
    elif iid == "cor5_1":
        _check_pair(case, need_ab=True)
    elif iid in ("ex5_2a", "ex5_2b"):
        if case.x0 is None:
            raise AdmissibilityError("x0 is required")
        a = _as_complex(case.a0)
        b = _as_complex(case.a[0] if case.a else None)
        if _near_integer(a) or _near_integer(b):
            raise AdmissibilityError("a and b must avoid integers")
        if _near_negative_integer(b - a):
            raise AdmissibilityError("b - a must avoid negative integers")
    elif iid == "eq2_11":
        if case.x0 is None or case.x0.is_one():
            raise AdmissibilityError("x must be a root of unity != 1")
        if "m" not in case.extra or case.extra["m"] < 0:
            raise AdmissibilityError("extra['m'] must be a nonnegative integer")
        if _near_integer(_as_complex(case.a0)):
            raise AdmissibilityError("a must avoid integers")
    elif iid == "zhao_family":
        if case.extra.get("l", 0) < 1:
            raise AdmissibilityError("extra['l'] must be >= 1")
    elif iid == "T_relation":
        if len(case.k) < 1 or any(kl < 1 for kl in case.k):
            raise AdmissibilityError("exponents must be >= 1")
        if case.k[-1] < 2:
            raise AdmissibilityError("k_r must be >= 2")


def admissible(case: IdentityCase) -> bool:
    try:
        validate_case(case)
    except AdmissibilityError:
        return False
    return True


@dataclass(frozen=True)
class ResidualReport:
    case: IdentityCase
    residual: Any  # HPComplex, or None when evaluation itself errored
    eval_err: float
    tolerance: float
    passed: bool
    wall_time: float
    error: str | None = None

    @classmethod
    def from_residual(cls, case, residual, tolerance, wall_time) -> "ResidualReport":
        mag = residual.magnitude()
        return cls(
            case=case,
            residual=residual,
            eval_err=residual.err,
            tolerance=tolerance,
            passed=mag <= max(tolerance, 100.0 * residual.err),
            wall_time=wall_time,
        )
