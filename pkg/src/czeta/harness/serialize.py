"""Text codecs for values, parameters, and identity cases.

Conventions shared by the CLI and the suite files: roots of unity are "p/q"
angle strings, complex scalars are [re, im] pairs of doubles, and
high-precision values are {re, im, err, prec_bits} records whose re/im are
decimal strings carrying enough digits to reproduce the binary value exactly
(one digit per 3.32 bits, plus slack).
"""

from __future__ import annotations

import mpmath as mp

from ..errors import ConfigError
from ..hp import HPComplex
from ..roots import RootOfUnity
from ..symmetry import IdentityCase, ResidualReport


def _digits_for(prec_bits: int) -> int:
    # enough decimal digits that reading the string back recovers the
    # exact binary value (unique-decoding bound + slack)
    return int(prec_bits * 0.30103) + 5


def value_to_json(v: HPComplex) -> dict:
    n = _digits_for(v.prec_bits)
    with mp.workprec(v.prec_bits):
        re_s = mp.nstr(v.re, n)
        im_s = mp.nstr(v.im, n)
    return {"re": re_s, "im": im_s, "err": v.err, "prec_bits": v.prec_bits}


def value_from_json(d: dict) -> HPComplex:
    prec = int(d["prec_bits"])
    with mp.workprec(prec):
        re = mp.mpf(d["re"])
        im = mp.mpf(d["im"])
    return HPComplex(re, im, prec, float(d["err"]))


def param_to_json(z) -> list | None:
    """Complex scalar -> [re, im] doubles (parameters enter as doubles)."""
    if z is None:
        return None
    zc = complex(z)
    return [zc.real, zc.imag]


def param_from_json(v):
    if v is None:
        return None
    if isinstance(v, (int, float)):
        return complex(v, 0.0)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise ConfigError(f"complex scalar must be a number or [re, im] pair, got {v!r}")


def case_to_json(case: IdentityCase) -> dict:
    d: dict = {"id": case.identity_id}
    if case.q is not None:
        d["q"] = case.q
    if case.x0 is not None:
        d["x0"] = str(case.x0)
    if case.k:
        d["k"] = list(case.k)
    if case.x:
        d["x"] = [str(r) for r in case.x]
    if case.a0 is not None:
        d["a0"] = param_to_json(case.a0)
    if case.a:
        d["a"] = [param_to_json(v) for v in case.a]
    if case.extra:
        d["extra"] = dict(case.extra)
    if case.label:
        d["label"] = case.label
    return d


def case_from_json(d: dict) -> IdentityCase:
    if "id" not in d:
        raise ConfigError("case record is missing 'id'")
    known = {"id", "q", "x0", "k", "x", "a0", "a", "extra", "label"}
    junk = set(d) - known
    if junk:
        raise ConfigError(f"unknown case keys: {sorted(junk)}")
    return IdentityCase(
        identity_id=d["id"],
        q=int(d["q"]) if "q" in d else None,
        x0=RootOfUnity.parse(d["x0"]) if "x0" in d else None,
        k=tuple(int(v) for v in d.get("k", ())),
        x=tuple(RootOfUnity.parse(s) for s in d.get("x", ())),
        a0=param_from_json(d.get("a0")),
        a=tuple(param_from_json(v) for v in d.get("a", ())),
        extra={str(k): int(v) for k, v in d.get("extra", {}).items()},
        label=str(d.get("label", "")),
    )


def residual_report_to_json(r: ResidualReport) -> dict:
    return {
        "case": case_to_json(r.case),
        "residual": None if r.residual is None else value_to_json(r.residual),
        "eval_err": r.eval_err,
        "tolerance": r.tolerance,
        "passed": r.passed,
        "wall_time": r.wall_time,
        "error": r.error,
    }


def residual_report_from_json(d: dict) -> ResidualReport:
    return ResidualReport(
        case=case_from_json(d["case"]),
        residual=None if d.get("residual") is None else value_from_json(d["residual"]),
        eval_err=float(d["eval_err"]),
        tolerance=float(d["tolerance"]),
        passed=bool(d["passed"]),
        wall_time=float(d["wall_time"]),
        error=d.get("error"),
    )
