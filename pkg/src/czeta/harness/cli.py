"""Command-line front end: evaluate series, check identities, run suites.

Exit codes: 0 = success / identity holds, 1 = identity or numeric failure,
2 = usage or config error.  Roots of unity are "p/q" angle-fraction strings
("0/1" = 1, "1/2" = -1, "1/4" = i); complex scalars accept "0.3", "0.3+0.2i",
or "0.3+0.2j".  CZETA_PREC_BITS overrides the default working precision.
"""

from __future__ import annotations

import dataclasses
import json
import sys

import click

from ..config import EvalConfig
from ..errors import (
    AdmissibilityError,
    ConfigError,
    DivergenceError,
    GenerationError,
    InternalConsistencyError,
    PoleError,
    PrecisionNotMetError,
)
from ..roots import RootOfUnity
from ..series import (
    ZetaIndex,
    cmhzv,
    cmzv,
    li_single,
    mhs,
    mhs_hurwitz,
    mtv,
    mtv_T,
    phi,
    phi_ext,
)
from ..symmetry import IDENTITY_IDS, LEMMA_IDS, IdentityCase, check_case, expansion_residual
from .serialize import residual_report_to_json, value_to_json
from .suite import load_spec, report_to_json, run_spec

_SERIES = ("cmzv", "cmhzv", "mtv", "mtv_T", "li", "phi", "Phi", "mhs", "mhs_hurwitz")


def _ints(s: str) -> tuple:
    try:
        return tuple(int(v) for v in s.split(","))
    except ValueError:
        raise ConfigError(f"expected comma-separated integers, got {s!r}") from None


def _roots(s: str) -> tuple:
    return tuple(RootOfUnity.parse(v) for v in s.split(","))


def _cx(s: str) -> complex:
    try:
        return complex(s.strip().replace("i", "j"))
    except ValueError:
        raise ConfigError(f"not a complex number: {s!r}") from None


def _cxs(s: str) -> tuple:
    return tuple(_cx(v) for v in s.split(","))


def _config(prec_bits: int | None) -> EvalConfig:
    return EvalConfig(prec_bits=prec_bits) if prec_bits else EvalConfig()


@click.group()
def cli() -> None:
    """High-precision cyclotomic multiple zeta evaluator and identity checker."""


@cli.command("eval")
@click.option("--series", required=True, type=click.Choice(_SERIES),
              help="which sum to evaluate")
@click.option("--k", "k_s", default=None, help="exponents, e.g. '1,2'")
@click.option("--x", "x_s", default=None, help="roots of unity, e.g. '0/1,1/2'")
@click.option("--c", "c_s", default=None, help="Hurwitz shifts (complex list)")
@click.option("--s", "s_s", default=None, help="argument of the phi kernels")
@click.option("--a", "a_s", default=None, help="offsets for mhs_hurwitz")
@click.option("--n", type=int, default=None, help="truncation order for mhs")
@click.option("--prec-bits", type=int, default=None)
def eval_cmd(series, k_s, x_s, c_s, s_s, a_s, n, prec_bits) -> int:
    """Print one series value as a {re, im, err, prec_bits} JSON record."""
    cfg = _config(prec_bits)

    def need(flag, val):
        if val is None:
            raise ConfigError(f"--{flag} is required for --series {series}")
        return val

    if series == "cmzv":
        v = cmzv(_ints(need("k", k_s)), _roots(need("x", x_s)), cfg)
    elif series == "mtv":
        v = mtv(_ints(need("k", k_s)), _roots(need("x", x_s)), cfg)
    elif series == "mtv_T":
        v = mtv_T(_ints(need("k", k_s)), cfg)
    elif series == "cmhzv":
        k = _ints(need("k", k_s))
        x = _roots(need("x", x_s))
        c = _cxs(need("c", c_s))
        v = cmhzv(ZetaIndex(k=k, x=x, c=c), cfg)
    elif series == "li":
        k = _ints(need("k", k_s))
        x = _roots(need("x", x_s))
        if len(k) != 1 or len(x) != 1:
            raise ConfigError("--series li takes a single k and a single x")
        c = _cxs(c_s)[0] if c_s else 1
        v = li_single(k[0], x[0], c, cfg)
    elif series == "phi":
        v = phi(_cx(need("s", s_s)), _cx(need("x", x_s)), cfg)
    elif series == "Phi":
        v = phi_ext(_cx(need("s", s_s)), _roots(need("x", x_s))[0], cfg)
    elif series == "mhs":
        v = mhs(need("n", n), _ints(need("k", k_s)), _roots(need("x", x_s)), cfg)
    else:  # mhs_hurwitz
        v = mhs_hurwitz(
            need("n", n), _ints(need("k", k_s)), _roots(need("x", x_s)),
            _cxs(need("a", a_s)), cfg,
        )
    click.echo(json.dumps(value_to_json(v)))
    return 0


def _build_case(identity, q, k_s, x0_s, x_s, y_s, a0_s, a_s, b_s, m, l) -> IdentityCase:
    k = _ints(k_s) if k_s else ()
    x = _roots(x_s) if x_s else ()
    if identity in ("thm2_1", "cor2_3"):
        return IdentityCase(identity_id=identity, q=q,
                            x0=RootOfUnity.parse(x0_s) if x0_s else None, k=k, x=x)
    if identity == "thm2_2":
        return IdentityCase(
            identity_id=identity, q=q,
            x0=RootOfUnity.parse(x0_s) if x0_s else None, k=k, x=x,
            a0=_cx(a0_s) if a0_s else None,
            a=_cxs(a_s) if a_s else (),
        )
    if identity in ("cor4_1", "cor4_2", "stuffle_2", "cor5_1"):
        if len(k) != 1 or len(x) != 1 or y_s is None:
            raise ConfigError(f"--id {identity} needs --q, a single --k, --x, and --y")
        return IdentityCase(
            identity_id=identity, q=q, x0=x[0], k=k,
            x=(RootOfUnity.parse(y_s),),
            a0=_cx(a0_s) if a0_s else None,
            a=(_cx(b_s),) if b_s else (),
        )
    if identity in ("ex5_2a", "ex5_2b"):
        if len(x) != 1 or a0_s is None or b_s is None:
            raise ConfigError(f"--id {identity} needs --x, --a, and --b")
        return IdentityCase(identity_id=identity, x0=x[0], a0=_cx(a0_s), a=(_cx(b_s),))
    if identity == "eq2_11":
        if len(x) != 1 or a0_s is None or m is None:
            raise ConfigError("--id eq2_11 needs --m, --x, and --a")
        return IdentityCase(identity_id=identity, x0=x[0], a0=_cx(a0_s), extra={"m": m})
    if identity == "zhao_family":
        if l is None:
            raise ConfigError("--id zhao_family needs --l")
        return IdentityCase(identity_id=identity, extra={"l": l})
    if identity == "T_relation":
        if not k:
            raise ConfigError("--id T_relation needs --k")
        return IdentityCase(identity_id=identity, k=k)
    raise ConfigError(f"unknown identity {identity!r}")  # pragma: no cover


@cli.command("check")
@click.option("--id", "identity", required=True, type=click.Choice(IDENTITY_IDS))
@click.option("--q", type=int, default=None, help="leading exponent k_0")
@click.option("--k", "k_s", default=None, help="inner exponents, e.g. '1,2'")
@click.option("--x0", "x0_s", default=None, help="leading root p/q")
@click.option("--x", "x_s", default=None, help="inner roots (or the sole root)")
@click.option("--y", "y_s", default=None, help="second root for the depth-2 forms")
@click.option("--a0", "a0_s", default=None, help="leading shift parameter")
@click.option("--a", "a_s", default=None, help="inner shifts (or first of a pair)")
@click.option("--b", "b_s", default=None, help="second shift for the depth-2 forms")
@click.option("--m", type=int, default=None, help="derivative order (eq2_11)")
@click.option("--l", type=int, default=None, help="family index (zhao_family)")
@click.option("--tolerance", type=float, default=1e-10)
@click.option("--prec-bits", type=int, default=None)
def check_cmd(identity, q, k_s, x0_s, x_s, y_s, a0_s, a_s, b_s, m, l, tolerance, prec_bits) -> int:
    """Check one identity instance; exit 0 when the residual vanishes."""
    # the two-parameter displays spell a = --a, so accept it for a0
    if identity in ("cor5_1", "ex5_2a", "ex5_2b", "eq2_11") and a0_s is None:
        a0_s, a_s = a_s, None
    case = _build_case(identity, q, k_s, x0_s, x_s, y_s, a0_s, a_s, b_s, m, l)
    report = check_case(case, _config(prec_bits), tolerance)
    click.echo(json.dumps(residual_report_to_json(report)))
    return 0 if report.passed else 1


@cli.command("suite")
@click.option("--config", "config_path", required=True, help="TOML suite file")
@click.option("--out", "out_path", default=None, help="report JSON path (default stdout)")
@click.option("--tolerance", type=float, default=None, help="override the file's tolerance")
def suite_cmd(config_path, out_path, tolerance) -> int:
    """Generate the suite's cases, run them all, write a JSON report."""
    spec = load_spec(config_path)
    if tolerance is not None:
        spec = dataclasses.replace(spec, tolerance=tolerance)
    rep = run_spec(spec)
    payload = json.dumps(report_to_json(rep), indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(payload + "\n")
    else:
        click.echo(payload)
    c = rep.counts
    click.echo(
        f"{c['passed']}/{c['total']} cases passed in {rep.total_wall_time:.1f}s",
        err=True,
    )
    return 0 if rep.passed else 1


@cli.command("expand")
@click.option("--lemma", required=True, type=click.Choice(LEMMA_IDS))
@click.option("--k", "k_s", default=None)
@click.option("--x", "x_s", default=None)
@click.option("--n", type=int, default=None)
@click.option("--j", type=int, default=None, help="pole slot (L3_6_principal)")
@click.option("--a", "a_s", default=None)
@click.option("--avec", "avec_s", default=None)
@click.option("--order", "m_order", type=int, default=2, help="truncation order M")
@click.option("--delta", type=float, default=1e-2)
@click.option("--prec-bits", type=int, default=None)
def expand_cmd(lemma, k_s, x_s, n, j, a_s, avec_s, m_order, delta, prec_bits) -> int:
    """Scaling test: the truncation residual must shrink by ~2^(M+1) when
    delta halves (by ~2^k_j for the principal-part lemma)."""
    cfg = _config(prec_bits)
    params: dict = {}
    if k_s:
        params["k"] = _ints(k_s)
    if x_s:
        roots = _roots(x_s)
        params["x"] = roots if lemma in ("L3_3", "L3_4", "L3_5", "L3_6_principal") else roots[0]
    if n is not None:
        params["n"] = n
    if j is not None:
        params["j"] = j
    if a_s:
        params["a"] = _cx(a_s)
    if avec_s:
        params["avec"] = _cxs(avec_s)

    r1 = expansion_residual(lemma, params, m_order, delta, cfg)
    r2 = expansion_residual(lemma, params, m_order, delta / 2, cfg)
    if r2.magnitude() == 0.0:
        raise ConfigError("residual vanished at delta/2; pick a larger delta")
    ratio = r1.magnitude() / r2.magnitude()
    if lemma == "L3_6_principal":
        expected = 2.0 ** params["k"][params["j"] - 1]
    else:
        expected = 2.0 ** (m_order + 1)
    ok = expected / 2 <= ratio <= expected * 2
    click.echo(json.dumps({
        "lemma": lemma,
        "order": m_order,
        "delta": delta,
        "residual": r1.magnitude(),
        "residual_half": r2.magnitude(),
        "ratio": ratio,
        "expected_ratio": expected,
        "ok": ok,
    }))
    return 0 if ok else 1


def cli_main(argv=None) -> int:
    """Programmatic entry point returning the exit code."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None,
                      standalone_mode=False)
    except click.exceptions.Exit as e:  # --help and friends
        return int(e.exit_code)
    except click.ClickException as e:
        e.show()
        return 2
    except click.Abort:
        return 2
    except (ConfigError, GenerationError, AdmissibilityError, PoleError,
            DivergenceError) as e:
        click.echo(f"error: {e}", err=True)
        return 2
    except (PrecisionNotMetError, InternalConsistencyError) as e:
        click.echo(f"numeric failure: {e}", err=True)
        return 1
    return int(rv) if rv is not None else 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
