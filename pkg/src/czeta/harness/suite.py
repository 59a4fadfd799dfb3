"""Declarative verification suites: TOML in, JSON report out.

A suite file pins a seed, a tolerance, eval-config overrides, and any mix of
explicit cases and random-generation blocks.  Generation is deterministic
given the seed; draws that violate an identity's hypotheses are rejected and
resampled.  The runner never aborts on a bad case — evaluation errors are
recorded as failures in the report.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import random
import time
from dataclasses import dataclass, field

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - python < 3.11
    import tomli as tomllib

from ..config import EvalConfig, default_prec_bits
from ..errors import AdmissibilityError, ConfigError, CZetaError, GenerationError
from ..roots import RootOfUnity
from ..symmetry import IdentityCase, ResidualReport, check_case, validate_case
from .serialize import case_from_json, case_to_json, residual_report_from_json, residual_report_to_json

REPORT_SCHEMA = 1

# identities whose cases this generator knows how to draw
_GENERATABLE = (
    "thm2_1",
    "thm2_2",
    "cor2_3",
    "cor4_1",
    "cor4_2",
    "cor5_1",
    "ex5_2a",
    "ex5_2b",
    "eq2_11",
    "stuffle_2",
    "T_relation",
)

_MAX_RESAMPLES = 10_000


@dataclass(frozen=True)
class RandomBlock:
    """One random-generation request: draw `count` admissible cases."""

    identity_id: str
    count: int
    depth: tuple[int, int] = (1, 2)
    q_max: int = 3
    k_max: int = 3
    weight_max: int = 7
    orders: tuple[int, ...] = (1, 2, 3, 4, 6)
    re_range: tuple[float, float] = (0.1, 0.9)
    im_max: float = 1.0
    m_max: int = 5  # eq2_11 only

    def __post_init__(self):
        if self.identity_id not in _GENERATABLE:
            raise ConfigError(
                f"cannot generate random cases for {self.identity_id!r}; "
                f"supported: {', '.join(_GENERATABLE)}"
            )
        if self.count < 0:
            raise ConfigError("count must be >= 0")
        if not 1 <= self.depth[0] <= self.depth[1]:
            raise ConfigError("depth range must satisfy 1 <= lo <= hi")


@dataclass(frozen=True)
class SuiteSpec:
    seed: int = 0
    tolerance: float = 1e-10
    cases: tuple[IdentityCase, ...] = ()
    random_blocks: tuple[RandomBlock, ...] = ()
    prec_bits: int | None = None
    target_err: float | None = None
    cutoff: int | None = None
    digest: str = ""

    def eval_config(self) -> EvalConfig:
        kw = {}
        if self.prec_bits is not None:
            kw["prec_bits"] = self.prec_bits
        if self.target_err is not None:
            kw["target_err"] = self.target_err
        if self.cutoff is not None:
            kw["cutoff"] = self.cutoff
        return EvalConfig(**kw)


def _spec_digest(payload: bytes) -> str:
    return hashlib.sha256(payload).hexdigest()


def load_spec(path: str) -> SuiteSpec:
    """Parse a TOML suite file.  IO and syntax problems raise ConfigError."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise ConfigError(f"cannot read suite file {path!r}: {e}") from e
    try:
        doc = tomllib.loads(raw.decode("utf-8"))
    except (tomllib.TOMLDecodeError, UnicodeDecodeError) as e:
        raise ConfigError(f"malformed TOML in {path!r}: {e}") from e
    return spec_from_dict(doc, digest=_spec_digest(raw))


def spec_from_dict(doc: dict, digest: str | None = None) -> SuiteSpec:
    known = {"seed", "tolerance", "eval", "case", "random"}
    junk = set(doc) - known
    if junk:
        raise ConfigError(f"unknown suite keys: {sorted(junk)}")

    ev = doc.get("eval", {})
    ev_junk = set(ev) - {"prec_bits", "target_err", "cutoff"}
    if ev_junk:
        raise ConfigError(f"unknown [eval] keys: {sorted(ev_junk)}")

    cases = tuple(case_from_json(c) for c in doc.get("case", []))

    blocks = []
    for b in doc.get("random", []):
        known_b = {
            "id", "count", "depth", "q_max", "k_max", "weight_max",
            "orders", "re_range", "im_max", "m_max",
        }
        junk_b = set(b) - known_b
        if junk_b:
            raise ConfigError(f"unknown [[random]] keys: {sorted(junk_b)}")
        if "id" not in b or "count" not in b:
            raise ConfigError("[[random]] blocks need 'id' and 'count'")
        blocks.append(
            RandomBlock(
                identity_id=b["id"],
                count=int(b["count"]),
                depth=tuple(b.get("depth", (1, 2))),
                q_max=int(b.get("q_max", 3)),
                k_max=int(b.get("k_max", 3)),
                weight_max=int(b.get("weight_max", 7)),
                orders=tuple(b.get("orders", (1, 2, 3, 4, 6))),
                re_range=tuple(b.get("re_range", (0.1, 0.9))),
                im_max=float(b.get("im_max", 1.0)),
                m_max=int(b.get("m_max", 5)),
            )
        )

    if digest is None:
        digest = _spec_digest(json.dumps(doc, sort_keys=True, default=str).encode())

    return SuiteSpec(
        seed=int(doc.get("seed", 0)),
        tolerance=float(doc.get("tolerance", 1e-10)),
        cases=cases,
        random_blocks=tuple(blocks),
        prec_bits=int(ev["prec_bits"]) if "prec_bits" in ev else None,
        target_err=float(ev["target_err"]) if "target_err" in ev else None,
        cutoff=int(ev["cutoff"]) if "cutoff" in ev else None,
        digest=digest,
    )


# ---------------------------------------------------------------------------
# random generation — deterministic draws + rejection


def _draw_root(rng: random.Random, orders) -> RootOfUnity:
    den = rng.choice(list(orders))
    return RootOfUnity(rng.randrange(den), den)


def _draw_param(rng: random.Random, blk: RandomBlock) -> complex:
    # keep Re away from the integers (the identities all exclude them) and
    # keep Im moderate so cot/csc factors stay well conditioned
    lo, hi = blk.re_range
    re = rng.uniform(lo, hi)
    im = rng.uniform(-blk.im_max, blk.im_max) if blk.im_max > 0 else 0.0
    return complex(re, im)


def _draw_case(rng: random.Random, blk: RandomBlock) -> IdentityCase:
    iid = blk.identity_id
    if iid in ("thm2_1", "thm2_2", "cor2_3"):
        r = rng.randint(blk.depth[0], blk.depth[1])
        q = rng.randint(1, blk.q_max)
        k = tuple(rng.randint(1, blk.k_max) for _ in range(r))
        x0 = _draw_root(rng, blk.orders)
        x = tuple(_draw_root(rng, blk.orders) for _ in range(r))
        a0 = _draw_param(rng, blk) if iid == "thm2_2" else None
        a = tuple(_draw_param(rng, blk) for _ in range(r)) if iid == "thm2_2" else ()
        return IdentityCase(identity_id=iid, q=q, x0=x0, k=k, x=x, a0=a0, a=a)
    if iid in ("cor4_1", "cor4_2", "cor5_1", "stuffle_2"):
        q = rng.randint(1, blk.q_max)
        k = rng.randint(1, blk.k_max)
        x = _draw_root(rng, blk.orders)
        y = _draw_root(rng, blk.orders)
        a0 = _draw_param(rng, blk) if iid == "cor5_1" else None
        a = (_draw_param(rng, blk),) if iid == "cor5_1" else ()
        return IdentityCase(identity_id=iid, q=q, x0=x, k=(k,), x=(y,), a0=a0, a=a)
    if iid in ("ex5_2a", "ex5_2b"):
        x = _draw_root(rng, blk.orders)
        return IdentityCase(
            identity_id=iid,
            x0=x,
            a0=_draw_param(rng, blk),
            a=(_draw_param(rng, blk),),
        )
    if iid == "eq2_11":
        x = _draw_root(rng, blk.orders)
        return IdentityCase(
            identity_id=iid,
            x0=x,
            a0=_draw_param(rng, blk),
            extra={"m": rng.randint(0, blk.m_max)},
        )
    if iid == "T_relation":
        r = rng.randint(blk.depth[0], blk.depth[1])
        k = tuple(rng.randint(1, blk.k_max) for _ in range(r - 1)) + (
            rng.randint(2, max(2, blk.k_max)),
        )
        return IdentityCase(identity_id=iid, k=k)
    raise ConfigError(f"no generator for {iid!r}")  # pragma: no cover


def _weight(case: IdentityCase) -> int:
    return (case.q or 0) + sum(case.k)


def generate_cases(spec: SuiteSpec) -> list[IdentityCase]:
    """Explicit cases, then the random blocks, deterministically from the seed."""
    out: list[IdentityCase] = []
    for i, case in enumerate(spec.cases):
        if not case.label:
            case = dataclasses.replace(case, label=f"{case.identity_id} explicit #{i}")
        validate_case(case)  # surface bad explicit cases now, not at run time
        out.append(case)
    rng = random.Random(spec.seed)
    for bi, blk in enumerate(spec.random_blocks):
        accepted = 0
        attempts = 0
        last_reason = "no draw attempted"
        while accepted < blk.count:
            if attempts >= _MAX_RESAMPLES:
                raise GenerationError(
                    f"block {bi} ({blk.identity_id}): {_MAX_RESAMPLES} resamples "
                    f"exhausted; last rejection: {last_reason}"
                )
            attempts += 1
            case = _draw_case(rng, blk)
            if _weight(case) > blk.weight_max:
                last_reason = f"weight {_weight(case)} > cap {blk.weight_max}"
                continue
            try:
                validate_case(case)
            except AdmissibilityError as e:
                last_reason = str(e)
                continue
            out.append(
                dataclasses.replace(
                    case,
                    label=f"{blk.identity_id} seed={spec.seed} block={bi} #{accepted}",
                )
            )
            accepted += 1
    return out


# ---------------------------------------------------------------------------
# running


@dataclass
class SuiteReport:
    spec_digest: str
    tolerance: float
    reports: list[ResidualReport] = field(default_factory=list)
    total_wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def counts(self) -> dict:
        n_pass = sum(1 for r in self.reports if r.passed)
        return {"total": len(self.reports), "passed": n_pass, "failed": len(self.reports) - n_pass}


def run_suite(
    cases: list[IdentityCase],
    cfg: EvalConfig | None = None,
    tolerance: float = 1e-10,
    spec_digest: str = "",
) -> SuiteReport:
    """Check every case; evaluation errors become failed entries, never aborts."""
    cfg = cfg or EvalConfig()
    t0 = time.perf_counter()
    reports: list[ResidualReport] = []
    for case in cases:
        tc = time.perf_counter()
        try:
            reports.append(check_case(case, cfg, tolerance))
        except CZetaError as e:
            reports.append(
                ResidualReport(
                    case=case,
                    residual=None,
                    eval_err=float("inf"),
                    tolerance=tolerance,
                    passed=False,
                    wall_time=time.perf_counter() - tc,
                    error=f"{type(e).__name__}: {e}",
                )
            )
    return SuiteReport(
        spec_digest=spec_digest,
        tolerance=tolerance,
        reports=reports,
        total_wall_time=time.perf_counter() - t0,
    )


def run_spec(spec: SuiteSpec) -> SuiteReport:
    cases = generate_cases(spec)
    return run_suite(cases, spec.eval_config(), spec.tolerance, spec.digest)


def report_to_json(rep: SuiteReport) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "spec_digest": rep.spec_digest,
        "tolerance": rep.tolerance,
        "passed": rep.passed,
        "counts": rep.counts,
        "total_wall_time": rep.total_wall_time,
        "cases": [residual_report_to_json(r) for r in rep.reports],
    }


def report_from_json(d: dict) -> SuiteReport:
    if d.get("schema") != REPORT_SCHEMA:
        raise ConfigError(f"unsupported report schema {d.get('schema')!r}")
    return SuiteReport(
        spec_digest=d["spec_digest"],
        tolerance=float(d["tolerance"]),
        reports=[residual_report_from_json(c) for c in d["cases"]],
        total_wall_time=float(d["total_wall_time"]),
    )
