"""Evaluation configuration.

Working precision defaults to 192 bits (about 57 decimal digits) and can be
overridden globally through the CZETA_PREC_BITS environment variable; every
evaluator also accepts an explicit EvalConfig.  The cutoff is a *budget*, not
a fixed truncation point: evaluation stops at the first checkpoint whose
error estimate meets target_err.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import ConfigError

_ENV_PREC = "CZETA_PREC_BITS"


def default_prec_bits() -> int:
    raw = os.environ.get(_ENV_PREC)
    if raw is None:
        return 192
    try:
        bits = int(raw)
    except ValueError:
        raise ConfigError(f"{_ENV_PREC} must be an integer, got {raw!r}") from None
    if bits < 32:
        raise ConfigError(f"{_ENV_PREC} must be at least 32, got {bits}")
    return bits


@dataclass(frozen=True)
class EvalConfig:
    cutoff: int = 200_000
    richardson_levels: int = 4
    period_block: bool = True
    target_err: float = 1e-14
    prec_bits: int = field(default_factory=default_prec_bits)

    def __post_init__(self):
        if self.cutoff < 1:
            raise ConfigError("cutoff must be positive")
        if self.richardson_levels < 0:
            raise ConfigError("richardson_levels must be nonnegative")
        if not self.target_err > 0:
            raise ConfigError("target_err must be positive")

    def validate_for_order(self, max_order: int) -> None:
        """Cutoff must leave room for the extrapolation grid: at least
        10 * (max root order) * 2^richardson_levels terms."""
        need = 10 * max_order * 2**self.richardson_levels
        if self.cutoff < need:
            raise ConfigError(
                f"cutoff {self.cutoff} too small for root order {max_order} "
                f"with {self.richardson_levels} extrapolation levels (need >= {need})"
            )
