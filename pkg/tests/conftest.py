import mpmath as mp
import pytest

from czeta.config import EvalConfig


def mdiff(value, target, prec: int = 260):
    """|value - target| at high working precision.

    Accepts HPComplex, mpmath scalars, ints, floats, complex on either side.
    """
    with mp.workprec(prec):
        v = value.as_mpc() if hasattr(value, "as_mpc") else mp.mpmathify(value)
        t = target.as_mpc() if hasattr(target, "as_mpc") else mp.mpmathify(target)
        return abs(v - t)


@pytest.fixture(scope="session")
def cfg():
    """Default evaluation config, shared so the in-process cache is reused."""
    return EvalConfig()


@pytest.fixture(scope="session")
def fast_cfg():
    """Smaller cutoff for tests that only need ~1e-12."""
    return EvalConfig(cutoff=30_000, target_err=1e-10)
