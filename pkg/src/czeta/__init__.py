"""High-precision cyclotomic multiple Hurwitz zeta values and their symmetry identities."""

from .config import EvalConfig, default_prec_bits
from .errors import (
    AdmissibilityError,
    ConfigError,
    CZetaError,
    DivergenceError,
    GenerationError,
    InternalConsistencyError,
    PoleError,
    PrecisionNotMetError,
)
from .hp import HPComplex
from .roots import MINUS_ONE, ONE, RootOfUnity
from .series import ZetaIndex, cmhzv, cmzv, li_single, mhs, mhs_hurwitz, mtv, mtv_T, phi, phi_ext

__version__ = "0.1.0"

__all__ = [
    "EvalConfig",
    "default_prec_bits",
    "CZetaError",
    "PoleError",
    "DivergenceError",
    "AdmissibilityError",
    "GenerationError",
    "ConfigError",
    "InternalConsistencyError",
    "PrecisionNotMetError",
    "HPComplex",
    "RootOfUnity",
    "ONE",
    "MINUS_ONE",
    "ZetaIndex",
    "cmhzv",
    "cmzv",
    "mtv",
    "mtv_T",
    "li_single",
    "phi",
    "phi_ext",
    "mhs",
    "mhs_hurwitz",
    "__version__",
]
