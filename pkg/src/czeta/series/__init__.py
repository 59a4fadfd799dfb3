from .single import phi, phi_ext, li_single
from .nested import cmhzv, cmzv, mtv, mtv_T, ZetaIndex, clear_cache
from .harmonic import mhs, mhs_hurwitz

__all__ = [
    "phi",
    "phi_ext",
    "li_single",
    "cmhzv",
    "cmzv",
    "mtv",
    "mtv_T",
    "ZetaIndex",
    "clear_cache",
    "mhs",
    "mhs_hurwitz",
]
