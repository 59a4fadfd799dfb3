from .coeffs import coeff_B, coeff_C, coeff_D
from .brackets import sym_li_bracket, hat_li, hat_ti
from .cases import IdentityCase, ResidualReport, IDENTITY_IDS, admissible, validate_case
from .residuals import (
    residual_thm2_1,
    residual_thm2_2,
    residual_cor2_3,
    residual_corollary,
    residual_eq2_11,
    residual_zhao,
    residual_T_relation,
    residual_stuffle_2,
    check_case,
)
from .expansions import expansion_residual, LEMMA_IDS

__all__ = [
    "coeff_B",
    "coeff_C",
    "coeff_D",
    "sym_li_bracket",
    "hat_li",
    "hat_ti",
    "IdentityCase",
    "ResidualReport",
    "IDENTITY_IDS",
    "admissible",
    "validate_case",
    "residual_thm2_1",
    "residual_thm2_2",
    "residual_cor2_3",
    "residual_corollary",
    "residual_eq2_11",
    "residual_zhao",
    "residual_T_relation",
    "residual_stuffle_2",
    "check_case",
    "expansion_residual",
    "LEMMA_IDS",
]
