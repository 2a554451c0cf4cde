"""Quaternary linear Reed-Muller codes: constructions and exhaustive checks."""
__version__ = "0.1.0"

from .code import (CapExceeded, QuaternaryCode, ZeroCodeError, code_type, codes_equal,
                   contains, enumerate_codewords, is_subcode, lee_weight_distribution,
                   min_lee_distance)
from .constructions import bq_plotkin, double_plotkin, gen_hat, gen_prime, plotkin, quaternary_plotkin
from .duality import InnerProduct, dual_code, kronecker_inner, standard_inner, verify_dual_pair
from .family import RmIndex, rm_code, rm_gamma_delta_predicted, rm_table
from .howell import howell_form
from .kernels import BACKEND

__all__ = [
    "BACKEND", "CapExceeded", "InnerProduct", "QuaternaryCode", "RmIndex", "ZeroCodeError",
    "bq_plotkin", "code_type", "codes_equal", "contains", "double_plotkin", "dual_code",
    "enumerate_codewords", "gen_hat", "gen_prime", "howell_form", "is_subcode",
    "kronecker_inner", "lee_weight_distribution", "min_lee_distance", "plotkin",
    "quaternary_plotkin", "rm_code", "rm_gamma_delta_predicted", "rm_table",
    "standard_inner", "verify_dual_pair",
]
