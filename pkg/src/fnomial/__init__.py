"""Exact F-nomial coefficients over cobweb-admissible sequences and their inversion."""

from .coeffs import (NonAdmissibleError, f_factorial, falling_factorial, fnomial,
                     multi_fnomial)
from .compositions import all_compositions, compositions_of
from .fseq import FSequence, check_admissible, make_sequence
from .inversion import (TriMatrix, fnomial_inverse_direct, fnomial_matrix, inverse_matrix,
                        invert_unitriangular, verify_delta_convolution)
from .polybasis import Polynomial, expand_monomial, phi_polynomial, roundtrip_check
from .tiling import (LambdaVector, lambda_decompose, lambda_two_part,
                     verify_theorem1_recurrence)

__all__ = [
    "FSequence", "make_sequence", "check_admissible",
    "NonAdmissibleError", "f_factorial", "falling_factorial", "fnomial", "multi_fnomial",
    "compositions_of", "all_compositions",
    "TriMatrix", "fnomial_matrix", "fnomial_inverse_direct", "invert_unitriangular",
    "inverse_matrix", "verify_delta_convolution",
    "Polynomial", "phi_polynomial", "expand_monomial", "roundtrip_check",
    "LambdaVector", "lambda_two_part", "lambda_decompose", "verify_theorem1_recurrence",
]
