"""Involution models for the wreath products G(r, n) = C_r wr S_n.

Exact computation of the involution model (M, rho), its decomposition over
symmetric classes of absolute involutions, and the supporting combinatorics
(colored permutations, multitableaux, cyclotomic characters).
"""

from .classes import SymmetricClassLabel, class_size, enumerate_symmetric_classes, shapes_of_class
from .cyclotomic import CyclotomicInt
from .group import ColoredPermutation, EnumerationLimitError, parse_window, parse_window_string
from .model import aux_matrix, decompose_class, model_character, model_matrix, no_fixed_point_module_check
from .tableaux import inverse_rsk, rsk, shape_of

__version__ = "0.1.0"
