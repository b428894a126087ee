"""Computational checks of Coxeter's formula for truncated braid groups B_n(d)."""

__version__ = "0.1.0"

from .words import (Presentation, Word, braid_permutation, braid_presentation, free_reduce,
                    full_twist_word, parse_word, triangle_presentation)
from .cosets import (CapExceeded, EnumerationResult, PermutationRep, element_order,
                     enumerate_cosets, group_order, perm_rep, word_image)
from .tiling import (CombinatorialTiling, Geometry, SchlafliSymbol, branched_cover_check,
                     classify, coxeter_order_formula, face_count, synthesize_tiling)
