"""Exact algebra: Laurent polynomials, braids, the Hecke algebra and its trace.

This module provides the algebraic pipeline from braid words to the
Homfly polynomial and the left/right inner products built on it.
"""

from .braid import (
    BraidWord,
    Permutation,
    inverse,
    inversions,
    parse_braid,
    perm_of,
    reduced_word,
    star,
)
from .hecke import (
    HeckeElement,
    braid_to_hecke,
    hecke_mul,
    mul_gen,
    neg_perm_elt,
    pos_perm_elt,
    reconstruct,
    solve_in_neg_basis,
    star_elt,
    unit,
)
from .inner import (
    Basis,
    GramMatrix,
    bilinear_inner,
    expand_in_neg_basis,
    gram,
    gram_determinant,
    inner,
    mfw_sharp,
)
from .polynomial import VZ, Z, ZT, LaurentPoly, add, coeff_of, mul
from .trace import (
    FramedHomfly,
    MFWReport,
    Side,
    TracePoly,
    extremal_column,
    framed_homfly,
    framed_homfly_of_element,
    homfly_P,
    mfw_report,
    mfw_window_check,
    ocneanu_trace,
    trace_of_braid,
)

__all__ = [
    # Polynomials
    "LaurentPoly",
    "Z",
    "ZT",
    "VZ",
    "add",
    "mul",
    "coeff_of",
    # Braids
    "BraidWord",
    "Permutation",
    "parse_braid",
    "star",
    "inverse",
    "perm_of",
    "reduced_word",
    "inversions",
    # Hecke algebra
    "HeckeElement",
    "unit",
    "mul_gen",
    "braid_to_hecke",
    "hecke_mul",
    "pos_perm_elt",
    "neg_perm_elt",
    "star_elt",
    "solve_in_neg_basis",
    "reconstruct",
    # Trace and Homfly
    "Side",
    "TracePoly",
    "FramedHomfly",
    "MFWReport",
    "ocneanu_trace",
    "trace_of_braid",
    "framed_homfly",
    "framed_homfly_of_element",
    "homfly_P",
    "extremal_column",
    "mfw_window_check",
    "mfw_report",
    # Inner products
    "Basis",
    "GramMatrix",
    "inner",
    "bilinear_inner",
    "gram",
    "gram_determinant",
    "expand_in_neg_basis",
    "mfw_sharp",
]
