"""
Equivariant homology and cohomology of the affine Grassmannian of SL_n,
computed exactly with double symmetric functions, the affine nil-Hecke ring
and Peterson's j-functions.

>>> from affine_schubert import AffinePerm, compute_j
>>> print(compute_j(AffinePerm.s(0, 2)).elt.coefficient(AffinePerm.s(1, 2)))
1
"""

from .doublesym import (CutoffTooSmall, SymFuncDual, SymFuncPrimal, double_h, double_monomial,
                        double_schur, equivariant_kostka, matrix_M, monomial_expand, mtilde,
                        pairing, quotient_project)
from .nilhecke import NilHeckeElt, coproduct, expand_group_elt, xi
from .peterson import compute_j, j_special, k_bounded_partitions, kostka_matrix_aff
from .poly import Poly, simple_root
from .schubert import (affine_double_stanley, branching_coeffs, epsilon_gr, epsilon_inf, gkm_check,
                       k_double_schur, pullback_expansion)
from .weyl import AffinePerm, FinitePermZ, partition_to_w_aff, translation

__all__ = [
    "AffinePerm", "CutoffTooSmall", "FinitePermZ", "NilHeckeElt", "Poly", "SymFuncDual",
    "SymFuncPrimal", "affine_double_stanley", "branching_coeffs", "compute_j", "coproduct",
    "double_h", "double_monomial", "double_schur", "epsilon_gr", "epsilon_inf",
    "equivariant_kostka", "expand_group_elt", "gkm_check", "j_special", "k_bounded_partitions",
    "k_double_schur", "kostka_matrix_aff", "matrix_M", "monomial_expand", "mtilde", "pairing",
    "partition_to_w_aff", "pullback_expansion", "quotient_project", "simple_root", "translation",
    "xi",
]
