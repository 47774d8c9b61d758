"""
=======================================
Exact integral linear algebra
=======================================
"""

from .sparse_matrix import SparseIntMatrix
from .chain_complex import GradedBasis, IntegerChain, IntegerChainComplex
from .smith_normal_form import SnfResult, smith_normal_form
from .homology import (
    HomologyGroup,
    HomologySummary,
    check_chain_map,
    cohomology_table,
    homology,
    homology_report,
    induced_on_homology,
    is_identity_on_homology,
    reindex_poincare_lefschetz,
)


__all__ = [
    "SparseIntMatrix",
    "GradedBasis",
    "IntegerChain",
    "IntegerChainComplex",
    "SnfResult",
    "smith_normal_form",
    "HomologyGroup",
    "HomologySummary",
    "check_chain_map",
    "cohomology_table",
    "homology",
    "homology_report",
    "induced_on_homology",
    "is_identity_on_homology",
    "reindex_poincare_lefschetz",
]
