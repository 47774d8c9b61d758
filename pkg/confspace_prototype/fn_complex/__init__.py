"""
=======================================
Cellular chain complex of configurations
=======================================
"""

from ..integral_linear.chain_complex import IntegerChain, IntegerChainComplex
from .differential import (
    absorption_boundary,
    boundary_cell,
    merge_boundary,
    permutation_sign,
    shuffles,
)
from .builder import FNComplex, build_complex, cochain_dual
from .log import BuildLog


__all__ = [
    "IntegerChain",
    "IntegerChainComplex",
    "absorption_boundary",
    "boundary_cell",
    "merge_boundary",
    "permutation_sign",
    "shuffles",
    "FNComplex",
    "build_complex",
    "cochain_dual",
    "BuildLog",
]
