"""Configuration spaces of surfaces and the mapping class group action"""

from importlib_metadata import version as metadata_version, PackageNotFoundError

from .__version__ import __version__
from .exceptions import (
    BoundarySquareError,
    ChainMapError,
    ConfspaceError,
    GuardrailError,
    ParseError,
)
from .integral_linear import SparseIntMatrix, homology
from .core_model import CellTuple, SurfaceParams, enumerate_cells
from .fn_complex import FNComplex, build_complex
from .free_group import (
    FreeEndomorphism,
    MappingClass,
    johnson_depth,
    parse_mapping_class,
)
from .simplicial_pairs import mor_action, relative_homology_oracle
from .mcg_action import (
    ChainMap,
    action_on_cohomology,
    action_on_homology,
    full_action,
    verify_johnson_triviality,
)


try:
    __version__ = metadata_version("confspace_prototype")
except PackageNotFoundError:  # pragma: no cover
    # package is not installed
    pass

__all__ = [
    "__version__",
    "BoundarySquareError",
    "ChainMapError",
    "ConfspaceError",
    "GuardrailError",
    "ParseError",
    "SparseIntMatrix",
    "homology",
    "CellTuple",
    "SurfaceParams",
    "enumerate_cells",
    "FNComplex",
    "build_complex",
    "FreeEndomorphism",
    "MappingClass",
    "johnson_depth",
    "parse_mapping_class",
    "mor_action",
    "relative_homology_oracle",
    "ChainMap",
    "action_on_cohomology",
    "action_on_homology",
    "full_action",
    "verify_johnson_triviality",
]
