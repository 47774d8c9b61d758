"""
=======================================
Surface model and configuration cells
=======================================
"""

from .surface import (
    BoundaryInterval,
    SurfaceParams,
    arc_cell_count,
    column_cell_count,
    expected_cell_count,
    rising_factorial,
)
from .cells import (
    CellBasis,
    CellTuple,
    cell_degree,
    enumerate_cells,
    factorize_cell,
    product_cells,
)


__all__ = [
    "BoundaryInterval",
    "SurfaceParams",
    "arc_cell_count",
    "column_cell_count",
    "expected_cell_count",
    "rising_factorial",
    "CellBasis",
    "CellTuple",
    "cell_degree",
    "enumerate_cells",
    "factorize_cell",
    "product_cells",
]
