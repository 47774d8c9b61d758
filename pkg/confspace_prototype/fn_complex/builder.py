"""Assembly, duality and export of the cellular chain complex"""

import json
import logging
from typing import Dict, Optional, Union

from tqdm import tqdm

from ..core_model.cells import CellBasis, CellTuple, enumerate_cells
from ..core_model.surface import SurfaceParams
from ..integral_linear.chain_complex import GradedBasis, IntegerChainComplex
from ..integral_linear.sparse_matrix import SparseIntMatrix
from .differential import boundary_cell
from .log import BuildLog

logger = logging.getLogger(__name__)


class FNComplex(IntegerChainComplex):
    """Chain complex of the compactified configuration space of n points.

    Its basis is the :class:`CellBasis` of all cells, graded by cell degree.
    """

    default_build_options = {
        "check_square": True,
        "progress": False,
    }

    def __init__(
        self,
        params: SurfaceParams,
        n: int,
        options: Optional[Dict] = None,
        basis: Optional[CellBasis] = None,
        differentials: Optional[Dict[int, SparseIntMatrix]] = None,
    ):
        """Build the complex

        Args:
            params (SurfaceParams): surface model
            n (int): number of points
            options (Optional[Dict]): ``check_square`` verifies d o d = 0 and
                ``progress`` shows a progress bar. Defaults to None.
            basis (Optional[CellBasis]): precomputed basis, used when loading
            differentials (Optional[Dict[int, SparseIntMatrix]]): precomputed
                differentials, used when loading

        Raises:
            BoundarySquareError: if d o d != 0 and ``check_square`` is set
        """
        self.params = params
        self.n = n
        self.options = self._validate_build_options(options)
        self.log = BuildLog()

        if basis is None:
            basis = enumerate_cells(params, n)
        if differentials is None:
            differentials = self._assemble(basis)
        super().__init__(basis, differentials)
        self.basis: CellBasis = basis

        logger.info("cells : %s", len(basis))
        if self.options["check_square"]:
            self.check_square_zero()

    @property
    def genus(self) -> int:
        """genus of the surface"""
        return self.params.genus

    def _validate_build_options(self, options: Optional[Dict]) -> Dict:
        """validate the build options

        Args:
            options (Optional[Dict]): options
        """
        valid_keys = self.default_build_options.keys()
        if options is None:
            return dict(self.default_build_options)
        for k in options:
            if k not in valid_keys:
                raise ValueError(
                    f"Option {k} not recognized, valid keys are {list(valid_keys)}"
                )
        return {**self.default_build_options, **options}

    def _assemble(self, basis: CellBasis) -> Dict[int, SparseIntMatrix]:
        """boundary matrices of every degree"""
        differentials = {}
        for degree in basis.degrees:
            cells = basis.cells_of_degree(degree)
            entries = {}
            iterator = cells
            if self.options["progress"]:
                iterator = tqdm(cells, desc=f"degree {degree}")
            for col, cell in enumerate(iterator):
                for face, coeff in boundary_cell(cell, self.params).items():
                    entries[(basis.index(degree - 1, face), col)] = coeff
            matrix = SparseIntMatrix(
                basis.dimension(degree - 1), basis.dimension(degree), entries
            )
            self.log.update(degree, len(cells), matrix.nnz)
            differentials[degree] = matrix
        return differentials

    def pure_arc_indices(self):
        """indices of the pure arc cells inside degree n"""
        return [
            i
            for i, cell in enumerate(self.basis.cells_of_degree(self.n))
            if cell.is_pure_arc()
        ]

    def to_json(self) -> Dict:
        """Plain data dump: per degree bases and differential triplets"""
        return {
            "n": self.n,
            "g": self.genus,
            "basis": {
                str(d): [c.serialize() for c in self.basis.cells_of_degree(d)]
                for d in self.degrees
            },
            "differentials": {
                str(d): [list(t) for t in self.differential(d).triplets()]
                for d in self.degrees
            },
        }

    def save(self, filename: str) -> None:
        """Save the complex as JSON

        Args:
            filename (str): output file
        """
        with open(filename, "w", encoding="utf-8") as fhandle:
            json.dump(self.to_json(), fhandle, indent=1)

    @classmethod
    def from_json(cls, data: Dict, check_square: bool = True) -> "FNComplex":
        """Rebuild a complex from :meth:`to_json` output

        Args:
            data (Dict): the dump
            check_square (bool): verify d o d = 0 on load

        Returns:
            FNComplex: the complex
        """
        params = SurfaceParams(int(data["g"]))
        n = int(data["n"])
        cells = [
            CellTuple.parse(text) for texts in data["basis"].values() for text in texts
        ]
        basis = CellBasis(params, n, cells)
        differentials = {}
        for key, triplets in data["differentials"].items():
            degree = int(key)
            differentials[degree] = SparseIntMatrix.from_triplets(
                basis.dimension(degree - 1), basis.dimension(degree), triplets
            )
        return cls(
            params,
            n,
            options={"check_square": check_square},
            basis=basis,
            differentials=differentials,
        )

    @classmethod
    def load(cls, filename: str) -> "FNComplex":
        """Load a complex saved by :meth:`save`"""
        with open(filename, "r", encoding="utf-8") as fhandle:
            return cls.from_json(json.load(fhandle))


def build_complex(
    params: Union[SurfaceParams, int], n: int, options: Optional[Dict] = None
) -> FNComplex:
    """Cellular chain complex of the compactified configuration space

    Args:
        params (Union[SurfaceParams, int]): surface model or its genus
        n (int): number of points
        options (Optional[Dict]): build options of :class:`FNComplex`

    Raises:
        ValueError: if n is negative
        BoundarySquareError: if d o d != 0

    Returns:
        FNComplex: the complex, certified d o d = 0 unless disabled
    """
    if isinstance(params, int):
        params = SurfaceParams(params)
    if n < 0:
        raise ValueError(f"number of points must be nonnegative, got {n}")
    return FNComplex(params, n, options)


def cochain_dual(complex_: IntegerChainComplex) -> IntegerChainComplex:
    """Dual complex with transposed differentials and reversed degrees

    Degree d of the input becomes degree -d of the output, so that homology
    of the output in degree -i is the cohomology of the input in degree i.

    Args:
        complex_ (IntegerChainComplex): finitely generated free complex

    Returns:
        IntegerChainComplex: the dual complex
    """
    basis = complex_.basis
    dual_basis = GradedBasis({-d: basis.elements(d) for d in basis.degrees})
    differentials = {
        -d: complex_.differential(d + 1).transpose() for d in basis.degrees
    }
    return IntegerChainComplex(dual_basis, differentials)
