"""Graded bases, integer chains and finitely generated free chain complexes"""

from collections import defaultdict
from typing import (
    Dict,
    Hashable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
import numpy.typing as npt

from ..exceptions import BoundarySquareError
from .sparse_matrix import SparseIntMatrix, dense_zeros


class GradedBasis:
    """Ordered basis of a graded free abelian group.

    Every degree carries a tuple of hashable basis elements; the position of
    an element in its tuple is its matrix index.
    """

    def __init__(self, elements_by_degree: Mapping[int, Sequence[Hashable]]):
        self._elements: Dict[int, Tuple[Hashable, ...]] = {}
        self._index: Dict[int, Dict[Hashable, int]] = {}
        self._degree_of: Dict[Hashable, int] = {}
        for degree in sorted(elements_by_degree):
            elements = tuple(elements_by_degree[degree])
            index = {element: i for i, element in enumerate(elements)}
            if len(index) != len(elements):
                raise ValueError(f"duplicate basis elements in degree {degree}")
            for element in elements:
                if element in self._degree_of:
                    raise ValueError(f"{element} appears in two degrees")
                self._degree_of[element] = degree
            self._elements[degree] = elements
            self._index[degree] = index

    @property
    def degrees(self) -> List[int]:
        """degrees carrying at least one declared basis tuple, sorted"""
        return list(self._elements)

    def elements(self, degree: int) -> Tuple[Hashable, ...]:
        """basis elements of a degree (empty tuple if absent)"""
        return self._elements.get(degree, ())

    def dimension(self, degree: int) -> int:
        """rank of the free group in a degree"""
        return len(self._elements.get(degree, ()))

    def index(self, degree: int, element: Hashable) -> int:
        """position of an element inside its degree"""
        return self._index[degree][element]

    def degree_of(self, element: Hashable) -> int:
        """degree of a basis element"""
        return self._degree_of[element]

    def __contains__(self, element: object) -> bool:
        return element in self._degree_of

    def __len__(self) -> int:
        return len(self._degree_of)

    def __iter__(self) -> Iterator[Hashable]:
        for degree in self._elements:
            yield from self._elements[degree]

    def ranks(self) -> Dict[int, int]:
        """{degree: rank}"""
        return {d: len(e) for d, e in self._elements.items()}

    def reindexed(self, degree_map) -> "GradedBasis":
        """Same elements with every degree d moved to degree_map(d)"""
        return GradedBasis({degree_map(d): e for d, e in self._elements.items()})


class IntegerChain:
    """Homogeneous integer combination of basis elements."""

    def __init__(self, degree: int, terms: Optional[Mapping[Hashable, int]] = None):
        self.degree = degree
        self._terms: Dict[Hashable, int] = {
            k: int(v) for k, v in (terms or {}).items() if v != 0
        }

    @property
    def terms(self) -> Dict[Hashable, int]:
        """copy of the nonzero coefficients"""
        return dict(self._terms)

    def coefficient(self, element: Hashable) -> int:
        """coefficient of a basis element"""
        return self._terms.get(element, 0)

    def is_zero(self) -> bool:
        """True for the zero chain"""
        return not self._terms

    def items(self):
        """(element, coefficient) pairs"""
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "IntegerChain") -> "IntegerChain":
        if self.is_zero():
            return IntegerChain(other.degree, other._terms)
        if not other.is_zero() and other.degree != self.degree:
            raise ValueError(
                f"cannot add chains of degrees {self.degree} and {other.degree}"
            )
        out: Dict[Hashable, int] = defaultdict(int, self._terms)
        for key, value in other.items():
            out[key] += value
        return IntegerChain(self.degree, out)

    def __neg__(self) -> "IntegerChain":
        return IntegerChain(self.degree, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "IntegerChain") -> "IntegerChain":
        return self + (-other)

    def __rmul__(self, scale: int) -> "IntegerChain":
        return IntegerChain(self.degree, {k: scale * v for k, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerChain):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __repr__(self) -> str:
        body = " ".join(f"{v:+d}*[{k}]" for k, v in self._terms.items()) or "0"
        return f"IntegerChain(degree={self.degree}, {body})"


class IntegerChainComplex:
    """Bounded complex of finitely generated free abelian groups.

    The differential of degree d is a sparse matrix whose columns are indexed
    by the degree d basis and whose rows are indexed by the degree d-1 basis.
    """

    def __init__(
        self,
        basis: GradedBasis,
        differentials: Mapping[int, SparseIntMatrix],
    ):
        """Create the complex

        Args:
            basis (GradedBasis): basis in every degree
            differentials (Mapping[int, SparseIntMatrix]): differential of
                each degree; missing degrees are zero

        Raises:
            ValueError: if a matrix shape does not match the basis
        """
        self.basis = basis
        self._differentials: Dict[int, SparseIntMatrix] = {}
        for degree in basis.degrees:
            shape = (basis.dimension(degree - 1), basis.dimension(degree))
            matrix = differentials.get(degree, SparseIntMatrix.zeros(*shape))
            if matrix.shape != shape:
                raise ValueError(
                    f"differential of degree {degree} has shape {matrix.shape}, "
                    f"expected {shape}"
                )
            self._differentials[degree] = matrix
        extra = set(differentials) - set(basis.degrees)
        for degree in extra:
            if not differentials[degree].is_zero():
                raise ValueError(f"nonzero differential in empty degree {degree}")

    @property
    def degrees(self) -> List[int]:
        """sorted degrees of the basis"""
        return self.basis.degrees

    def differential(self, degree: int) -> SparseIntMatrix:
        """matrix of the differential leaving a degree"""
        if degree in self._differentials:
            return self._differentials[degree]
        return SparseIntMatrix.zeros(
            self.basis.dimension(degree - 1), self.basis.dimension(degree)
        )

    def ranks(self) -> Dict[int, int]:
        """{degree: rank of the chain group}"""
        return self.basis.ranks()

    def euler_characteristic(self) -> int:
        """alternating sum of the chain group ranks"""
        return sum((-1) ** d * r for d, r in self.ranks().items())

    def check_square_zero(self) -> None:
        """Verify that consecutive differentials compose to zero

        Raises:
            BoundarySquareError: naming the first cell whose boundary of the
                boundary is nonzero
        """
        for degree in self.degrees:
            square = self.differential(degree - 1) @ self.differential(degree)
            if not square.is_zero():
                (_, col), coeff = min(square.entries.items())
                cell = self.basis.elements(degree)[col]
                raise BoundarySquareError(
                    f"d(d({cell})) != 0 in degree {degree} (coefficient {coeff})",
                    cell=str(cell),
                )

    def chain_to_vector(self, chain: IntegerChain) -> npt.NDArray[np.object_]:
        """Coordinates of a chain in the basis of its degree"""
        vector = dense_zeros(self.basis.dimension(chain.degree), 1)[:, 0]
        for element, coeff in chain.items():
            vector[self.basis.index(chain.degree, element)] = coeff
        return vector

    def vector_to_chain(self, degree: int, vector: Sequence[int]) -> IntegerChain:
        """Chain with the given coordinates"""
        elements = self.basis.elements(degree)
        return IntegerChain(
            degree, {elements[i]: int(v) for i, v in enumerate(vector) if v != 0}
        )

    def boundary(self, chain: IntegerChain) -> IntegerChain:
        """Apply the differential to a chain"""
        matrix = self.differential(chain.degree)
        targets = self.basis.elements(chain.degree - 1)
        out: Dict[Hashable, int] = defaultdict(int)
        columns = matrix.columns()
        for element, coeff in chain.items():
            col = self.basis.index(chain.degree, element)
            for row, value in columns.get(col, {}).items():
                out[targets[row]] += coeff * value
        return IntegerChain(chain.degree - 1, out)
