"""Chain endomorphisms of the cellular complex with their provenance"""

from typing import Dict, List, Optional, Union

from ..free_group.endomorphisms import FreeEndomorphism, MappingClass
from ..integral_linear.chain_complex import IntegerChainComplex
from ..integral_linear.homology import check_chain_map
from ..integral_linear.sparse_matrix import SparseIntMatrix

Source = Union[FreeEndomorphism, MappingClass]


class ChainMap:
    """Per degree matrices of a chain endomorphism on a fixed complex.

    The matrices are indexed by the canonical basis of the complex; a degree
    without a matrix acts by zero. ``source`` records the endomorphism or
    mapping class the map was built from.
    """

    def __init__(
        self,
        complex_: IntegerChainComplex,
        matrices: Dict[int, SparseIntMatrix],
        source: Optional[Source] = None,
    ) -> None:
        self._complex = complex_
        self._matrices = dict(matrices)
        self._source = source
        self._certified = False

    @property
    def complex(self) -> IntegerChainComplex:
        """the complex acted on"""
        return self._complex

    @property
    def source(self) -> Optional[Source]:
        """the endomorphism or mapping class the map comes from"""
        return self._source

    @property
    def certified(self) -> bool:
        """True once commutation with the differential has been checked"""
        return self._certified

    @property
    def matrices(self) -> Dict[int, SparseIntMatrix]:
        """copy of the per degree matrices"""
        return dict(self._matrices)

    @property
    def degrees(self) -> List[int]:
        """degrees of the complex"""
        return self._complex.degrees

    def __getitem__(self, degree: int) -> SparseIntMatrix:
        dim = self._complex.basis.dimension(degree)
        return self._matrices.get(degree, SparseIntMatrix.zeros(dim, dim))

    def certify(self) -> "ChainMap":
        """Check that the map commutes with the differential

        Raises:
            ChainMapError: naming the first failing degree
        """
        check_chain_map(self._matrices, self._complex)
        self._certified = True
        return self

    def is_identity(self, degree: Optional[int] = None) -> bool:
        """True if the matrix of ``degree`` (or of every degree) is the identity"""
        degrees = self.degrees if degree is None else [degree]
        return all(self[d].is_identity() for d in degrees)

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        if other.complex is not self.complex:
            raise ValueError("chain maps act on different complexes")
        source = None
        if self.source is not None and type(self.source) is type(other.source):
            source = self.source * other.source
        product = {d: self[d] @ other[d] for d in self.degrees}
        out = ChainMap(self.complex, product, source)
        out._certified = self.certified and other.certified
        return out

    def to_json(self) -> Dict:
        """per degree triplets and the normal form of the source"""
        source = self.source
        if isinstance(source, MappingClass):
            text = source.normal_form()
        else:
            text = None if source is None else str(source)
        return {
            "phi": text,
            "certified": self.certified,
            "matrices": {
                str(d): [list(t) for t in self[d].triplets()] for d in self.degrees
            },
        }

    def __repr__(self) -> str:
        return f"ChainMap(degrees={self.degrees}, certified={self.certified})"
