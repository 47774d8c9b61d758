"""Integral homology of free chain complexes and induced maps"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

import numpy as np
import numpy.typing as npt

from ..exceptions import ChainMapError
from .chain_complex import IntegerChain, IntegerChainComplex
from .smith_normal_form import smith_normal_form
from .sparse_matrix import SparseIntMatrix, dense_identity, dense_zeros

logger = logging.getLogger(__name__)

object_array = npt.NDArray[np.object_]


@dataclass(eq=False)
class HomologyGroup:
    """Homology in one degree, ``Z^betti + sum Z/t`` for t in torsion.

    Generators are stored as columns of ``generators`` (free generators first,
    then one generator per torsion summand). ``projector`` maps a cycle, given
    by its coordinates in the chain basis, to its coordinates in the Smith
    basis of the cycle group; ``slots`` lists which of those coordinates carry
    the generators above, and ``orders`` their orders (0 for free).
    """

    degree: int
    betti: int
    torsion: List[int]
    representatives: List[IntegerChain] = field(default_factory=list)
    torsion_representatives: List[IntegerChain] = field(default_factory=list)
    generators: object_array = field(default=None, repr=False)
    projector: object_array = field(default=None, repr=False)
    slots: List[int] = field(default_factory=list)
    orders: List[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        """number of nontrivial generators (free and torsion)"""
        return self.betti + len(self.torsion)

    def is_zero(self) -> bool:
        """True for the trivial group"""
        return self.rank == 0

    def classify(self, cycle: object_array) -> List[int]:
        """Coordinates of a cycle on the generators, torsion parts reduced

        Args:
            cycle (object_array): chain coordinates of a cycle

        Returns:
            List[int]: one coordinate per generator
        """
        if self.rank == 0:
            return []
        coords = self.projector @ cycle
        out = []
        for slot, order in zip(self.slots, self.orders):
            value = int(coords[slot])
            out.append(value % order if order else value)
        return out


@dataclass
class HomologySummary:
    """Homology of a complex in every degree of its basis"""

    groups: Dict[int, HomologyGroup]

    def __getitem__(self, degree: int) -> HomologyGroup:
        return self.groups[degree]

    @property
    def degrees(self) -> List[int]:
        """sorted degrees"""
        return sorted(self.groups)

    def betti(self) -> Dict[int, int]:
        """{degree: free rank}"""
        return {d: self.groups[d].betti for d in self.degrees}

    def torsion(self) -> Dict[int, List[int]]:
        """{degree: torsion coefficients}"""
        return {d: list(self.groups[d].torsion) for d in self.degrees}

    def euler_characteristic(self) -> int:
        """alternating sum of the Betti numbers"""
        return sum((-1) ** d * b for d, b in self.betti().items())

    def nonzero(self) -> Dict[int, Tuple[int, List[int]]]:
        """{degree: (betti, torsion)} for nonzero groups only"""
        return {
            d: (g.betti, list(g.torsion))
            for d, g in self.groups.items()
            if not g.is_zero()
        }


def _degree_homology(
    complex_: IntegerChainComplex, degree: int
) -> HomologyGroup:
    """homology group of a single degree"""
    dim = complex_.basis.dimension(degree)
    outgoing = complex_.differential(degree)
    incoming = complex_.differential(degree + 1)

    if outgoing.rows > 0 and dim > 0:
        snf_out = smith_normal_form(outgoing)
        rank_out = snf_out.rank
        right, right_inverse = snf_out.right, snf_out.right_inverse
    else:
        rank_out = 0
        right, right_inverse = dense_identity(dim), dense_identity(dim)

    kernel = right[:, rank_out:]
    kernel_dim = dim - rank_out
    to_kernel = right_inverse[rank_out:, :]

    if incoming.cols > 0 and kernel_dim > 0:
        boundaries = to_kernel @ incoming.to_dense()
        snf_in = smith_normal_form(SparseIntMatrix.from_dense(boundaries))
        factors = snf_in.diagonal
        smith_left, smith_left_inverse = snf_in.left, snf_in.left_inverse
    else:
        factors = []
        smith_left = dense_identity(kernel_dim)
        smith_left_inverse = dense_identity(kernel_dim)

    all_generators = kernel @ smith_left_inverse if kernel_dim else dense_zeros(dim, 0)
    projector = smith_left @ to_kernel if kernel_dim else dense_zeros(0, dim)

    free_slots = list(range(len(factors), kernel_dim))
    torsion_slots = [i for i, d in enumerate(factors) if d > 1]
    slots = free_slots + torsion_slots
    orders = [0] * len(free_slots) + [factors[i] for i in torsion_slots]

    group = HomologyGroup(
        degree=degree,
        betti=len(free_slots),
        torsion=[factors[i] for i in torsion_slots],
        generators=all_generators[:, slots] if slots else dense_zeros(dim, 0),
        projector=projector,
        slots=slots,
        orders=orders,
    )
    group.representatives = [
        complex_.vector_to_chain(degree, all_generators[:, i]) for i in free_slots
    ]
    group.torsion_representatives = [
        complex_.vector_to_chain(degree, all_generators[:, i]) for i in torsion_slots
    ]
    return group


def homology(complex_: IntegerChainComplex) -> HomologySummary:
    """Integral homology of a complex with generator representatives

    Args:
        complex_ (IntegerChainComplex): complex with d o d = 0

    Returns:
        HomologySummary: Betti numbers, torsion and representatives per degree
    """
    groups = {}
    for degree in complex_.degrees:
        groups[degree] = _degree_homology(complex_, degree)
        logger.debug(
            "H_%s : betti %s torsion %s",
            degree,
            groups[degree].betti,
            groups[degree].torsion,
        )
    return HomologySummary(groups)


def check_chain_map(
    chain_map: Mapping[int, SparseIntMatrix], complex_: IntegerChainComplex
) -> None:
    """Check that a family of endomorphisms commutes with the differential

    Args:
        chain_map (Mapping[int, SparseIntMatrix]): matrix of each degree
        complex_ (IntegerChainComplex): the complex

    Raises:
        ChainMapError: naming the first degree where f d != d f
    """
    for degree in complex_.degrees:
        dim = complex_.basis.dimension(degree)
        below = complex_.basis.dimension(degree - 1)
        f_here = chain_map.get(degree, SparseIntMatrix.zeros(dim, dim))
        f_below = chain_map.get(degree - 1, SparseIntMatrix.zeros(below, below))
        if f_here.shape != (dim, dim):
            raise ChainMapError(
                f"map in degree {degree} has shape {f_here.shape}, "
                f"expected {(dim, dim)}",
                degree=degree,
            )
        boundary = complex_.differential(degree)
        if f_below @ boundary != boundary @ f_here:
            raise ChainMapError(
                f"map does not commute with the differential in degree {degree}",
                degree=degree,
            )


def induced_on_homology(
    chain_map: Mapping[int, SparseIntMatrix],
    complex_: IntegerChainComplex,
    summary: HomologySummary = None,
) -> Dict[int, SparseIntMatrix]:
    """Matrix of the induced endomorphism of homology in every degree

    Columns and rows are indexed by the generators of ``summary`` (free
    generators first, then torsion generators); rows of torsion generators
    are reduced modulo their order.

    Args:
        chain_map (Mapping[int, SparseIntMatrix]): matrix of each degree
        complex_ (IntegerChainComplex): the complex
        summary (HomologySummary): homology of the complex; computed if None

    Raises:
        ChainMapError: if the input is not a chain map

    Returns:
        Dict[int, SparseIntMatrix]: induced matrix per degree
    """
    check_chain_map(chain_map, complex_)
    if summary is None:
        summary = homology(complex_)

    induced = {}
    for degree in complex_.degrees:
        group = summary[degree]
        dim = complex_.basis.dimension(degree)
        mapped = chain_map.get(degree, SparseIntMatrix.zeros(dim, dim)).to_dense()
        entries = {}
        for col in range(group.rank):
            image = mapped @ group.generators[:, col]
            for row, value in enumerate(group.classify(image)):
                if value:
                    entries[(row, col)] = value
        induced[degree] = SparseIntMatrix(group.rank, group.rank, entries)
    return induced


def is_identity_on_homology(matrix: SparseIntMatrix, group: HomologyGroup) -> bool:
    """True if the induced matrix is the identity, torsion blocks included

    Torsion rows are compared modulo the order of their generator, so a
    diagonal entry 1 + order is still the identity.
    """
    for row in range(group.rank):
        order = group.orders[row] if row < len(group.orders) else 0
        for col in range(group.rank):
            value = matrix[row, col] - (1 if row == col else 0)
            if order:
                value %= order
            if value != 0:
                return False
    return True


def reindex_poincare_lefschetz(
    summary: HomologySummary, n: int
) -> Dict[int, HomologyGroup]:
    """Cohomology of the open configuration space from the compactified complex

    H^i(F_n) is the homology of the compactified complex in degree 2n - i.

    Args:
        summary (HomologySummary): homology of an FN complex on n points
        n (int): number of points

    Returns:
        Dict[int, HomologyGroup]: {i: group} for every available i
    """
    return {
        2 * n - d: summary[d] for d in sorted(summary.degrees, reverse=True)
    }


def cohomology_table(summary: HomologySummary, n: int, genus: int) -> Dict:
    """JSON-ready cohomology report

    Args:
        summary (HomologySummary): homology of an FN complex on n points
        n (int): number of points
        genus (int): genus of the surface

    Returns:
        Dict: ``{"n":..,"g":..,"betti":{"<i>":..},"torsion":{"<i>":[..]}}``
    """
    table = reindex_poincare_lefschetz(summary, n)
    degrees = sorted(table)
    return {
        "n": n,
        "g": genus,
        "betti": {str(i): table[i].betti for i in degrees},
        "torsion": {str(i): list(table[i].torsion) for i in degrees},
    }


def homology_report(summary: HomologySummary, n: int, genus: int) -> Dict:
    """JSON-ready report of homology indexed by chain degree"""
    return {
        "n": n,
        "g": genus,
        "betti": {str(d): summary[d].betti for d in summary.degrees},
        "torsion": {str(d): list(summary[d].torsion) for d in summary.degrees},
    }
