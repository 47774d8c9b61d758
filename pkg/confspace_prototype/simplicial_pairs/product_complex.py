"""Normalized chains of products of a Delta complex relative to fat diagonals

A k-simplex of the simplicial set generated by a Delta complex is a pair
(tau, theta) of a nondegenerate simplex tau of dimension m and a monotone
surjection theta from {0..k} onto {0..m}, stored as its value tuple. A
k-simplex of the n-fold product is one such pair per coordinate; it is
nondegenerate unless some theta_c(j) = theta_c(j + 1) holds in every
coordinate for the same j.

The subcomplex removed is the union of the diagonals (two coordinates equal
as simplices) and of the locus where some coordinate lies in a marked
subcomplex (the basepoint, or the marked boundary).
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterator, Optional, Sequence, Tuple

from scipy.special import comb
from tqdm import tqdm

from ..integral_linear.chain_complex import GradedBasis, IntegerChainComplex
from ..integral_linear.sparse_matrix import SparseIntMatrix
from .one_complex import OneComplexModel

logger = logging.getLogger(__name__)

Component = Tuple[str, Tuple[int, ...]]
ProductSimplex = Tuple[Component, ...]

BASEPOINT_MODE = "A"
BOUNDARY_MODE = "A'"
MODES = (BASEPOINT_MODE, BOUNDARY_MODE)


def jump_surjection(k: int, jumps: Sequence[int]) -> Tuple[int, ...]:
    """Monotone surjection of {0..k} increasing by one exactly at ``jumps``

    >>> jump_surjection(3, [2])
    (0, 0, 1, 1)
    """
    jumps = set(jumps)
    values, level = [], 0
    for i in range(k + 1):
        if i in jumps:
            level += 1
        values.append(level)
    return tuple(values)


def surjections(k: int, m: int) -> Iterator[Tuple[int, ...]]:
    """All monotone surjections {0..k} -> {0..m}"""
    for jumps in itertools.combinations(range(1, k + 1), m):
        yield jump_surjection(k, jumps)


def jumps_of(theta: Sequence[int]) -> FrozenSet[int]:
    """positions where a monotone surjection increases"""
    return frozenset(i for i in range(1, len(theta)) if theta[i] != theta[i - 1])


def face_component(model: OneComplexModel, component: Component, i: int) -> Component:
    """i-th face of a (possibly degenerate) simplex of the Delta complex"""
    name, theta = component
    rest = theta[:i] + theta[i + 1 :]
    value = theta[i]
    if theta.count(value) > 1:
        return name, rest
    face = model.faces(name)[value]
    return face, tuple(v if v < value else v - 1 for v in rest)


def product_face(
    model: OneComplexModel, simplex: ProductSimplex, i: int
) -> ProductSimplex:
    """i-th face, coordinatewise"""
    return tuple(face_component(model, c, i) for c in simplex)


def is_degenerate(simplex: ProductSimplex) -> bool:
    """True if the product simplex is a common degeneracy"""
    size = len(simplex[0][1]) - 1
    covered = set()
    for _, theta in simplex:
        covered |= jumps_of(theta)
    return len(covered) != size


def in_diagonal(simplex: ProductSimplex) -> bool:
    """True if two coordinates coincide"""
    return len(set(simplex)) != len(simplex)


def in_locus(simplex: ProductSimplex, locus: FrozenSet[str]) -> bool:
    """True if some coordinate lies in the marked subcomplex"""
    return any(name in locus for name, _ in simplex)


class SimplicialPairComplex(IntegerChainComplex):
    """Relative normalized chains of (Y^n, diagonals + marked locus).

    ``mode`` is ``"A"`` to remove configurations meeting the basepoint and
    ``"A'"`` to remove those meeting the marked subcomplex of the model.
    """

    default_pair_options = {
        "progress": False,
        "check_square": True,
    }

    def __init__(
        self,
        model: OneComplexModel,
        n: int,
        mode: str = BASEPOINT_MODE,
        options: Optional[Dict] = None,
    ):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        if n < 1:
            raise ValueError(f"number of points must be positive, got {n}")
        self.model = model
        self.n = n
        self.mode = mode
        self.options = self._validate_pair_options(options)
        self.locus = locus_of(model, mode)

        by_degree = {
            k: list(self._enumerate(k)) for k in range(n * model.dimension + 1)
        }
        basis = GradedBasis(by_degree)
        differentials = {
            k: self._differential(basis, k) for k in basis.degrees if k > 0
        }
        super().__init__(basis, differentials)
        logger.info("product simplices : %s", len(basis))
        if self.options["check_square"]:
            self.check_square_zero()

    def _validate_pair_options(self, options: Optional[Dict]) -> Dict:
        """validate the options

        Args:
            options (Optional[Dict]): options
        """
        valid_keys = self.default_pair_options.keys()
        if options is None:
            return dict(self.default_pair_options)
        for k in options:
            if k not in valid_keys:
                raise ValueError(
                    f"Option {k} not recognized, valid keys are {list(valid_keys)}"
                )
        return {**self.default_pair_options, **options}

    def _enumerate(self, k: int) -> Iterator[ProductSimplex]:
        """nondegenerate k-simplices outside the removed subcomplex"""
        candidates = [
            (name, theta)
            for name in self.model.simplices()
            if name not in self.locus and self.model.dimension_of(name) <= k
            for theta in surjections(k, self.model.dimension_of(name))
        ]
        for simplex in itertools.product(candidates, repeat=self.n):
            if not is_degenerate(simplex) and not in_diagonal(simplex):
                yield simplex

    def _differential(self, basis: GradedBasis, k: int) -> SparseIntMatrix:
        entries: Dict[Tuple[int, int], int] = {}
        simplices = basis.elements(k)
        iterator = simplices
        if self.options["progress"]:
            iterator = tqdm(simplices, desc=f"dimension {k}")
        for col, simplex in enumerate(iterator):
            faces = relative_boundary(self.model, simplex, self.locus)
            for face, coeff in faces.items():
                key = (basis.index(k - 1, face), col)
                total = entries.get(key, 0) + coeff
                if total:
                    entries[key] = total
                else:
                    entries.pop(key, None)
        return SparseIntMatrix(basis.dimension(k - 1), basis.dimension(k), entries)


def locus_of(model: OneComplexModel, mode: str) -> FrozenSet[str]:
    """simplices of the model whose coordinates are removed in a mode"""
    if mode == BASEPOINT_MODE:
        return frozenset({model.basepoint})
    return model.marked


def relative_boundary(
    model: OneComplexModel, simplex: ProductSimplex, locus: FrozenSet[str]
) -> Dict[ProductSimplex, int]:
    """Alternating sum of faces, dropping degenerate faces and the subcomplex"""
    out: Dict[ProductSimplex, int] = {}
    size = len(simplex[0][1]) - 1
    if size == 0:
        return out
    for i in range(size + 1):
        face = product_face(model, simplex, i)
        if is_degenerate(face) or in_diagonal(face) or in_locus(face, locus):
            continue
        total = out.get(face, 0) + (-1) ** i
        if total:
            out[face] = total
        else:
            out.pop(face)
    return out


def estimate_simplices(model: OneComplexModel, n: int, mode: str) -> int:
    """Upper bound on the number of relative basis simplices

    Counts tuples of (simplex, surjection) whose jump sets cover every
    position, by inclusion and exclusion over the uncovered positions. The
    diagonal is not subtracted.
    """
    locus = locus_of(model, mode)
    free_counts = [
        sum(1 for s in model.simplices(d) if s not in locus)
        for d in range(model.dimension + 1)
    ]
    total = 0
    for k in range(n * model.dimension + 1):
        for uncovered in range(k + 1):
            per_coordinate = sum(
                count * int(comb(k - uncovered, d, exact=True))
                for d, count in enumerate(free_counts)
            )
            total += (
                (-1) ** uncovered
                * int(comb(k, uncovered, exact=True))
                * per_coordinate**n
            )
    return total


def loop_simplex(edges: Sequence[str], jumps: Sequence[int]) -> ProductSimplex:
    """Product simplex with coordinate c on ``edges[c]``, jumping at ``jumps[c]``"""
    k = len(jumps)
    return tuple(
        (edge, jump_surjection(k, [jump])) for edge, jump in zip(edges, jumps)
    )

