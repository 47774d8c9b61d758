"""Action of free group endomorphisms on the top relative homology of the wedge

The group H_n(X^n, diagonals + basepoint locus) is free on the pure arc cells:
a cell t distributes the labels over the loops of X with an order on each
loop, and its class Z_t is the signed sum of the n-simplices whose jumps
decrease along each loop. A simplex has coefficient equal to the sign of its
jumps read along ``t.all_labels()``; the representative simplex rep(t), with
jumps n, n-1, ..., 1 along ``t.all_labels()``, has coefficient
(-1)^(n(n-1)/2).

An endomorphism is realized by a simplicial map X' -> X from a subdivided
wedge. The subdivided class of t in X' is pushed forward and the coefficient
of each rep(t') is read off, which gives one column of the matrix.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import sympy
from tqdm import tqdm

from ..core_model.cells import CellTuple, arc_orders
from ..core_model.surface import SurfaceParams, arc_cell_count
from ..exceptions import ChainMapError, GuardrailError
from ..fn_complex.differential import permutation_sign
from ..free_group.endomorphisms import (
    FreeEndomorphism,
    MappingClass,
    dehn_twist_generator,
)
from ..integral_linear.sparse_matrix import SparseIntMatrix
from .one_complex import BASEPOINT, wedge_model
from .product_complex import (
    BASEPOINT_MODE,
    ProductSimplex,
    estimate_simplices,
    jump_surjection,
    relative_boundary,
)
from .self_maps import SimplicialSelfMap, collapse_map, endo_to_map

logger = logging.getLogger(__name__)

# one term of a subdivided class: {label: (edge, jump)} and its sign
Term = Tuple[Dict[int, Tuple[str, int]], int]

default_moriyama_options = {
    "check_cycles": False,
    "progress": False,
    "max_points": 3,
}


def _validate_moriyama_options(options: Optional[Dict]) -> Dict:
    """validate the options

    Args:
        options (Optional[Dict]): options
    """
    valid_keys = default_moriyama_options.keys()
    if options is None:
        return dict(default_moriyama_options)
    for k in options:
        if k not in valid_keys:
            raise ValueError(
                f"Option {k} not recognized, valid keys are {list(valid_keys)}"
            )
    return {**default_moriyama_options, **options}


def pure_arc_basis(params: SurfaceParams, n: int) -> List[CellTuple]:
    """Pure arc cells on labels 1..n in canonical order

    >>> len(pure_arc_basis(SurfaceParams(2), 3))
    120
    """
    labels = range(1, n + 1)
    cells = {
        CellTuple.from_arcs(arcs) for arcs in arc_orders(labels, params.arc_count)
    }
    return sorted(cells, key=CellTuple.sort_key)


def representative_sign(n: int) -> int:
    """coefficient of rep(t) in Z_t"""
    return (-1) ** (n * (n - 1) // 2)


def _ordered_partitions(
    pool: Sequence[int], sizes: Sequence[int]
) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """disjoint subsets of ``pool`` of the given sizes, each sorted increasingly"""
    if not sizes:
        yield ()
        return
    for first in itertools.combinations(pool, sizes[0]):
        rest = [x for x in pool if x not in first]
        for tail in _ordered_partitions(rest, sizes[1:]):
            yield (first,) + tail


def _layouts(
    self_map: SimplicialSelfMap, cell: CellTuple, surviving_only: bool
) -> Iterator[Tuple[Dict[int, Tuple[str, int]], int]]:
    """coordinates of every simplex of a subdivided class, with backward counts"""
    n = cell.n
    per_loop = []
    for arc, points in enumerate(cell.arcs):
        loop = self_map.loops[arc]
        slots = [
            i
            for i, (edge, _) in enumerate(loop)
            if not surviving_only or self_map.edge_map[edge] is not None
        ]
        choices = []
        for choice in itertools.combinations_with_replacement(slots, len(points)):
            groups = []
            for slot, members in itertools.groupby(
                zip(choice, points), key=lambda pair: pair[0]
            ):
                edge, sign = loop[slot]
                groups.append((edge, sign, [label for _, label in members]))
            choices.append(groups)
        per_loop.append(choices)

    for layout in itertools.product(*per_loop):
        groups = [group for loop_groups in layout for group in loop_groups]
        sizes = [len(group[2]) for group in groups]
        for jump_sets in _ordered_partitions(range(1, n + 1), sizes):
            coords: Dict[int, Tuple[str, int]] = {}
            backward = 0
            for (edge, sign, labels), jumps in zip(groups, jump_sets):
                along = list(reversed(jumps)) if sign > 0 else list(jumps)
                for label, jump in zip(labels, along):
                    coords[label] = (edge, jump)
                if sign < 0:
                    backward += len(labels)
            yield coords, backward


def _term_sign(
    cell: CellTuple, coords: Dict[int, Tuple[str, int]], backward: int
) -> int:
    source = permutation_sign([coords[label][1] - 1 for label in cell.all_labels()])
    return source * (-1) ** backward


def subdivided_terms(
    self_map: SimplicialSelfMap, cell: CellTuple, surviving_only: bool = True
) -> Iterator[Term]:
    """Simplices of the subdivided class of a pure arc cell in X'

    The points of each loop are spread over its sub-edges in loop order.
    Points sharing a sub-edge take jumps that decrease along the loop on a
    forward sub-edge and increase on a backward one. The coefficient is the
    sign of the jumps along ``cell.all_labels()``, negated once per point on
    a backward sub-edge.

    Args:
        self_map (SimplicialSelfMap): map whose domain is subdivided
        cell (CellTuple): pure arc cell on labels 1..n
        surviving_only (bool): skip simplices with a point on a sub-edge the
            map collapses, whose image lies in the basepoint locus

    Yields:
        Term: the coordinates of the simplex and its coefficient
    """
    for coords, backward in _layouts(self_map, cell, surviving_only):
        yield coords, _term_sign(cell, coords, backward)


def term_simplex(coords: Dict[int, Tuple[str, int]], n: int) -> ProductSimplex:
    """product simplex of a term, coordinate c carrying label c + 1"""
    return tuple(
        (coords[label][0], jump_surjection(n, [coords[label][1]]))
        for label in range(1, n + 1)
    )


def _image_cell(
    self_map: SimplicialSelfMap, coords: Dict[int, Tuple[str, int]], genus: int
) -> Optional[CellTuple]:
    """cell t' when the image of a term is rep(t'), else None

    The image is rep(t') exactly when the image arcs, read by decreasing
    jump, never go back to a smaller arc.
    """
    by_jump = sorted(coords.items(), key=lambda item: -item[1][1])
    arcs: List[List[int]] = [[] for _ in range(2 * genus)]
    last = 0
    for label, (edge, _) in by_jump:
        arc = int(self_map.edge_map[edge][1:]) - 1
        if arc < last:
            return None
        last = arc
        arcs[arc].append(label)
    return CellTuple.from_arcs(arcs)


def check_subdivided_cycles(
    self_map: SimplicialSelfMap, basis: Sequence[CellTuple]
) -> None:
    """Check that every subdivided class is a relative cycle of X'

    Raises:
        ChainMapError: naming the first cell whose class has a boundary
    """
    locus = frozenset({BASEPOINT})
    for cell in basis:
        n = cell.n
        if n == 0:
            continue
        total: Dict[ProductSimplex, int] = {}
        for coords, coeff in subdivided_terms(self_map, cell, surviving_only=False):
            simplex = term_simplex(coords, n)
            for face, sign in relative_boundary(
                self_map.domain, simplex, locus
            ).items():
                value = total.get(face, 0) + coeff * sign
                if value:
                    total[face] = value
                else:
                    total.pop(face, None)
        if total:
            raise ChainMapError(
                f"subdivided class of {cell.serialize()} is not a cycle", degree=n
            )


def pushforward_matrix(
    self_map: SimplicialSelfMap,
    basis: Sequence[CellTuple],
    progress: bool = False,
) -> SparseIntMatrix:
    """Matrix of the map X' -> X on top homology, columns and rows on ``basis``

    Args:
        self_map (SimplicialSelfMap): simplicial map from a subdivided wedge
        basis (Sequence[CellTuple]): the output of :func:`pure_arc_basis`
        progress (bool): show a progress bar over the cells

    Returns:
        SparseIntMatrix: square matrix of size ``len(basis)``
    """
    index = {cell: i for i, cell in enumerate(basis)}
    size = len(basis)
    if size == 0:
        return SparseIntMatrix.zeros(0, 0)
    n = basis[0].n
    genus = basis[0].genus
    if n == 0:
        return SparseIntMatrix.identity(1)

    eps = representative_sign(n)
    entries: Dict[Tuple[int, int], int] = {}
    iterator = basis
    if progress:
        iterator = tqdm(basis, desc=f"Mor_{n}")
    for col, cell in enumerate(iterator):
        for coords, backward in _layouts(self_map, cell, surviving_only=True):
            image = _image_cell(self_map, coords, genus)
            if image is None:
                continue
            key = (index[image], col)
            coeff = _term_sign(cell, coords, backward) * eps
            total = entries.get(key, 0) + coeff
            if total:
                entries[key] = total
            else:
                entries.pop(key, None)
    return SparseIntMatrix(size, size, entries)


def _exact_inverse(matrix: SparseIntMatrix, n: int) -> SparseIntMatrix:
    """inverse of a unimodular matrix"""
    if matrix.is_identity():
        return matrix
    inverse = sympy.Matrix(matrix.to_dense().tolist()).inv()
    if any(not entry.is_integer for entry in inverse):
        raise ChainMapError(
            "collapse matrix is not invertible over the integers", degree=n
        )
    return SparseIntMatrix.from_dense(
        [[int(inverse[i, j]) for j in range(inverse.cols)] for i in range(inverse.rows)]
    )


def endomorphism_action(
    endo: FreeEndomorphism, n: int, options: Optional[Dict] = None
) -> SparseIntMatrix:
    """Moriyama matrix of a single endomorphism, computed from its map X' -> X

    The pushforward along the realizing map is composed with the inverse of
    the pushforward along the collapse X' -> X, so that the result acts on
    the homology of X itself.
    """
    options = _validate_moriyama_options(options)
    params = SurfaceParams(endo.genus)
    basis = pure_arc_basis(params, n)
    self_map = endo_to_map(endo)
    collapse = collapse_map(self_map)
    if options["check_cycles"]:
        check_subdivided_cycles(self_map, basis)
    mapped = pushforward_matrix(self_map, basis, options["progress"])
    compare = pushforward_matrix(collapse, basis)
    return mapped @ _exact_inverse(compare, n)


@lru_cache(maxsize=None)
def _generator_matrix(name: str, sign: int, genus: int, n: int) -> SparseIntMatrix:
    """cached matrix of a twist generator or its inverse"""
    endo = dehn_twist_generator(name, genus) ** sign
    logger.debug("Mor_%s of %s^%s for genus %s", n, name, sign, genus)
    return endomorphism_action(endo, n)


def _check_guardrail(genus: int, n: int, options: Dict) -> None:
    if n > options["max_points"]:
        estimate = estimate_simplices(wedge_model(genus), n, BASEPOINT_MODE)
        raise GuardrailError(
            f"{n} points exceed the cap of {options['max_points']} "
            f"(about {estimate} product simplices)",
            estimate=estimate,
        )


def mor_action(
    phi: Union[FreeEndomorphism, MappingClass],
    n: int,
    genus: Optional[int] = None,
    options: Optional[Dict] = None,
) -> SparseIntMatrix:
    """Induced map of a based self-map of the wedge on H_n(X^n, Delta + A)

    Args:
        phi (Union[FreeEndomorphism, MappingClass]): endomorphism of the free
            group, or a mapping class whose twist factors are multiplied from
            cached generator matrices
        n (int): number of points
        genus (Optional[int]): genus, read from ``phi`` when omitted
        options (Optional[Dict]): ``check_cycles`` verifies the subdivided
            classes, ``progress`` shows a progress bar and ``max_points``
            caps n. Defaults to None.

    Raises:
        GuardrailError: if n exceeds ``max_points``
        ChainMapError: if a subdivided class is not a cycle
        ValueError: on a negative n or a genus mismatch

    Returns:
        SparseIntMatrix: square matrix on :func:`pure_arc_basis` of size
            rising(2g, n)
    """
    options = _validate_moriyama_options(options)
    if n < 0:
        raise ValueError(f"number of points must be nonnegative, got {n}")
    genus = phi.genus if genus is None else genus
    if genus != phi.genus:
        raise ValueError(f"genus mismatch: {genus} vs {phi.genus}")
    _check_guardrail(genus, n, options)

    flags = {k: options[k] for k in ("check_cycles", "progress")}
    if isinstance(phi, MappingClass) and not phi.is_raw:
        cached = not any(flags.values())
        result = SparseIntMatrix.identity(arc_cell_count(genus, n))
        for name, power in phi.factors:
            sign = 1 if power > 0 else -1
            if cached:
                step = _generator_matrix(name, sign, genus, n)
            else:
                generator = dehn_twist_generator(name, genus) ** sign
                step = endomorphism_action(generator, n, flags)
            for _ in range(abs(power)):
                result = result @ step
        return result

    endo = phi.endomorphism if isinstance(phi, MappingClass) else phi
    return endomorphism_action(endo, n, flags)


def mor_rank(genus: int, n: int) -> int:
    """Rank of H_n(X^n, Delta + A), the number of pure arc cells

    >>> mor_rank(2, 3)
    120
    """
    return len(pure_arc_basis(SurfaceParams(genus), n))


def mor_report(
    phi: Union[FreeEndomorphism, MappingClass], n: int, matrix: SparseIntMatrix
) -> Dict:
    """JSON-ready matrix, row major, with the serialized basis attached"""
    basis = pure_arc_basis(SurfaceParams(phi.genus), n)
    dense = matrix.to_dense()
    return {
        "phi": phi.normal_form() if isinstance(phi, MappingClass) else str(phi),
        "g": phi.genus,
        "n": n,
        "basis": [cell.serialize() for cell in basis],
        "matrix": [[int(x) for x in row] for row in dense],
    }
