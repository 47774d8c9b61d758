"""Mapping class group action on the cellular complex

A cell splits into a column factor on the labels Q of its column points and
an arc factor on the labels R of its arc points. The action is the identity
on the column factor and the Moriyama action on the arc factor, the latter
computed on the standard labels 1..|R| and carried back along the order
preserving relabeling of R.
"""

import logging
from typing import Dict, Optional, Union

from tqdm import tqdm

from ..core_model.cells import factorize_cell, product_cells
from ..core_model.surface import SurfaceParams
from ..fn_complex.builder import FNComplex, build_complex, cochain_dual
from ..free_group.endomorphisms import FreeEndomorphism, MappingClass
from ..integral_linear.homology import (
    HomologyGroup,
    HomologySummary,
    homology,
    induced_on_homology,
    reindex_poincare_lefschetz,
)
from ..integral_linear.sparse_matrix import SparseIntMatrix
from ..simplicial_pairs.moriyama import mor_action, pure_arc_basis
from .chain_map import ChainMap

logger = logging.getLogger(__name__)

Phi = Union[FreeEndomorphism, MappingClass]

default_action_options = {
    "check_chain_map": True,
    "progress": False,
    "max_points": 3,
}


def _validate_action_options(options: Optional[Dict]) -> Dict:
    """validate the options

    Args:
        options (Optional[Dict]): options
    """
    valid_keys = default_action_options.keys()
    if options is None:
        return dict(default_action_options)
    for k in options:
        if k not in valid_keys:
            raise ValueError(
                f"Option {k} not recognized, valid keys are {list(valid_keys)}"
            )
    return {**default_action_options, **options}


def resolve_complex(
    params: Union[SurfaceParams, int], n: int, complex_: Optional[FNComplex]
) -> FNComplex:
    """the given complex after a shape check, or a freshly built one"""
    if complex_ is None:
        return build_complex(params, n)
    if complex_.n != n or complex_.genus != params.genus:
        raise ValueError(
            f"complex is for g={complex_.genus}, n={complex_.n}; "
            f"expected g={params.genus}, n={n}"
        )
    return complex_


def full_action(
    phi: Phi,
    params: Union[SurfaceParams, int],
    n: int,
    complex_: Optional[FNComplex] = None,
    options: Optional[Dict] = None,
) -> ChainMap:
    """Chain map of a mapping class on the cellular complex

    Args:
        phi (Phi): free group endomorphism or mapping class of genus g
        params (Union[SurfaceParams, int]): surface model or its genus
        n (int): number of points
        complex_ (Optional[FNComplex]): prebuilt complex, built if omitted
        options (Optional[Dict]): ``check_chain_map`` certifies commutation
            with the differential, ``progress`` shows a progress bar and
            ``max_points`` caps the Moriyama computations. Defaults to None.

    Raises:
        ChainMapError: if the assembled map does not commute with the
            differential
        GuardrailError: if n exceeds ``max_points``
        ValueError: if the genus of ``phi`` and of the surface differ

    Returns:
        ChainMap: the action, certified unless ``check_chain_map`` is off
    """
    options = _validate_action_options(options)
    if isinstance(params, int):
        params = SurfaceParams(params)
    if phi.genus != params.genus:
        raise ValueError(f"genus mismatch: {phi.genus} vs {params.genus}")
    complex_ = resolve_complex(params, n, complex_)
    basis = complex_.basis

    mor_options = {"max_points": options["max_points"]}
    blocks: Dict[int, SparseIntMatrix] = {}
    arc_bases = {}
    arc_index = {}
    for k in range(n + 1):
        arc_bases[k] = pure_arc_basis(params, k)
        arc_index[k] = {cell: i for i, cell in enumerate(arc_bases[k])}
        if arc_bases[k]:
            blocks[k] = mor_action(phi, k, params.genus, mor_options)

    matrices = {}
    for degree in basis.degrees:
        cells = basis.cells_of_degree(degree)
        iterator = cells
        if options["progress"]:
            iterator = tqdm(cells, desc=f"action degree {degree}")
        entries: Dict = {}
        for col, cell in enumerate(iterator):
            e_part, x_part = factorize_cell(cell)
            standard, back = x_part.standardize()
            k = standard.n
            block = blocks[k]
            for row, value in block.column(arc_index[k][standard]).items():
                image = product_cells(e_part, arc_bases[k][row].relabel(back))
                key = (basis.index(degree, image), col)
                entries[key] = entries.get(key, 0) + value
        size = basis.dimension(degree)
        matrices[degree] = SparseIntMatrix(size, size, entries)
        logger.debug("action degree %s : %s nonzeros", degree, matrices[degree].nnz)

    chain_map = ChainMap(complex_, matrices, phi)
    if options["check_chain_map"]:
        chain_map.certify()
    return chain_map


def cohomology_groups(
    complex_: FNComplex, summary: Optional[HomologySummary] = None
) -> Dict[int, HomologyGroup]:
    """{i: group carrying H^i} of the open configuration space"""
    if summary is None:
        summary = homology(complex_)
    return reindex_poincare_lefschetz(summary, complex_.n)


def action_on_cohomology(
    phi: Phi,
    params: Union[SurfaceParams, int],
    n: int,
    complex_: Optional[FNComplex] = None,
    summary: Optional[HomologySummary] = None,
    options: Optional[Dict] = None,
) -> Dict[int, SparseIntMatrix]:
    """Matrices of the action on H^i of the open configuration space

    H^i is read as the homology of the compactified complex in degree 2n - i,
    on the generators chosen by :func:`homology`.

    Args:
        phi (Phi): free group endomorphism or mapping class
        params (Union[SurfaceParams, int]): surface model or its genus
        n (int): number of points
        complex_ (Optional[FNComplex]): prebuilt complex
        summary (Optional[HomologySummary]): its homology, computed if omitted
        options (Optional[Dict]): options of :func:`full_action`

    Returns:
        Dict[int, SparseIntMatrix]: {i: matrix on the generators of H^i}
    """
    if isinstance(params, int):
        params = SurfaceParams(params)
    complex_ = resolve_complex(params, n, complex_)
    if summary is None:
        summary = homology(complex_)
    chain_map = full_action(phi, params, n, complex_, options)
    induced = induced_on_homology(chain_map.matrices, complex_, summary)
    return {2 * n - degree: induced[degree] for degree in sorted(induced)}


def homology_groups(
    complex_: FNComplex, dual_summary: Optional[HomologySummary] = None
) -> Dict[int, HomologyGroup]:
    """{j: group carrying H_j} of the open configuration space

    H_j is read from the dual complex in degree j - 2n.
    """
    if dual_summary is None:
        dual_summary = homology(cochain_dual(complex_))
    n = complex_.n
    return {2 * n + e: dual_summary[e] for e in sorted(dual_summary.degrees)}


def action_on_homology(
    phi: Phi,
    params: Union[SurfaceParams, int],
    n: int,
    complex_: Optional[FNComplex] = None,
    dual_summary: Optional[HomologySummary] = None,
    options: Optional[Dict] = None,
) -> Dict[int, SparseIntMatrix]:
    """Matrices of the action on H_j of the open configuration space

    The transposed chain map acts on the dual complex, whose homology in
    degree j - 2n is H_j. Generators are those of :func:`homology_groups`.

    Args:
        phi (Phi): free group endomorphism or mapping class
        params (Union[SurfaceParams, int]): surface model or its genus
        n (int): number of points
        complex_ (Optional[FNComplex]): prebuilt complex
        dual_summary (Optional[HomologySummary]): homology of
            ``cochain_dual(complex_)``, computed if omitted
        options (Optional[Dict]): options of :func:`full_action`

    Returns:
        Dict[int, SparseIntMatrix]: {j: matrix on the generators of H_j}
    """
    if isinstance(params, int):
        params = SurfaceParams(params)
    complex_ = resolve_complex(params, n, complex_)
    dual = cochain_dual(complex_)
    if dual_summary is None:
        dual_summary = homology(dual)
    chain_map = full_action(phi, params, n, complex_, options)
    transposed = {-d: matrix.transpose() for d, matrix in chain_map.matrices.items()}
    induced = induced_on_homology(transposed, dual, dual_summary)
    logger.debug("action on homology in degrees %s", sorted(induced))
    return {2 * n + e: induced[e] for e in sorted(induced)}
