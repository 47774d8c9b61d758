"""Cellular differential of the compactified configuration space

Only two kinds of codimension one faces of a cell survive in the one point
compactification; every other face collides two points, pushes a point onto
the boundary circle or onto p_0, and is sent to the point at infinity.

* column merge: two adjacent columns meet. The merged column lists the
  points of both columns in one of their shuffles (one face per shuffle).
* absorption: the last column reaches the right edge. Its points, bottom to
  top, fall into the 4g intervals I_1, J_1, I'_1, J'_1, I_2, ... in
  consecutive blocks, and each block is glued onto its arc (reversed for
  the I' and J' families) and interleaved with the points already there.

A cell is oriented by its coordinate list: column positions x_1 < ... < x_l,
then the heights of every column bottom to top, then the arc parameters of
U_1, V_1, ..., U_g, V_g in increasing order. Near a face, the coordinates of
the face together with the outward normal coordinate are a signed
permutation of the coordinates of the cell; the incidence number is the
determinant of that signed permutation.
"""

import itertools
from typing import Dict, Iterator, List, Sequence, Tuple

from ..core_model.cells import CellTuple, Labels
from ..core_model.surface import SurfaceParams
from ..integral_linear.chain_complex import IntegerChain


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of 0..len(perm)-1

    >>> [permutation_sign(p) for p in ([0, 1, 2], [1, 0, 2], [1, 2, 0])]
    [1, -1, 1]
    """
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = perm[pos]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def shuffles(*sequences: Sequence[int]) -> Iterator[Labels]:
    """All interleavings of sequences of distinct labels preserving their orders

    >>> sorted(shuffles((1,), (2, 3)))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1)]
    """
    pending = [tuple(s) for s in sequences if s]
    if not pending:
        yield ()
        return
    for idx, seq in enumerate(pending):
        rest = pending[:idx] + [seq[1:]] + pending[idx + 1 :]
        for tail in shuffles(*rest):
            yield (seq[0],) + tail


def _point_coordinates(cell: CellTuple) -> Dict[int, int]:
    """coordinate index of every point (height or arc parameter)"""
    return {
        label: cell.length + i for i, label in enumerate(cell.all_labels())
    }


def _face_coefficient(source: List[int], flips: int) -> int:
    return permutation_sign(source) * flips


def merge_boundary(cell: CellTuple) -> IntegerChain:
    """Column merge part of the differential

    Args:
        cell (CellTuple): the cell

    Returns:
        IntegerChain: signed sum of the faces where two adjacent columns meet
    """
    terms: Dict[CellTuple, int] = {}
    length = cell.length
    coords = _point_coordinates(cell)
    for i in range(length - 1):
        # the normal coordinate x_i - x_{i+1} reduces to x_i once the merged
        # column position is read from x_{i+1}
        positions = [i] + [j if j < i else j + 1 for j in range(length - 1)]
        for merged in shuffles(cell.columns[i], cell.columns[i + 1]):
            face = CellTuple(
                cell.columns[:i] + (merged,) + cell.columns[i + 2 :],
                cell.arcs_u,
                cell.arcs_v,
            )
            source = positions + [coords[x] for x in face.all_labels()]
            coeff = _face_coefficient(source, 1)
            terms[face] = terms.get(face, 0) + coeff
    return IntegerChain(cell.degree - 1, terms)


def _block_splits(points: Labels, blocks: int) -> Iterator[Tuple[Labels, ...]]:
    """cut a sequence into ``blocks`` consecutive, possibly empty pieces"""
    size = len(points)
    for bars in itertools.combinations_with_replacement(range(size + 1), blocks - 1):
        bounds = (0,) + bars + (size,)
        yield tuple(points[bounds[b] : bounds[b + 1]] for b in range(blocks))


def absorption_boundary(cell: CellTuple, params: SurfaceParams) -> IntegerChain:
    """Part of the differential where the last column reaches the right edge

    Args:
        cell (CellTuple): the cell
        params (SurfaceParams): surface model; genus 0 has no absorption faces

    Returns:
        IntegerChain: signed sum of the absorption faces
    """
    terms: Dict[CellTuple, int] = {}
    length = cell.length
    if params.genus == 0 or length == 0:
        return IntegerChain(cell.degree - 1, terms)

    coords = _point_coordinates(cell)
    intervals = params.boundary_subdivision
    last = cell.columns[-1]
    positions = [length - 1] + list(range(length - 1))
    old_arcs = cell.arcs

    for blocks in _block_splits(last, len(intervals)):
        incoming: Dict[int, List[Labels]] = {k: [] for k in range(params.arc_count)}
        reversed_labels = set()
        for interval, block in zip(intervals, blocks):
            if interval.orientation > 0:
                incoming[interval.arc].append(block)
            else:
                incoming[interval.arc].append(tuple(reversed(block)))
                reversed_labels.update(block)
        flips = (-1) ** len(reversed_labels)

        per_arc = [
            list(shuffles(old_arcs[k], *incoming[k])) for k in range(params.arc_count)
        ]
        for new_arcs in itertools.product(*per_arc):
            face = CellTuple.from_arcs(new_arcs, cell.columns[:-1])
            source = positions + [coords[x] for x in face.all_labels()]
            coeff = _face_coefficient(source, flips)
            terms[face] = terms.get(face, 0) + coeff
    return IntegerChain(cell.degree - 1, terms)


def boundary_cell(cell: CellTuple, params: SurfaceParams) -> IntegerChain:
    """Cellular boundary of a cell in the compactified configuration space

    Args:
        cell (CellTuple): the cell
        params (SurfaceParams): surface model of the same genus

    Raises:
        ValueError: if the genus of the cell and of the model differ

    Returns:
        IntegerChain: chain of degree ``cell.degree - 1``

    >>> disc = SurfaceParams(0)
    >>> boundary_cell(CellTuple(((1,), (2,))), disc).terms == {
    ...     CellTuple(((1, 2),)): 1, CellTuple(((2, 1),)): -1}
    True
    """
    if cell.genus != params.genus:
        raise ValueError(
            f"cell of genus {cell.genus} on a surface of genus {params.genus}"
        )
    return merge_boundary(cell) + absorption_boundary(cell, params)
