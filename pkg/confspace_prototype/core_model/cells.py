"""Cells of the configuration space of the rectangle model

A cell is a tuple t = (l, P, U, V): l vertical columns in the open rectangle,
the points of column i listed bottom to top in P_i, and the points lying on
the arcs U_j and V_j listed in increasing arc parameter. Its dimension is the
number of points plus l.
"""

import itertools
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..integral_linear.chain_complex import GradedBasis
from .surface import SurfaceParams

Labels = Tuple[int, ...]


def _format_orders(orders: Sequence[Labels]) -> str:
    return ",".join("(" + ",".join(str(x) for x in order) + ")" for order in orders)


_ORDER = re.compile(r"\(([0-9,\s]*)\)")


def _parse_orders(text: str) -> Tuple[Labels, ...]:
    text = text.strip()
    if not text:
        return ()
    orders = _ORDER.findall(text)
    if _ORDER.sub("", text).replace(",", "").strip():
        raise ValueError(f"malformed order list: {text!r}")
    return tuple(
        tuple(int(x) for x in body.split(",") if x.strip()) for body in orders
    )


@dataclass(frozen=True)
class CellTuple:
    """Combinatorial cell t = (l, P, U, V).

    Attributes:
        columns: the columns P_1..P_l, each a nonempty bottom-to-top order
        arcs_u: the orders U_1..U_g on the arcs U_i (possibly empty)
        arcs_v: the orders V_1..V_g on the arcs V_i (possibly empty)
    """

    columns: Tuple[Labels, ...] = ()
    arcs_u: Tuple[Labels, ...] = ()
    arcs_v: Tuple[Labels, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(p) for p in self.columns))
        object.__setattr__(self, "arcs_u", tuple(tuple(u) for u in self.arcs_u))
        object.__setattr__(self, "arcs_v", tuple(tuple(v) for v in self.arcs_v))
        if len(self.arcs_u) != len(self.arcs_v):
            raise ValueError(
                f"{len(self.arcs_u)} U arcs but {len(self.arcs_v)} V arcs"
            )
        if any(len(column) == 0 for column in self.columns):
            raise ValueError("columns must be nonempty")
        labels = self.all_labels()
        if len(set(labels)) != len(labels):
            raise ValueError(f"repeated labels in {labels}")
        if any(label < 1 for label in labels):
            raise ValueError(f"labels must be positive, got {labels}")

    @classmethod
    def empty(cls, genus: int) -> "CellTuple":
        """the cell of the empty configuration"""
        return cls((), ((),) * genus, ((),) * genus)

    @classmethod
    def from_arcs(cls, arcs: Sequence[Labels], columns: Sequence[Labels] = ()):
        """Build from interleaved arc orders U_1, V_1, U_2, V_2, ..."""
        arcs = tuple(tuple(a) for a in arcs)
        if len(arcs) % 2:
            raise ValueError("an even number of arcs is expected")
        return cls(tuple(columns), arcs[0::2], arcs[1::2])

    @property
    def genus(self) -> int:
        """genus of the ambient surface"""
        return len(self.arcs_u)

    @property
    def length(self) -> int:
        """number of columns l"""
        return len(self.columns)

    @property
    def arcs(self) -> Tuple[Labels, ...]:
        """arc orders interleaved as U_1, V_1, ..., U_g, V_g"""
        out: List[Labels] = []
        for u, v in zip(self.arcs_u, self.arcs_v):
            out.extend((u, v))
        return tuple(out)

    @property
    def weight(self) -> int:
        """number of points"""
        return len(self.all_labels())

    @property
    def n(self) -> int:
        """number of points"""
        return self.weight

    @property
    def degree(self) -> int:
        """dimension of the cell, weight + length"""
        return self.weight + self.length

    def all_labels(self) -> Labels:
        """labels in coordinate order: columns, then arcs"""
        out: List[int] = []
        for column in self.columns:
            out.extend(column)
        for arc in self.arcs:
            out.extend(arc)
        return tuple(out)

    @property
    def labels(self) -> frozenset:
        """label set of the configuration"""
        return frozenset(self.all_labels())

    @property
    def column_labels(self) -> frozenset:
        """labels of points in columns"""
        return frozenset(x for column in self.columns for x in column)

    @property
    def arc_labels(self) -> frozenset:
        """labels of points on arcs"""
        return frozenset(x for arc in self.arcs for x in arc)

    def is_pure_column(self) -> bool:
        """True if no point lies on an arc"""
        return not self.arc_labels

    def is_pure_arc(self) -> bool:
        """True if there is no column"""
        return self.length == 0

    def is_standard(self) -> bool:
        """True if the labels are exactly 1..n"""
        return self.labels == frozenset(range(1, self.weight + 1))

    def relabel(self, mapping: Mapping[int, int]) -> "CellTuple":
        """Rename every label through ``mapping``"""
        return CellTuple(
            tuple(tuple(mapping[x] for x in p) for p in self.columns),
            tuple(tuple(mapping[x] for x in u) for u in self.arcs_u),
            tuple(tuple(mapping[x] for x in v) for v in self.arcs_v),
        )

    def standardize(self) -> Tuple["CellTuple", Dict[int, int]]:
        """Order preserving relabeling onto 1..k

        Returns:
            Tuple[CellTuple, Dict[int, int]]: the relabeled cell and the map
                from new labels back to the original ones
        """
        ordered = sorted(self.labels)
        forward = {old: new for new, old in enumerate(ordered, start=1)}
        backward = {new: old for old, new in forward.items()}
        return self.relabel(forward), backward

    def sort_key(self) -> Tuple:
        """canonical order: degree, length, columns, then arcs"""
        return (self.degree, self.length, self.columns, self.arcs)

    def __lt__(self, other: "CellTuple") -> bool:
        return self.sort_key() < other.sort_key()

    def serialize(self) -> str:
        """``l=<l>;P=<(..),(..)>;U=<(..) x g>;V=<(..) x g>``

        >>> CellTuple(((1, 3),), ((), ()), ((), (2,))).serialize()
        'l=1;P=(1,3);U=(),();V=(),(2)'
        """
        return (
            f"l={self.length};P={_format_orders(self.columns)};"
            f"U={_format_orders(self.arcs_u)};V={_format_orders(self.arcs_v)}"
        )

    @classmethod
    def parse(cls, text: str) -> "CellTuple":
        """Inverse of :meth:`serialize`

        Raises:
            ValueError: on malformed input or inconsistent length
        """
        fields = {}
        for part in text.strip().split(";"):
            key, sep, value = part.partition("=")
            if not sep:
                raise ValueError(f"malformed cell field {part!r} in {text!r}")
            fields[key.strip()] = value
        if set(fields) != {"l", "P", "U", "V"}:
            raise ValueError(f"expected fields l, P, U, V in {text!r}")
        cell = cls(
            _parse_orders(fields["P"]),
            _parse_orders(fields["U"]),
            _parse_orders(fields["V"]),
        )
        if cell.length != int(fields["l"]):
            raise ValueError(f"length field disagrees with columns in {text!r}")
        return cell

    def __str__(self) -> str:
        return self.serialize()


def cell_degree(cell: CellTuple) -> int:
    """Dimension of a cell, number of points plus number of columns

    >>> cell_degree(CellTuple(((1,),), ((),), ((),)))
    2
    """
    return cell.degree


def factorize_cell(cell: CellTuple) -> Tuple[CellTuple, CellTuple]:
    """Split a cell into its column factor and its arc factor

    The column factor lives on the labels Q of the column points and keeps the
    columns; the arc factor lives on the labels R of the arc points and keeps
    the arc orders.

    Args:
        cell (CellTuple): the cell

    Returns:
        Tuple[CellTuple, CellTuple]: (column factor, arc factor)
    """
    genus = cell.genus
    e_part = CellTuple(cell.columns, ((),) * genus, ((),) * genus)
    x_part = CellTuple((), cell.arcs_u, cell.arcs_v)
    return e_part, x_part


def product_cells(e_part: CellTuple, x_part: CellTuple) -> CellTuple:
    """Merge a pure column cell and a pure arc cell on disjoint labels

    Args:
        e_part (CellTuple): pure column cell on labels Q
        x_part (CellTuple): pure arc cell on labels R

    Raises:
        ValueError: if the factors have the wrong type, genus or overlapping labels

    Returns:
        CellTuple: the cell with the columns of ``e_part`` and the arcs of ``x_part``
    """
    if not e_part.is_pure_column():
        raise ValueError(f"{e_part} is not a pure column cell")
    if not x_part.is_pure_arc():
        raise ValueError(f"{x_part} is not a pure arc cell")
    if e_part.genus != x_part.genus:
        raise ValueError(f"genus mismatch: {e_part.genus} vs {x_part.genus}")
    if e_part.labels & x_part.labels:
        raise ValueError("labels not disjoint")
    return CellTuple(e_part.columns, x_part.arcs_u, x_part.arcs_v)


def column_orders(labels: Sequence[int]) -> Iterator[Tuple[Labels, ...]]:
    """All ways to arrange labels into an ordered list of nonempty columns"""
    labels = tuple(labels)
    if not labels:
        yield ()
        return
    for perm in itertools.permutations(labels):
        for cuts in itertools.product((False, True), repeat=len(perm) - 1):
            columns, current = [], [perm[0]]
            for label, cut in zip(perm[1:], cuts):
                if cut:
                    columns.append(tuple(current))
                    current = [label]
                else:
                    current.append(label)
            columns.append(tuple(current))
            yield tuple(columns)


def arc_orders(labels: Sequence[int], arc_count: int) -> Iterator[Tuple[Labels, ...]]:
    """All ways to distribute labels into ``arc_count`` ordered, possibly empty lists"""
    labels = tuple(labels)
    if not labels:
        yield ((),) * arc_count
        return
    if arc_count == 0:
        return
    size = len(labels)
    for perm in itertools.permutations(labels):
        for bars in itertools.combinations_with_replacement(
            range(size + 1), arc_count - 1
        ):
            bounds = (0,) + bars + (size,)
            yield tuple(perm[bounds[a] : bounds[a + 1]] for a in range(arc_count))


class CellBasis(GradedBasis):
    """All cells on labels 1..n for a fixed genus, in canonical order."""

    def __init__(self, params: SurfaceParams, n: int, cells: Sequence[CellTuple]):
        self.params = params
        self.n = n
        by_degree: Dict[int, List[CellTuple]] = {d: [] for d in range(n, 2 * n + 1)}
        for cell in sorted(cells, key=CellTuple.sort_key):
            by_degree.setdefault(cell.degree, []).append(cell)
        super().__init__(by_degree)

    @property
    def genus(self) -> int:
        """genus of the surface"""
        return self.params.genus

    @property
    def cells(self) -> List[CellTuple]:
        """every cell in canonical order"""
        return list(self)

    def cells_of_degree(self, degree: int) -> Tuple[CellTuple, ...]:
        """cells of one degree"""
        return self.elements(degree)  # type: ignore[return-value]

    def pure_arc_cells(self) -> Tuple[CellTuple, ...]:
        """cells without columns, all of degree n"""
        return tuple(c for c in self.cells_of_degree(self.n) if c.is_pure_arc())


def enumerate_cells(
    params: SurfaceParams, n: int, labels: Optional[Sequence[int]] = None
) -> CellBasis:
    """Enumerate every cell of the configuration space of n labelled points

    Args:
        params (SurfaceParams): surface model
        n (int): number of points
        labels (Optional[Sequence[int]]): labels to use, 1..n by default

    Raises:
        ValueError: if n is negative

    Returns:
        CellBasis: the cells in canonical order, grouped by degree
    """
    if n < 0:
        raise ValueError(f"number of points must be nonnegative, got {n}")
    labels = tuple(range(1, n + 1)) if labels is None else tuple(sorted(labels))
    cells = []
    for k in range(n + 1):
        for on_arcs in itertools.combinations(labels, k):
            in_columns = [x for x in labels if x not in on_arcs]
            for columns in column_orders(in_columns):
                for arcs in arc_orders(on_arcs, params.arc_count):
                    cells.append(CellTuple(columns, arcs[0::2], arcs[1::2]))
    return CellBasis(params, n, cells)
