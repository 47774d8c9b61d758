"""Sparse matrices with arbitrary precision integer entries"""

from collections import defaultdict
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt
import scipy.sparse as spsp


Entry = Tuple[int, int]


class SparseIntMatrix:
    """Immutable rows x cols integer matrix stored as a dictionary of keys.

    Coefficients are python integers so that no entry ever overflows; zero
    coefficients are never stored.
    """

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Optional[Mapping[Entry, int]] = None,
    ):
        """Create the matrix

        Args:
            rows (int): number of rows
            cols (int): number of columns
            entries (Optional[Mapping[Entry, int]]): nonzero coefficients
                indexed by (row, col). Zero values are discarded.

        Raises:
            ValueError: if the shape is negative or an index is out of bounds
        """
        if rows < 0 or cols < 0:
            raise ValueError(f"invalid shape ({rows}, {cols})")
        self._rows = rows
        self._cols = cols
        self._entries: Dict[Entry, int] = {}
        for (row, col), value in (entries or {}).items():
            if not (0 <= row < rows and 0 <= col < cols):
                raise ValueError(
                    f"index ({row}, {col}) out of bounds for shape ({rows}, {cols})"
                )
            value = int(value)
            if value != 0:
                self._entries[(row, col)] = value

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseIntMatrix":
        """zero matrix of the given shape"""
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> "SparseIntMatrix":
        """identity matrix of the given size"""
        return cls(size, size, {(i, i): 1 for i in range(size)})

    @classmethod
    def from_dense(cls, matrix: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        """Build a sparse matrix from a nested sequence or a 2d array

        Args:
            matrix (Sequence[Sequence[int]]): dense integer matrix

        Returns:
            SparseIntMatrix: the same matrix in sparse form
        """
        array = np.array(matrix, dtype=object)
        if array.ndim != 2:
            raise ValueError(f"expected a 2d matrix, got shape {array.shape}")
        rows, cols = array.shape
        entries = {
            (i, j): int(array[i, j])
            for i in range(rows)
            for j in range(cols)
            if array[i, j] != 0
        }
        return cls(rows, cols, entries)

    @classmethod
    def from_triplets(
        cls, rows: int, cols: int, triplets: Sequence[Tuple[int, int, int]]
    ) -> "SparseIntMatrix":
        """Build a matrix from (row, col, coeff) triplets, summing duplicates"""
        entries: Dict[Entry, int] = defaultdict(int)
        for row, col, coeff in triplets:
            entries[(row, col)] += int(coeff)
        return cls(rows, cols, entries)

    @property
    def shape(self) -> Tuple[int, int]:
        """(rows, cols)"""
        return (self._rows, self._cols)

    @property
    def rows(self) -> int:
        """number of rows"""
        return self._rows

    @property
    def cols(self) -> int:
        """number of columns"""
        return self._cols

    @property
    def entries(self) -> Mapping[Entry, int]:
        """read-only view of the nonzero coefficients"""
        return MappingProxyType(self._entries)

    @property
    def nnz(self) -> int:
        """number of stored coefficients"""
        return len(self._entries)

    def is_zero(self) -> bool:
        """True if no coefficient is stored"""
        return not self._entries

    def is_identity(self) -> bool:
        """True for a square identity matrix"""
        if self._rows != self._cols or len(self._entries) != self._rows:
            return False
        return all(r == c and v == 1 for (r, c), v in self._entries.items())

    def __getitem__(self, index: Entry) -> int:
        return self._entries.get(index, 0)

    def triplets(self) -> List[Tuple[int, int, int]]:
        """sorted (row, col, coeff) triplets"""
        return sorted((r, c, v) for (r, c), v in self._entries.items())

    def column(self, col: int) -> Dict[int, int]:
        """nonzero entries of a column as {row: coeff}"""
        return {r: v for (r, c), v in self._entries.items() if c == col}

    def columns(self) -> Dict[int, Dict[int, int]]:
        """all nonzero columns as {col: {row: coeff}}"""
        out: Dict[int, Dict[int, int]] = defaultdict(dict)
        for (r, c), v in self._entries.items():
            out[c][r] = v
        return dict(out)

    def __iter__(self) -> Iterator[Tuple[Entry, int]]:
        return iter(self._entries.items())

    def transpose(self) -> "SparseIntMatrix":
        """transposed matrix"""
        return SparseIntMatrix(
            self._cols, self._rows, {(c, r): v for (r, c), v in self._entries.items()}
        )

    @property
    def T(self) -> "SparseIntMatrix":  # pylint: disable=invalid-name
        """transposed matrix"""
        return self.transpose()

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self._cols != other.rows:
            raise ValueError(
                f"shape mismatch in product: {self.shape} @ {other.shape}"
            )
        by_row: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
        for (k, j), value in other:
            by_row[k].append((j, value))
        out: Dict[Entry, int] = defaultdict(int)
        for (i, k), left in self._entries.items():
            for j, right in by_row.get(k, ()):
                out[(i, j)] += left * right
        return SparseIntMatrix(self._rows, other.cols, out)

    def __add__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        self._check_same_shape(other)
        out: Dict[Entry, int] = defaultdict(int, self._entries)
        for key, value in other:
            out[key] += value
        return SparseIntMatrix(self._rows, self._cols, out)

    def __neg__(self) -> "SparseIntMatrix":
        return SparseIntMatrix(
            self._rows, self._cols, {k: -v for k, v in self._entries.items()}
        )

    def __sub__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        return self + (-other)

    def __rmul__(self, scale: int) -> "SparseIntMatrix":
        return SparseIntMatrix(
            self._rows, self._cols, {k: scale * v for k, v in self._entries.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"SparseIntMatrix(shape={self.shape}, nnz={self.nnz})"

    def _check_same_shape(self, other: "SparseIntMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def to_dense(self) -> npt.NDArray[np.object_]:
        """Dense copy with python integer entries (object dtype)

        Returns:
            npt.NDArray[np.object_]: dense matrix
        """
        dense = np.zeros(self.shape, dtype=object)
        dense[...] = 0
        for (r, c), v in self._entries.items():
            dense[r, c] = v
        return dense

    def to_scipy(self) -> spsp.coo_matrix:
        """Export to a scipy sparse matrix with 64 bit integer entries

        Raises:
            OverflowError: if an entry does not fit in 64 bits

        Returns:
            spsp.coo_matrix: the matrix
        """
        bound = np.iinfo(np.int64).max
        if any(abs(v) > bound for v in self._entries.values()):
            raise OverflowError("entry does not fit in a 64 bit integer")
        triplets = self.triplets()
        data = np.array([t[2] for t in triplets], dtype=np.int64)
        rows = np.array([t[0] for t in triplets], dtype=np.int64)
        cols = np.array([t[1] for t in triplets], dtype=np.int64)
        return spsp.coo_matrix((data, (rows, cols)), shape=self.shape)

    def restrict(
        self, row_indices: Sequence[int], col_indices: Sequence[int]
    ) -> "SparseIntMatrix":
        """Submatrix on the given rows and columns, re-indexed in the given order"""
        row_pos = {r: i for i, r in enumerate(row_indices)}
        col_pos = {c: j for j, c in enumerate(col_indices)}
        return SparseIntMatrix(
            len(row_indices),
            len(col_indices),
            {
                (row_pos[r], col_pos[c]): v
                for (r, c), v in self._entries.items()
                if r in row_pos and c in col_pos
            },
        )


def dense_identity(size: int) -> npt.NDArray[np.object_]:
    """Object dtype identity matrix holding python integers"""
    eye = np.zeros((size, size), dtype=object)
    eye[...] = 0
    for i in range(size):
        eye[i, i] = 1
    return eye


def dense_zeros(rows: int, cols: int) -> npt.NDArray[np.object_]:
    """Object dtype zero matrix holding python integers"""
    zeros = np.zeros((rows, cols), dtype=object)
    zeros[...] = 0
    return zeros
