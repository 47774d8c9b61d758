"""Smith normal form of integer matrices with unimodular transforms"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from numpy.testing import assert_
import numpy.typing as npt

from .sparse_matrix import SparseIntMatrix, dense_identity

object_array = npt.NDArray[np.object_]


@dataclass
class SnfResult:
    """Smith normal form ``left @ matrix @ right == diag(diagonal)``.

    Attributes:
        diagonal: nonzero invariant factors d_1 | d_2 | ... (all positive)
        left: unimodular row transform
        left_inverse: inverse of ``left``
        right: unimodular column transform
        right_inverse: inverse of ``right``
    """

    diagonal: List[int]
    left: object_array
    left_inverse: object_array
    right: object_array
    right_inverse: object_array

    @property
    def rank(self) -> int:
        """number of nonzero invariant factors"""
        return len(self.diagonal)

    def diagonal_matrix(self) -> SparseIntMatrix:
        """the normal form itself, with the shape of the input"""
        rows, cols = self.left.shape[0], self.right.shape[0]
        return SparseIntMatrix(
            rows, cols, {(i, i): d for i, d in enumerate(self.diagonal)}
        )


def exgcd(a: int, b: int) -> object_array:
    """Extended GCD as a row operation.

    Args:
        a: an integer.
        b: an integer.

    Returns:
        A 2x2 integer matrix M of determinant 1 so that M @ [a, b] = [gcd(a, b), 0].
        If a divides b, M[0, 1] is guaranteed to be 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign

    # Euclid on the column [a, b], augmented by the identity to record the
    # row operations.
    work = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while work[1, 0] != 0:
        quotient = work[0, 0] // work[1, 0]
        work[0] = work[0] - quotient * work[1]
        work = work[::-1].copy()

    gcd = work[0, 0]
    transform = work[:, 1:].copy()
    transform[:, 0] *= a_sign
    transform[:, 1] *= b_sign

    if gcd != 0:
        transform[1, 0] = -b_sign * b // gcd
        transform[1, 1] = a_sign * a // gcd
    else:
        transform = dense_identity(2)
    return transform


def _inverse_2x2(matrix: object_array) -> object_array:
    """inverse of a 2x2 integer matrix of determinant 1"""
    assert_(
        matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0] == 1,
        "2x2 transform is not unimodular",
    )
    return np.array(
        [[matrix[1, 1], -matrix[0, 1]], [-matrix[1, 0], matrix[0, 0]]], dtype=object
    )


class _SmithElimination:
    """In-place elimination keeping ``left @ input @ right == work``."""

    def __init__(self, matrix: object_array):
        self.work = matrix.copy()
        rows, cols = self.work.shape
        self.left = dense_identity(rows)
        self.left_inverse = dense_identity(rows)
        self.right = dense_identity(cols)
        self.right_inverse = dense_identity(cols)

    def rows_op(self, i: int, j: int, transform: object_array) -> None:
        """replace rows (i, j) by transform @ rows (i, j)"""
        idx = [i, j]
        self.work[idx] = transform @ self.work[idx]
        self.left[idx] = transform @ self.left[idx]
        self.left_inverse[:, idx] = self.left_inverse[:, idx] @ _inverse_2x2(transform)

    def cols_op(self, i: int, j: int, transform: object_array) -> None:
        """replace columns (i, j) by columns (i, j) @ transform"""
        idx = [i, j]
        self.work[:, idx] = self.work[:, idx] @ transform
        self.right[:, idx] = self.right[:, idx] @ transform
        self.right_inverse[idx] = _inverse_2x2(transform) @ self.right_inverse[idx]

    def swap_rows(self, i: int, j: int) -> None:
        """exchange two rows"""
        if i == j:
            return
        for array in (self.work, self.left):
            array[[i, j]] = array[[j, i]]
        self.left_inverse[:, [i, j]] = self.left_inverse[:, [j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        """exchange two columns"""
        if i == j:
            return
        for array in (self.work, self.right):
            array[:, [i, j]] = array[:, [j, i]]
        self.right_inverse[[i, j]] = self.right_inverse[[j, i]]

    def negate_row(self, i: int) -> None:
        """multiply a row by -1"""
        self.work[i] = -self.work[i]
        self.left[i] = -self.left[i]
        self.left_inverse[:, i] = -self.left_inverse[:, i]

    def choose_pivot(self, t: int) -> Optional[Tuple[int, int]]:
        """Nonzero entry of the trailing block with least absolute value.

        Ties are broken by the number of nonzeros in the pivot row and
        column, then by position.
        """
        block = self.work[t:, t:]
        mask = (block != 0).astype(bool)
        if not mask.any():
            return None
        row_counts = mask.sum(axis=1)
        col_counts = mask.sum(axis=0)
        best = None
        for i, j in np.argwhere(mask):
            key = (abs(block[i, j]), row_counts[i] + col_counts[j], i, j)
            if best is None or key < best:
                best = key
        return (t + int(best[2]), t + int(best[3]))

    def clear_column(self, t: int) -> bool:
        """zero the column below the pivot; False if already clear"""
        rows = [i for i in range(t + 1, self.work.shape[0]) if self.work[i, t] != 0]
        for i in rows:
            self.rows_op(t, i, exgcd(self.work[t, t], self.work[i, t]))
        return bool(rows)

    def clear_row(self, t: int) -> bool:
        """zero the row right of the pivot; False if already clear"""
        cols = [j for j in range(t + 1, self.work.shape[1]) if self.work[t, j] != 0]
        for j in cols:
            self.cols_op(t, j, exgcd(self.work[t, t], self.work[t, j]).T.copy())
        return bool(cols)

    def non_divisible_row(self, t: int) -> Optional[int]:
        """row of the trailing block holding an entry not divisible by the pivot"""
        pivot = self.work[t, t]
        block = self.work[t + 1 :, t + 1 :]
        if block.size == 0:
            return None
        bad = np.argwhere(((block % pivot) != 0).astype(bool))
        if len(bad) == 0:
            return None
        return t + 1 + int(bad[0][0])


def smith_normal_form(matrix: SparseIntMatrix, verify: bool = False) -> SnfResult:
    """Compute the Smith normal form of an integer matrix

    Args:
        matrix (SparseIntMatrix): input matrix
        verify (bool): check ``left @ matrix @ right`` against the diagonal
            and the transform inverses (costly on large inputs)

    Returns:
        SnfResult: invariant factors and unimodular transforms
    """
    elimination = _SmithElimination(matrix.to_dense())
    rows, cols = matrix.shape
    diagonal: List[int] = []

    for t in range(min(rows, cols)):
        pivot = elimination.choose_pivot(t)
        if pivot is None:
            break
        elimination.swap_rows(t, pivot[0])
        elimination.swap_cols(t, pivot[1])

        while True:
            elimination.clear_column(t)
            while elimination.clear_row(t) and elimination.clear_column(t):
                pass
            row = elimination.non_divisible_row(t)
            if row is None:
                break
            elimination.rows_op(
                t, row, np.array([[1, 1], [0, 1]], dtype=object)
            )

        if elimination.work[t, t] < 0:
            elimination.negate_row(t)
        diagonal.append(int(elimination.work[t, t]))

    result = SnfResult(
        diagonal=diagonal,
        left=elimination.left,
        left_inverse=elimination.left_inverse,
        right=elimination.right,
        right_inverse=elimination.right_inverse,
    )
    if verify:
        dense = matrix.to_dense()
        assert_(
            SparseIntMatrix.from_dense(result.left @ dense @ result.right)
            == result.diagonal_matrix(),
            "Smith normal form transforms do not reproduce the diagonal",
        )
        assert_(
            (result.left @ result.left_inverse == dense_identity(rows)).all(),
            "left transform inverse mismatch",
        )
        assert_(
            (result.right @ result.right_inverse == dense_identity(cols)).all(),
            "right transform inverse mismatch",
        )
    return result
