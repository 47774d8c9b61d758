""" Test exact integral linear algebra """

import unittest

import numpy as np
from numpy.testing import assert_array_equal
import pytest

from confspace_prototype.exceptions import ChainMapError
from confspace_prototype.integral_linear import (
    GradedBasis,
    IntegerChain,
    IntegerChainComplex,
    SparseIntMatrix,
    check_chain_map,
    homology,
    induced_on_homology,
    is_identity_on_homology,
    reindex_poincare_lefschetz,
    smith_normal_form,
)


@pytest.mark.parametrize(
    "matrix, diagonal",
    [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
        ([[0, 0], [0, 0]], []),
        ([[6, 4], [4, 6], [2, 2]], [2, 2]),
        ([[1, 2, 3]], [1]),
    ],
)
def test_smith_normal_form(matrix, diagonal):
    """Test invariant factors and the unimodular transforms"""
    sparse = SparseIntMatrix.from_dense(matrix)
    result = smith_normal_form(sparse, verify=True)
    assert result.diagonal == diagonal
    assert_array_equal(
        (result.left @ sparse.to_dense() @ result.right).astype(np.int64),
        result.diagonal_matrix().to_dense().astype(np.int64),
    )


def test_smith_normal_form_big_entries():
    """Test that entries beyond 64 bits stay exact"""
    big = 2**70
    result = smith_normal_form(SparseIntMatrix.from_dense([[big, 0], [0, 3 * big]]))
    assert result.diagonal == [big, 3 * big]


class TestSparseIntMatrix(unittest.TestCase):
    """Test the dictionary of keys matrix"""

    def setUp(self):
        super().setUp()
        self.matrix = SparseIntMatrix.from_dense([[1, 0, 2], [0, -1, 0]])

    def test_shape_and_entries(self):
        """Test basic accessors"""
        self.assertEqual(self.matrix.shape, (2, 3))
        self.assertEqual(self.matrix.nnz, 3)
        self.assertEqual(self.matrix[0, 2], 2)
        self.assertEqual(self.matrix[1, 2], 0)
        self.assertEqual(self.matrix.triplets(), [(0, 0, 1), (0, 2, 2), (1, 1, -1)])
        self.assertEqual(self.matrix.column(2), {0: 2})

    def test_algebra(self):
        """Test products, sums and transposes"""
        gram = self.matrix @ self.matrix.T
        self.assertEqual(gram, SparseIntMatrix.from_dense([[5, 0], [0, 1]]))
        self.assertTrue((self.matrix - self.matrix).is_zero())
        self.assertEqual(2 * self.matrix, self.matrix + self.matrix)
        self.assertTrue(SparseIntMatrix.identity(3).is_identity())
        self.assertFalse(self.matrix.is_identity())

    def test_triplets_sum(self):
        """Test that duplicate triplets add up and zeros are dropped"""
        matrix = SparseIntMatrix.from_triplets(2, 2, [(0, 0, 1), (0, 0, 2), (1, 1, 0)])
        self.assertEqual(matrix.entries, {(0, 0): 3})

    def test_scipy_export(self):
        """Test the export to scipy"""
        exported = self.matrix.to_scipy()
        assert_array_equal(exported.toarray(), [[1, 0, 2], [0, -1, 0]])
        with self.assertRaises(OverflowError):
            SparseIntMatrix(1, 1, {(0, 0): 2**80}).to_scipy()

    def test_raises(self):
        """Test errors raised on bad shapes"""
        with self.assertRaisesRegex(ValueError, "out of bounds"):
            SparseIntMatrix(1, 1, {(1, 0): 1})
        with self.assertRaisesRegex(ValueError, "shape mismatch"):
            _ = self.matrix @ self.matrix
        with self.assertRaisesRegex(ValueError, "shape mismatch"):
            _ = self.matrix + self.matrix.T


def _complex(dims, differentials):
    """complex with basis elements named after their degree and position"""
    basis = GradedBasis(
        {d: [f"c{d}.{i}" for i in range(size)] for d, size in dims.items()}
    )
    return IntegerChainComplex(
        basis, {d: SparseIntMatrix.from_dense(m) for d, m in differentials.items()}
    )


@pytest.fixture
def circle():
    """One vertex and one loop"""
    return _complex({0: 1, 1: 1}, {1: [[0]]})


@pytest.fixture
def projective_plane():
    """Cellular chains of the real projective plane"""
    return _complex({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[2]]})


def test_circle(circle):
    """Test the homology of the circle"""
    summary = homology(circle)
    assert summary.betti() == {0: 1, 1: 1}
    assert summary.torsion() == {0: [], 1: []}
    assert summary[1].representatives == [IntegerChain(1, {"c1.0": 1})]


def test_projective_plane(projective_plane):
    """Test torsion in the homology of the projective plane"""
    summary = homology(projective_plane)
    assert summary.betti() == {0: 1, 1: 0, 2: 0}
    assert summary.torsion()[1] == [2]
    assert summary.nonzero() == {0: (1, []), 1: (0, [2])}
    assert summary.euler_characteristic() == projective_plane.euler_characteristic()


def test_interval_and_triangle():
    """Test a contractible complex with a nonzero differential"""
    complex_ = _complex(
        {0: 3, 1: 3, 2: 1},
        {
            1: [[-1, 0, -1], [1, -1, 0], [0, 1, 1]],
            2: [[1], [1], [-1]],
        },
    )
    complex_.check_square_zero()
    assert homology(complex_).betti() == {0: 1, 1: 0, 2: 0}


def test_induced_on_circle(circle):
    """Test the map of degree -1 on the circle"""
    chain_map = {0: SparseIntMatrix.identity(1), 1: SparseIntMatrix.from_dense([[-1]])}
    induced = induced_on_homology(chain_map, circle)
    assert induced[0].is_identity()
    assert induced[1] == SparseIntMatrix.from_dense([[-1]])


def test_induced_on_torsion(projective_plane):
    """Test that torsion coordinates are reduced modulo their order"""
    chain_map = {d: 3 * SparseIntMatrix.identity(1) for d in (0, 1, 2)}
    summary = homology(projective_plane)
    induced = induced_on_homology(chain_map, projective_plane, summary)
    assert induced[1] == SparseIntMatrix.identity(1)
    assert is_identity_on_homology(induced[1], summary[1])
    assert is_identity_on_homology(SparseIntMatrix.from_dense([[3]]), summary[1])
    assert not is_identity_on_homology(induced[0], summary[0])


def test_chain_map_raises(projective_plane):
    """Test error raised on a map that does not commute with d"""
    chain_map = {d: SparseIntMatrix.identity(1) for d in (0, 1)}
    with pytest.raises(ChainMapError, match="degree 2") as err:
        check_chain_map(chain_map, projective_plane)
    assert err.value.degree == 2


def test_reindex(projective_plane):
    """Test the degree flip i = 2n - d"""
    summary = homology(projective_plane)
    groups = reindex_poincare_lefschetz(summary, 1)
    assert sorted(groups) == [0, 1, 2]
    assert groups[1].torsion == [2]
    assert groups[2].betti == 1


def test_chain_arithmetic():
    """Test chains and the boundary map"""
    complex_ = _complex({0: 2, 1: 1}, {1: [[-1], [1]]})
    edge = IntegerChain(1, {"c1.0": 2})
    assert complex_.boundary(edge) == IntegerChain(0, {"c0.0": -2, "c0.1": 2})
    assert (edge - edge).is_zero()
    assert_array_equal(complex_.chain_to_vector(edge).astype(np.int64), [2])
    with pytest.raises(ValueError, match="degrees"):
        _ = IntegerChain(0, {"c0.0": 1}) + edge


def test_complex_raises():
    """Test errors raised on inconsistent complexes"""
    basis = GradedBasis({0: ["v"], 1: ["e"]})
    with pytest.raises(ValueError, match="shape"):
        IntegerChainComplex(basis, {1: SparseIntMatrix.zeros(2, 1)})
    with pytest.raises(ValueError, match="duplicate"):
        GradedBasis({0: ["v", "v"]})
    with pytest.raises(ValueError, match="two degrees"):
        GradedBasis({0: ["v"], 1: ["v"]})
