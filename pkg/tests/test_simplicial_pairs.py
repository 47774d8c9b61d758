""" Test product simplicial models, the oracle and the Moriyama action """

import unittest

import pytest

from confspace_prototype.core_model import SurfaceParams, rising_factorial
from confspace_prototype.exceptions import GuardrailError
from confspace_prototype.fn_complex import build_complex
from confspace_prototype.free_group import (
    FreeEndomorphism,
    dehn_twist_generator,
    fixture_classes,
    parse_mapping_class,
)
from confspace_prototype.integral_linear import SparseIntMatrix, homology
from confspace_prototype.simplicial_pairs import (
    BASEPOINT_MODE,
    SimplicialPairComplex,
    collapse_map,
    endo_to_map,
    estimate_simplices,
    matches_cell_homology,
    mor_action,
    mor_rank,
    mor_report,
    pure_arc_basis,
    pushforward_matrix,
    relative_homology_oracle,
    surface_model,
    surface_oracle,
    wedge_model,
    wedge_oracle,
)
from confspace_prototype.simplicial_pairs.moriyama import check_subdivided_cycles


@pytest.mark.parametrize("genus", [0, 1, 2, 3])
def test_surface_model(genus):
    """Test the triangulated polygon of the surface"""
    model = surface_model(genus)
    if genus == 0:
        assert model.counts() == [3, 3, 1]
    else:
        assert model.counts() == [1, 6 * genus - 1, 4 * genus - 1]
    assert model.euler_characteristic() == 1 - 2 * genus
    assert model.basepoint in model.marked


def test_wedge_model():
    """Test the wedge of circles"""
    model = wedge_model(2)
    assert model.counts() == [1, 4]
    assert model.edge_endpoints("x3") == ("p0", "p0")
    assert model.euler_characteristic() == -3


@pytest.mark.parametrize("genus, n", [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2)])
def test_oracle_matches_cells(genus, n):
    """Test the product model against the cell complex"""
    oracle = surface_oracle(genus, n, {"max_surface_points": 3})
    assert matches_cell_homology(oracle, homology(build_complex(genus, n)))


def test_oracle_genus_one_two_points():
    """Test the relative homology of two points on the torus with a hole"""
    summary = surface_oracle(1, 2)
    assert summary.betti() == {0: 0, 1: 0, 2: 5, 3: 4, 4: 1}
    assert not any(summary.torsion().values())


@pytest.mark.parametrize("genus", [1, 2])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_wedge_ranks(genus, n):
    """Test that the wedge pair is free and concentrated in degree n"""
    summary = wedge_oracle(genus, n)
    expected = {d: 0 for d in summary.degrees}
    expected[n] = rising_factorial(2 * genus, n)
    assert summary.betti() == expected
    assert not any(summary.torsion().values())
    assert mor_rank(genus, n) == expected[n]


def test_guardrails():
    """Test that oversized requests are refused with an estimate"""
    with pytest.raises(GuardrailError, match="exceed the cap") as err:
        surface_oracle(1, 3)
    assert err.value.estimate == estimate_simplices(surface_model(1), 3, "A'")
    with pytest.raises(GuardrailError, match="product simplices exceed"):
        wedge_oracle(1, 2, {"max_simplices": 10})
    with pytest.raises(GuardrailError, match="exceed the cap of 3"):
        mor_action(parse_mapping_class("Td", 1), 4)
    with pytest.raises(ValueError, match="Option bogus not recognized"):
        relative_homology_oracle(wedge_model(1), 1, BASEPOINT_MODE, {"bogus": 1})


def test_pair_complex_raises():
    """Test errors raised on bad pair input"""
    with pytest.raises(ValueError, match="mode"):
        SimplicialPairComplex(wedge_model(1), 1, "B")
    with pytest.raises(ValueError, match="positive"):
        SimplicialPairComplex(wedge_model(1), 0)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_pure_arc_basis(n):
    """Test the basis of the Moriyama module"""
    basis = pure_arc_basis(SurfaceParams(1), n)
    assert len(basis) == rising_factorial(2, n)
    assert all(cell.is_pure_arc() and cell.is_standard() for cell in basis)


class TestMoriyamaAction(unittest.TestCase):
    """Test the action on the top relative homology of the wedge"""

    def _arc_of(self, cell):
        (arc,) = [k for k, points in enumerate(cell.arcs) if points]
        return arc

    def test_one_point_is_abelianization(self):
        """Test that one point recovers the action on H_1"""
        for genus in (1, 2):
            basis = pure_arc_basis(SurfaceParams(genus), 1)
            for text, phi in fixture_classes(genus).items():
                matrix = mor_action(phi, 1)
                abelian = phi.endomorphism.abelianization()
                for row, target in enumerate(basis):
                    for col, source in enumerate(basis):
                        self.assertEqual(
                            matrix[row, col],
                            abelian[self._arc_of(target), self._arc_of(source)],
                            f"{text} at g={genus}",
                        )

    def test_identity(self):
        """Test that the identity acts as the identity"""
        for n in (1, 2, 3):
            matrix = mor_action(FreeEndomorphism.identity(1), n)
            self.assertTrue(matrix.is_identity())
            self.assertEqual(matrix.shape, (mor_rank(1, n), mor_rank(1, n)))

    def test_boundary_twist_kernel(self):
        """Test that the boundary twist is invisible up to two points only"""
        twist = parse_mapping_class("Td", 1)
        self.assertTrue(mor_action(twist, 1).is_identity())
        self.assertTrue(mor_action(twist, 2).is_identity())
        self.assertFalse(mor_action(twist, 3).is_identity())
        self.assertFalse(mor_action(parse_mapping_class("Ta1", 1), 1).is_identity())

    def test_functoriality(self):
        """Test that a composite acts by the product of the actions"""
        for text in ("Ta1 Tb1", "Tb1 Td", "Ta1^-1 Td"):
            left, right = text.split()
            composite = parse_mapping_class(text, 1)
            for n in (1, 2):
                direct = mor_action(composite.endomorphism, n)
                product = mor_action(parse_mapping_class(left, 1), n) @ mor_action(
                    parse_mapping_class(right, 1), n
                )
                self.assertEqual(direct, product, f"{text} at n={n}")

    def test_inverse(self):
        """Test that a generator and its inverse multiply to the identity"""
        for name in ("Ta1", "Tb1", "Td"):
            phi = parse_mapping_class(name, 1)
            product = mor_action(phi, 2) @ mor_action(phi**-1, 2)
            self.assertTrue(product.is_identity(), name)

    def test_cached_and_direct_agree(self):
        """Test the cached generator product against the direct computation"""
        phi = parse_mapping_class("Ta1 Tb1^2", 1)
        cached = mor_action(phi, 2)
        direct = mor_action(phi, 2, options={"progress": False, "check_cycles": True})
        self.assertEqual(cached, direct)

    def test_inverting_a_generator(self):
        """Test a raw endomorphism whose loop needs a collapse sub-edge"""
        phi = parse_mapping_class("endo: a1 -> A1", 1)
        self_map = endo_to_map(phi.endomorphism)
        check_subdivided_cycles(self_map, pure_arc_basis(SurfaceParams(1), 2))
        collapse = collapse_map(self_map)
        basis = pure_arc_basis(SurfaceParams(1), 2)
        self.assertTrue(pushforward_matrix(collapse, basis).is_identity())
        expected = SparseIntMatrix.from_dense([[1, 0], [0, -1]])
        one_point = pure_arc_basis(SurfaceParams(1), 1)
        self.assertEqual(self._arc_of(one_point[0]), 1)
        self.assertEqual(mor_action(phi, 1), expected)
        squared = mor_action(phi, 2) @ mor_action(phi, 2)
        self.assertTrue(squared.is_identity())

    def test_subdivided_cycles(self):
        """Test that the subdivided classes are relative cycles"""
        for name in ("Ta1", "Tb1^-1", "Td"):
            endo = parse_mapping_class(name, 1).endomorphism
            self_map = endo_to_map(endo)
            for n in (1, 2):
                check_subdivided_cycles(
                    self_map, pure_arc_basis(SurfaceParams(1), n)
                )
                check_subdivided_cycles(
                    collapse_map(self_map), pure_arc_basis(SurfaceParams(1), n)
                )

    def test_raises(self):
        """Test errors raised on bad input"""
        with self.assertRaisesRegex(ValueError, "nonnegative"):
            mor_action(dehn_twist_generator("Ta1", 1), -1)
        with self.assertRaisesRegex(ValueError, "genus mismatch"):
            mor_action(dehn_twist_generator("Ta1", 1), 1, genus=2)
        with self.assertRaisesRegex(ValueError, "Option bogus not recognized"):
            mor_action(dehn_twist_generator("Ta1", 1), 1, options={"bogus": 1})

    def test_report(self):
        """Test the JSON report of a Moriyama matrix"""
        phi = parse_mapping_class("Ta1", 1)
        report = mor_report(phi, 1, mor_action(phi, 1))
        self.assertEqual(report["phi"], "Ta1")
        self.assertEqual(report["basis"], ["l=0;P=;U=();V=(1)", "l=0;P=;U=(1);V=()"])
        self.assertEqual(report["matrix"], [[1, 0], [1, 1]])
