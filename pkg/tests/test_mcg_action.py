""" Test the mapping class group action on the cellular complex """

import unittest

import pytest

from confspace_prototype.fn_complex import build_complex
from confspace_prototype.free_group import (
    FIXTURE_DEPTHS,
    MappingClass,
    fixture_classes,
    parse_mapping_class,
)
from confspace_prototype.integral_linear import homology, is_identity_on_homology
from confspace_prototype.mcg_action import (
    ChainMap,
    action_on_cohomology,
    action_on_homology,
    cohomology_groups,
    conjecture_probe,
    full_action,
    homology_groups,
    verify_johnson_triviality,
)


class TestFullAction(unittest.TestCase):
    """Test the chain map of a mapping class"""

    def setUp(self):
        super().setUp()
        self.genus = 1
        self.complex_ = build_complex(self.genus, 2)

    def _action(self, text):
        phi = parse_mapping_class(text, self.genus)
        return full_action(phi, self.genus, 2, self.complex_)

    def test_identity(self):
        """Test that the identity class acts by the identity"""
        chain_map = full_action(MappingClass.identity(1), 1, 2, self.complex_)
        self.assertTrue(chain_map.certified)
        self.assertTrue(chain_map.is_identity())
        self.assertEqual(chain_map.degrees, [2, 3, 4])

    def test_column_cells_fixed(self):
        """Test that cells without arc points are fixed"""
        for text in ("Ta1", "Tb1^-1", "Ta1 Tb1"):
            chain_map = self._action(text)
            self.assertTrue(chain_map.certified)
            self.assertTrue(chain_map.is_identity(4), text)
            self.assertFalse(chain_map.is_identity(2), text)

    def test_composition(self):
        """Test that the chain map of a product is the product of chain maps"""
        product = self._action("Ta1") @ self._action("Tb1")
        direct = self._action("Ta1 Tb1")
        self.assertTrue(product.certified)
        self.assertEqual(product.source.normal_form(), "Ta1 Tb1")
        for degree in direct.degrees:
            self.assertEqual(product[degree], direct[degree])

    def test_cohomology_functoriality(self):
        """Test the induced action of a product on cohomology"""
        summary = homology(self.complex_)
        matrices = {
            text: action_on_cohomology(
                parse_mapping_class(text, 1), 1, 2, self.complex_, summary
            )
            for text in ("Ta1", "Tb1", "Ta1 Tb1")
        }
        self.assertEqual(sorted(matrices["Ta1"]), [0, 1, 2])
        for i in (0, 1, 2):
            self.assertEqual(
                matrices["Ta1 Tb1"][i], matrices["Ta1"][i] @ matrices["Tb1"][i]
            )
        groups = cohomology_groups(self.complex_, summary)
        self.assertTrue(is_identity_on_homology(matrices["Ta1"][0], groups[0]))
        self.assertFalse(is_identity_on_homology(matrices["Ta1"][1], groups[1]))

    def test_to_json(self):
        """Test the plain data form of a chain map"""
        data = self._action("Ta1").to_json()
        self.assertEqual(data["phi"], "Ta1")
        self.assertTrue(data["certified"])
        self.assertEqual(sorted(data["matrices"]), ["2", "3", "4"])

    def test_raises(self):
        """Test errors raised on mismatched input"""
        with self.assertRaisesRegex(ValueError, "genus mismatch"):
            full_action(parse_mapping_class("Ta1", 2), 1, 1)
        with self.assertRaisesRegex(ValueError, "complex is for"):
            full_action(parse_mapping_class("Ta1", 1), 1, 1, self.complex_)
        with self.assertRaisesRegex(ValueError, "Option bogus not recognized"):
            full_action(
                parse_mapping_class("Ta1", 1), 1, 2, self.complex_, {"bogus": 1}
            )
        other = full_action(MappingClass.identity(1), 1, 2)
        with self.assertRaisesRegex(ValueError, "different complexes"):
            _ = other @ self._action("Ta1")


def test_boundary_twist_three_points():
    """Test that the boundary twist moves arc cells but not cohomology"""
    complex_ = build_complex(1, 3)
    chain_map = full_action(parse_mapping_class("Td", 1), 1, 3, complex_)
    assert isinstance(chain_map, ChainMap)
    assert chain_map.certified
    assert all(chain_map.is_identity(d) for d in (4, 5, 6))
    assert not chain_map.is_identity(3)

    summary = homology(complex_)
    groups = cohomology_groups(complex_, summary)
    matrices = action_on_cohomology(
        parse_mapping_class("Td", 1), 1, 3, complex_, summary
    )
    assert sorted(matrices) == [0, 1, 2, 3]
    for i, matrix in matrices.items():
        assert is_identity_on_homology(matrix, groups[i])


def test_action_on_homology():
    """Test the dual action on homology against the cohomology action"""
    complex_ = build_complex(1, 2)
    summary = homology(complex_)
    cohomology = cohomology_groups(complex_, summary)
    groups = homology_groups(complex_)
    assert {j: g.betti for j, g in groups.items()} == {0: 1, 1: 4, 2: 5}
    assert all(g.betti == cohomology[j].betti for j, g in groups.items())
    for text, phi in fixture_classes(1).items():
        on_homology = action_on_homology(phi, 1, 2, complex_)
        on_cohomology = action_on_cohomology(phi, 1, 2, complex_, summary)
        assert sorted(on_homology) == [0, 1, 2]
        for j, matrix in on_homology.items():
            assert is_identity_on_homology(matrix, groups[j]) == (
                is_identity_on_homology(on_cohomology[j], cohomology[j])
            ), f"{text} in degree {j}"


@pytest.mark.parametrize("genus", [1, 2])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_johnson_triviality_smoke(genus, n):
    """Test that every fixture acts trivially on H^j for j up to its depth"""
    complex_ = build_complex(genus, n)
    for text, phi in fixture_classes(genus).items():
        degree = min(FIXTURE_DEPTHS[text], n)
        report = verify_johnson_triviality(phi, genus, n, degree, complex_=complex_)
        assert report.depth == FIXTURE_DEPTHS[text], text
        assert report.consistent, f"{text}: {report.counterexamples}"
        assert all(report.identity[j] for j in range(degree + 1)), text


def test_separating_twist_sharpness():
    """Test a depth two class acting nontrivially in degree 3 of three points"""
    phi = parse_mapping_class("Tsep1", 2)
    complex_ = build_complex(2, 3)
    for homological in (False, True):
        report = verify_johnson_triviality(
            phi, 2, 3, 2, complex_=complex_, homological=homological
        )
        assert report.depth >= 2
        assert report.consistent
        assert all(report.identity[i] for i in (0, 1, 2))
        assert report.identity[3] is False
        assert report.nontrivial == [3]
        assert report.to_json()["side"] == ("homology" if homological else "cohomology")


def test_report_json():
    """Test the keys of the verification report"""
    report = verify_johnson_triviality(parse_mapping_class("Td", 1), 1, 2, 2)
    data = report.to_json()
    assert data["phi"] == "Td"
    assert data["depth"] == 2
    assert data["D"] == 3
    assert (data["n"], data["g"], data["i"]) == (2, 1, 2)
    assert data["H"] == {str(i): {"identity": True} for i in (0, 1, 2)}
    assert data["counterexamples"] == [] and data["nontrivial"] == []


def test_conjecture_probe():
    """Test the probe verdicts on boundary and nonseparating twists"""
    records = conjecture_probe([parse_mapping_class("Td", 1)], 1, 2)
    assert [r.degree for r in records] == [0, 1, 2]
    assert all(r.trivial and r.witness == 0 for r in records)

    records = conjecture_probe([parse_mapping_class("Ta1", 1)], 1, 1)
    assert [r.verdict for r in records] == ["consistent", "consistent"]
    assert records[1].to_json() == {
        "phi": "Ta1",
        "i": 1,
        "depth": 0,
        "identity": False,
        "witness": None,
        "verdict": "consistent",
    }
