""" Test the cellular chain complex """

import json

import pytest

from confspace_prototype.core_model import (
    CellTuple,
    SurfaceParams,
    enumerate_cells,
    factorize_cell,
    product_cells,
)
from confspace_prototype.exceptions import BoundarySquareError
from confspace_prototype.fn_complex import (
    FNComplex,
    boundary_cell,
    build_complex,
    cochain_dual,
    merge_boundary,
    permutation_sign,
    shuffles,
)
from confspace_prototype.integral_linear import (
    GradedBasis,
    IntegerChainComplex,
    SparseIntMatrix,
    cohomology_table,
    homology,
)


@pytest.mark.parametrize("genus", [0, 1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_square_zero(genus, n):
    """Test d o d = 0"""
    complex_ = build_complex(genus, n)
    complex_.check_square_zero()
    assert complex_.log.cells == complex_.ranks()


def test_square_zero_largest():
    """Test d o d = 0 on the largest desk scale complex"""
    complex_ = build_complex(3, 4, {"check_square": False})
    assert len(complex_.basis) == 6144
    complex_.check_square_zero()


def test_disc_merge():
    """Test the merge of two columns on the disc"""
    disc = SurfaceParams(0)
    chain = boundary_cell(CellTuple(((1,), (2,))), disc)
    assert chain.degree == 3
    assert chain.terms == {CellTuple(((1, 2),)): 1, CellTuple(((2, 1),)): -1}


def test_absorption_cancels_for_one_point():
    """Test that a single column meets both sides of every arc"""
    cell = CellTuple(((1,),), ((),), ((),))
    assert boundary_cell(cell, SurfaceParams(1)).is_zero()


def test_boundary_genus_mismatch():
    """Test error raised on a cell of the wrong genus"""
    with pytest.raises(ValueError, match="genus"):
        boundary_cell(CellTuple(((1,),)), SurfaceParams(1))


def test_signs_and_shuffles():
    """Test the combinatorial helpers"""
    assert [permutation_sign(p) for p in ([0, 1, 2], [2, 1, 0], [1, 2, 0])] == [
        1,
        -1,
        1,
    ]
    assert sorted(shuffles((1, 2), (3,))) == [(1, 2, 3), (1, 3, 2), (3, 1, 2)]


@pytest.mark.parametrize(
    "genus, n, betti",
    [
        (0, 1, {"0": 1, "1": 0}),
        (0, 2, {"0": 1, "1": 1, "2": 0}),
        (0, 3, {"0": 1, "1": 3, "2": 2, "3": 0}),
        (1, 1, {"0": 1, "1": 2}),
        (1, 2, {"0": 1, "1": 4, "2": 5}),
        (2, 1, {"0": 1, "1": 4}),
    ],
)
def test_cohomology(genus, n, betti):
    """Test the cohomology of the open configuration space"""
    complex_ = build_complex(genus, n)
    table = cohomology_table(homology(complex_), n, genus)
    assert table["betti"] == betti
    assert not any(table["torsion"].values())


@pytest.mark.parametrize("genus, n", [(0, 3), (1, 2), (2, 2), (1, 3)])
def test_euler_characteristic(genus, n):
    """Test the Euler characteristic of chains against homology"""
    complex_ = build_complex(genus, n)
    assert homology(complex_).euler_characteristic() == (
        complex_.euler_characteristic()
    )
    # chi(F_n) = chi(S)(chi(S) - 1)...(chi(S) - n + 1) with chi(S) = 1 - 2g
    chi = 1
    for i in range(n):
        chi *= 1 - 2 * genus - i
    assert complex_.euler_characteristic() == chi


@pytest.mark.parametrize("genus, n", [(0, 2), (1, 2), (2, 2)])
def test_cochain_dual(genus, n):
    """Test universal coefficients between the complex and its dual"""
    complex_ = build_complex(genus, n)
    summary = homology(complex_)
    dual = homology(cochain_dual(complex_))
    for degree in summary.degrees:
        assert dual[-degree].betti == summary[degree].betti
        below = summary.groups.get(degree - 1)
        torsion = [] if below is None else below.torsion
        assert dual[-degree].torsion == torsion


def test_json_dump(tmp_path):
    """Test the JSON dump and reload"""
    complex_ = build_complex(1, 2)
    data = complex_.to_json()
    assert data["n"] == 2 and data["g"] == 1
    assert sorted(data["basis"], key=int) == ["2", "3", "4"]
    assert sum(len(cells) for cells in data["basis"].values()) == 14

    filename = tmp_path / "complex.json"
    complex_.save(str(filename))
    with open(filename, "r", encoding="utf-8") as fhandle:
        assert json.load(fhandle) == data
    loaded = FNComplex.load(str(filename))
    for degree in complex_.degrees:
        assert loaded.differential(degree) == complex_.differential(degree)
        assert loaded.basis.cells_of_degree(degree) == complex_.basis.cells_of_degree(
            degree
        )


def test_square_zero_raises():
    """Test error raised on a broken differential"""
    basis = GradedBasis({0: ["v"], 1: ["e"], 2: ["f"]})
    one = SparseIntMatrix.identity(1)
    complex_ = IntegerChainComplex(basis, {1: one, 2: one})
    with pytest.raises(BoundarySquareError, match="degree 2") as err:
        complex_.check_square_zero()
    assert err.value.cell == "f"


def test_build_raises():
    """Test errors raised on bad build input"""
    with pytest.raises(ValueError, match="Option bogus not recognized"):
        build_complex(1, 1, {"bogus": True})
    with pytest.raises(ValueError, match="nonnegative"):
        build_complex(1, -1)


@pytest.mark.parametrize("genus, n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_pure_arc_cells_are_cycles(genus, n):
    """Test that cells without columns have no boundary"""
    params = SurfaceParams(genus)
    for cell in enumerate_cells(params, n).pure_arc_cells():
        assert boundary_cell(cell, params).is_zero()


@pytest.mark.parametrize("genus", [1, 2])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_pure_column_span(genus, n):
    """Test that absorption leaves the pure column cells from three points on"""
    params = SurfaceParams(genus)
    mixed = 0
    for cell in enumerate_cells(params, n):
        if cell.is_pure_column():
            chain = boundary_cell(cell, params)
            mixed += sum(1 for face in chain.terms if not face.is_pure_column())
    if n <= 2:
        assert mixed == 0
    else:
        assert mixed > 0


@pytest.mark.parametrize("genus, n", [(1, 3), (2, 3)])
def test_product_boundary(genus, n):
    """Test that merges of a product only see the column factor"""
    params = SurfaceParams(genus)
    for cell in enumerate_cells(params, n):
        e_part, x_part = factorize_cell(cell)
        same_arcs = {
            face: value
            for face, value in boundary_cell(cell, params).items()
            if face.arcs == cell.arcs
        }
        expected = {
            product_cells(face, x_part): value
            for face, value in merge_boundary(e_part).items()
        }
        assert same_arcs == expected, cell.serialize()


def test_no_points():
    """Test the complex of the empty configuration"""
    complex_ = build_complex(1, 0)
    assert complex_.ranks() == {0: 1}
    table = cohomology_table(homology(complex_), 0, 1)
    assert table["betti"] == {"0": 1}
