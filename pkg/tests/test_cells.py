""" Test cells of the rectangle model """

from math import factorial

import pytest

from confspace_prototype.core_model import (
    CellTuple,
    SurfaceParams,
    cell_degree,
    enumerate_cells,
    expected_cell_count,
    factorize_cell,
    product_cells,
    rising_factorial,
)


@pytest.mark.parametrize(
    "genus, n, count",
    [(0, 1, 1), (1, 1, 3), (1, 2, 14), (2, 3, 252), (3, 4, 6144)],
)
def test_cell_count(genus, n, count):
    """Test the enumeration against the double counting formula"""
    assert expected_cell_count(genus, n) == count
    assert len(enumerate_cells(SurfaceParams(genus), n)) == count


@pytest.mark.parametrize("genus, n", [(0, 2), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_degree_ranges(genus, n):
    """Test pure arc cells in degree n and singleton columns in degree 2n"""
    basis = enumerate_cells(SurfaceParams(genus), n)
    assert basis.degrees == list(range(n, 2 * n + 1))
    assert len(basis.pure_arc_cells()) == rising_factorial(2 * genus, n)
    assert basis.dimension(2 * n) == factorial(n)
    assert all(cell.is_standard() for cell in basis)


def test_canonical_order():
    """Test the sort key: degree, then length, then columns, then arcs"""
    basis = enumerate_cells(SurfaceParams(1), 1)
    assert [c.serialize() for c in basis] == [
        "l=0;P=;U=();V=(1)",
        "l=0;P=;U=(1);V=()",
        "l=1;P=(1);U=();V=()",
    ]


def test_serialize():
    """Test the text form of a cell"""
    cell = CellTuple(((1, 3),), ((), ()), ((), (2,)))
    assert cell.serialize() == "l=1;P=(1,3);U=(),();V=(),(2)"
    assert CellTuple.parse(cell.serialize()) == cell
    assert cell.degree == 4
    assert cell.arcs == ((), (), (), (2,))


@pytest.mark.parametrize(
    "text, message",
    [
        ("l=2;P=(1);U=();V=()", "length field"),
        ("l=0;P=;U=()", "expected fields"),
        ("l=0;P=;U=(1;V=()", "malformed"),
        ("nonsense", "malformed cell field"),
    ],
)
def test_parse_raises(text, message):
    """Test errors raised on malformed cells"""
    with pytest.raises(ValueError, match=message):
        CellTuple.parse(text)


def test_invalid_cells():
    """Test the cell invariants"""
    with pytest.raises(ValueError, match="repeated labels"):
        CellTuple(((1,), (1,)))
    with pytest.raises(ValueError, match="nonempty"):
        CellTuple(((),))
    with pytest.raises(ValueError, match="U arcs"):
        CellTuple((), ((),), ())
    with pytest.raises(ValueError, match="even number"):
        CellTuple.from_arcs([(1,)])


def test_factorization():
    """Test the split into column and arc factors"""
    cell = CellTuple.from_arcs([(4,), (), (1, 5), ()], columns=[(3, 2)])
    e_part, x_part = factorize_cell(cell)
    assert e_part.is_pure_column()
    assert x_part.is_pure_arc()
    assert e_part.labels == frozenset({2, 3})
    assert x_part.labels == frozenset({1, 4, 5})
    assert product_cells(e_part, x_part) == cell
    assert cell_degree(cell) == cell_degree(e_part) + cell_degree(x_part) == 6


def test_product_raises():
    """Test errors raised by the product of factors"""
    e_part = CellTuple(((1,),), ((),), ((),))
    x_part = CellTuple.from_arcs([(1,), ()])
    with pytest.raises(ValueError, match="labels not disjoint"):
        product_cells(e_part, x_part)
    with pytest.raises(ValueError, match="not a pure arc cell"):
        product_cells(e_part, e_part)
    with pytest.raises(ValueError, match="genus mismatch"):
        product_cells(CellTuple(((1,),)), CellTuple.from_arcs([(2,), ()]))


def test_standardize():
    """Test the order preserving relabeling onto 1..k"""
    cell = CellTuple.from_arcs([(5,), (2,)])
    standard, back = cell.standardize()
    assert standard == CellTuple.from_arcs([(2,), (1,)])
    assert back == {1: 2, 2: 5}
    assert standard.relabel(back) == cell


def test_surface_params():
    """Test the boundary subdivision of the rectangle model"""
    params = SurfaceParams(2)
    assert params.arc_count == 4
    assert [b.name for b in params.boundary_subdivision[:4]] == ["I", "J", "I'", "J'"]
    assert [b.arc for b in params.boundary_subdivision] == [0, 1, 0, 1, 2, 3, 2, 3]
    assert params.arc_name(3) == "V2"
    with pytest.raises(ValueError, match="nonnegative"):
        SurfaceParams(-1)


@pytest.mark.parametrize("genus", [0, 1, 2, 3])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_double_counting(genus, n):
    """Test the enumeration against the count over column and arc splits"""
    basis = enumerate_cells(SurfaceParams(genus), n)
    assert len(basis) == expected_cell_count(genus, n)
    assert len(set(basis)) == len(basis)


def test_no_points():
    """Test the single empty configuration"""
    basis = enumerate_cells(SurfaceParams(1), 0)
    assert basis.degrees == [0]
    (cell,) = basis
    assert cell == CellTuple.empty(1)
    assert cell.is_pure_arc() and cell.is_pure_column()
    assert expected_cell_count(1, 0) == 1


def test_factorization_round_trip():
    """Test factorize and product on every cell of three points in genus two"""
    basis = enumerate_cells(SurfaceParams(2), 3)
    assert len(basis) == 252
    for cell in basis:
        e_part, x_part = factorize_cell(cell)
        assert e_part.is_pure_column() and x_part.is_pure_arc()
        assert e_part.labels == cell.column_labels
        assert x_part.labels == cell.arc_labels
        assert product_cells(e_part, x_part) == cell
