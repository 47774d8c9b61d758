""" Test free group words, Magnus expansion and the Johnson filtration """

from hypothesis import given, settings, strategies as st
import pytest

from confspace_prototype.exceptions import ParseError
from confspace_prototype.free_group import (
    FIXTURE_DEPTHS,
    FreeEndomorphism,
    FreeWord,
    LieElement,
    MappingClass,
    TruncatedMagnusSeries,
    boundary_twist_class,
    commutator,
    dehn_twist_generator,
    expected_boundary_twist_class,
    fixture_classes,
    johnson_depth,
    lcs_depth,
    lyndon_words,
    magnus_expansion,
    parse_mapping_class,
    parse_word,
    standard_bracketing,
    twist_generator_names,
)

letters = st.lists(st.sampled_from([1, 2, 3, 4, -1, -2, -3, -4]), max_size=8)


@settings(max_examples=50, deadline=None)
@given(letters, letters)
def test_magnus_multiplicative(left, right):
    """Test that the Magnus expansion is a homomorphism"""
    x, y = FreeWord(2, left), FreeWord(2, right)
    assert magnus_expansion(x * y, 4) == magnus_expansion(x, 4) * magnus_expansion(
        y, 4
    )
    assert (magnus_expansion(x, 4) * magnus_expansion(~x, 4)).is_one()


@settings(max_examples=50, deadline=None)
@given(letters, letters)
def test_commutators_deepen(left, right):
    """Test that a commutator lies one step deeper than its entries"""
    x, y = FreeWord(2, left), FreeWord(2, right)
    assert lcs_depth(commutator(x, y), 4) >= 1
    assert lcs_depth(commutator(commutator(x, y), x), 4) >= 2


def test_words():
    """Test reduction, inverses and text"""
    word = parse_word("a1 b1 B1 A2", 2)
    assert str(word) == "a1 A2"
    assert (word * ~word).is_identity()
    assert str(FreeWord.boundary(1)) == "a1 b1 A1 B1"
    assert word.exponent_sums() == [1, 0, -1, 0]
    assert parse_word("1", 1).is_identity()


@pytest.mark.parametrize(
    "text, message",
    [
        ("a3", "outside genus"),
        ("a1 c2", "cannot parse"),
        ("x", "cannot parse"),
    ],
)
def test_parse_word_raises(text, message):
    """Test errors raised on malformed words"""
    with pytest.raises(ParseError, match=message):
        parse_word(text, 2)


def test_magnus_series():
    """Test the truncated series of a commutator"""
    series = magnus_expansion(FreeWord.boundary(1), 3)
    assert series.lowest_degree() == 2
    assert series.degree_part(2) == {(1, 2): 1, (2, 1): -1}
    assert TruncatedMagnusSeries.of_letter(-1, 3).terms() == {
        (): 1,
        (1,): -1,
        (1, 1): 1,
        (1, 1, 1): -1,
    }
    with pytest.raises(ValueError, match="at least 1"):
        magnus_expansion(FreeWord.boundary(1), 0)


@pytest.mark.parametrize("genus", [1, 2])
@pytest.mark.parametrize("text", sorted(FIXTURE_DEPTHS))
def test_fixture_depths(genus, text):
    """Test the Johnson depth of every fixture"""
    phi = fixture_classes(genus)[text]
    assert johnson_depth(phi.endomorphism, 4) == FIXTURE_DEPTHS[text]


def test_depth_bounds():
    """Test the truncation of the depth at D"""
    assert johnson_depth(FreeEndomorphism.identity(2), 4) == 4
    assert johnson_depth(dehn_twist_generator("Td", 2), 2) == 2
    assert johnson_depth(dehn_twist_generator("Td", 2), 1) == 1
    assert fixture_classes(0) == {}


@pytest.mark.parametrize("genus", [1, 2, 3])
def test_generators_fix_boundary(genus):
    """Test that every twist generator fixes c and has an exact inverse"""
    for name in twist_generator_names(genus):
        endo = dehn_twist_generator(name, genus)
        assert endo.fixes_boundary()
        assert (endo * endo.inverse()).is_identity()
        assert (endo.inverse() * endo).is_identity()
        assert abs(endo.abelianization_determinant()) == 1


def test_composition_convention():
    """Test that the word X Y applies Y first"""
    genus = 1
    ta, tb = (dehn_twist_generator(name, genus) for name in ("Ta1", "Tb1"))
    phi = parse_mapping_class("Ta1 Tb1", genus)
    a_1 = FreeWord.a(genus, 1)
    assert phi.endomorphism == ta * tb
    assert phi.endomorphism(a_1) == ta(tb(a_1))
    assert phi.endomorphism.abelianization() == (
        ta.abelianization() @ tb.abelianization()
    )


def test_mapping_class_algebra():
    """Test products, powers and the normal form"""
    phi = parse_mapping_class("Ta1 Td^-2", 1)
    assert phi.normal_form() == "Ta1 Td^-2"
    assert parse_mapping_class(phi.normal_form(), 1).endomorphism == phi.endomorphism
    assert (phi * phi**-1).endomorphism.is_identity()
    assert (phi**2).normal_form() == "Ta1 Td^-2 Ta1 Td^-2"
    assert MappingClass.identity(2).normal_form() == "1"
    assert parse_mapping_class("id", 2).endomorphism.is_identity()


def test_raw_endomorphism():
    """Test the endo: input form"""
    phi = parse_mapping_class("endo: a1 -> A1; b1 -> b1 a1", 1)
    assert phi.is_raw
    assert str(phi.endomorphism.image(1)) == "A1"
    assert str(phi.endomorphism.image(2)) == "b1 a1"
    assert phi.normal_form() == "endo: a1 -> A1; b1 -> b1 a1"


@pytest.mark.parametrize(
    "text, message",
    [
        ("Tq1", "unknown mapping class token"),
        ("Ta3", "outside genus"),
        ("Td^x", "unknown mapping class token"),
        ("endo: a1 -> b1; a1 -> a1", "assigned twice"),
        ("endo: c1 -> a1", "cannot parse assignment"),
        ("endo: a3 -> a1", "outside genus"),
    ],
)
def test_parse_mapping_class_raises(text, message):
    """Test errors raised on malformed mapping classes"""
    with pytest.raises(ParseError, match=message):
        parse_mapping_class(text, 2)


def test_lyndon_words():
    """Test the Lyndon basis in low degrees"""
    words = list(lyndon_words(2, 4))
    assert len(words) == 8
    assert words == sorted(words)
    assert sum(1 for w in lyndon_words(3, 3) if len(w) == 3) == 8
    assert standard_bracketing((1, 2, 2)) == ((1, 2), 2)


def test_lie_element():
    """Test Lyndon coordinates of brackets"""
    element = LieElement.from_bracket(((1, 2), 1))
    assert element == -LieElement({(1, 1, 2): 1})
    assert LieElement.from_tensor(element.to_tensor()) == element
    assert element.degrees() == [3]
    with pytest.raises(ValueError, match="not a Lie element"):
        LieElement.from_tensor({(2, 1): 1})


@pytest.mark.parametrize("genus", [1, 2])
@pytest.mark.parametrize("power", [-3, -2, -1, 0, 1, 2, 3])
def test_boundary_twist_class(genus, power):
    """Test the degree three class of a power of the boundary twist"""
    assert boundary_twist_class(genus, power) == expected_boundary_twist_class(
        genus, power
    )


@pytest.mark.parametrize("genus", [1, 2])
def test_twist_generator_images(genus):
    """Test the images of every named twist generator"""
    a_1, b_1 = FreeWord.a(genus, 1), FreeWord.b(genus, 1)
    ta = dehn_twist_generator("Ta1", genus)
    tb = dehn_twist_generator("Tb1", genus)
    assert ta.image(1) == a_1 and ta.image(2) == b_1 * a_1
    assert tb.image(1) == a_1 * ~b_1 and tb.image(2) == b_1
    boundary = FreeWord.boundary(genus)
    twist = dehn_twist_generator("Td", genus)
    assert not twist.is_identity()
    for k in range(1, 2 * genus + 1):
        assert twist.image(k) == FreeWord.generator(genus, k).conjugate(boundary)
    separating = dehn_twist_generator("Tsep1", genus)
    assert separating.image(1) == a_1.conjugate(FreeWord.boundary(genus, 1))
    assert (separating == twist) == (genus == 1)
    assert parse_mapping_class("Td", genus).endomorphism == twist
