"""
=======================================
Free group, Magnus expansion and Johnson filtration
=======================================
"""

from .words import FreeWord, commutator, invert, letter_name, multiply, reduce_word
from .endomorphisms import (
    FreeEndomorphism,
    MappingClass,
    dehn_twist_generator,
    twist_generator_names,
)
from .parser import parse_mapping_class, parse_word
from .magnus import TruncatedMagnusSeries, johnson_depth, lcs_depth, magnus_expansion
from .lie_algebra import (
    LieElement,
    boundary_twist_class,
    expected_boundary_twist_class,
    lyndon_words,
    standard_bracketing,
)
from .fixtures import FIXTURE_DEPTHS, fixture_classes


__all__ = [
    "FreeWord",
    "commutator",
    "invert",
    "letter_name",
    "multiply",
    "reduce_word",
    "FreeEndomorphism",
    "MappingClass",
    "dehn_twist_generator",
    "twist_generator_names",
    "parse_mapping_class",
    "parse_word",
    "TruncatedMagnusSeries",
    "johnson_depth",
    "lcs_depth",
    "magnus_expansion",
    "LieElement",
    "boundary_twist_class",
    "expected_boundary_twist_class",
    "lyndon_words",
    "standard_bracketing",
    "FIXTURE_DEPTHS",
    "fixture_classes",
]
