"""Named mapping classes used as fixtures by the checks and the CLI"""

from typing import Dict

from .endomorphisms import MappingClass
from .parser import parse_mapping_class

# Johnson depth of each fixture
FIXTURE_DEPTHS = {
    "Td": 2,
    "Td^-1": 2,
    "Td^2": 2,
    "Tsep1": 2,
    "Tsep1 Td": 2,
    "Ta1": 0,
    "Tb1": 0,
    "Ta1 Tb1": 0,
}


def fixture_classes(genus: int) -> Dict[str, MappingClass]:
    """Boundary twists, a separating twist, nonseparating twists and products

    >>> sorted(fixture_classes(1))[:3]
    ['Ta1', 'Ta1 Tb1', 'Tb1']
    """
    if genus < 1:
        return {}
    return {text: parse_mapping_class(text, genus) for text in FIXTURE_DEPTHS}
