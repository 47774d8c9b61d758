"""Text input of words and mapping classes

Two forms are accepted for a mapping class:

* whitespace separated twist generators ``Ta<i>``, ``Tb<i>``, ``Tsep<h>``,
  ``Td``, each with an optional integer exponent ``^<k>``; the word ``X Y``
  applies Y first;
* ``endo: a1 -> <word>; b1 -> <word>; ...`` for a raw endomorphism, where
  generators that are not listed are fixed.
"""

import re
from typing import Dict, List, Tuple

from ..exceptions import ParseError
from .endomorphisms import FreeEndomorphism, MappingClass, dehn_twist_generator
from .words import FreeWord

_FACTOR = re.compile(r"^(Ta\d+|Tb\d+|Tsep\d+|Td)(?:\^([+-]?\d+))?$")
_ASSIGNMENT = re.compile(r"^\s*([ab])(\d+)\s*-?>\s*(.*?)\s*$")


def parse_word(text: str, genus: int) -> FreeWord:
    """Parse a word such as ``a1 b1 A1 B1``

    Raises:
        ParseError: on malformed input
    """
    return FreeWord.parse(text, genus)


def parse_factors(text: str, genus: int) -> List[Tuple[str, int]]:
    """Split a twist word into (generator, exponent) pairs

    >>> parse_factors("Ta1 Td^-2", 1)
    [('Ta1', 1), ('Td', -2)]

    Raises:
        ParseError: on unknown tokens or generators outside the genus
    """
    factors = []
    for token in text.split():
        match = _FACTOR.match(token)
        if match is None:
            raise ParseError(f"unknown mapping class token {token!r}")
        name = match.group(1)
        try:
            dehn_twist_generator(name, genus)
        except ValueError as err:
            raise ParseError(str(err)) from err
        factors.append((name, int(match.group(2)) if match.group(2) else 1))
    return factors


def parse_endomorphism(text: str, genus: int) -> FreeEndomorphism:
    """Parse the body of an ``endo:`` input

    Raises:
        ParseError: on malformed assignments or repeated generators
    """
    images: Dict[int, FreeWord] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        match = _ASSIGNMENT.match(chunk)
        if match is None:
            raise ParseError(f"cannot parse assignment {chunk.strip()!r}")
        kind, handle, word = match.groups()
        handle_index = int(handle)
        if not 1 <= handle_index <= genus:
            raise ParseError(f"generator {kind}{handle} outside genus {genus}")
        index = 2 * handle_index - 1 if kind == "a" else 2 * handle_index
        if index in images:
            raise ParseError(f"generator {kind}{handle} assigned twice")
        images[index] = FreeWord.parse(word, genus)
    return FreeEndomorphism.from_dict(genus, images)


def parse_mapping_class(text: str, genus: int) -> MappingClass:
    """Parse a mapping class in either accepted form

    Args:
        text (str): the input
        genus (int): genus of the surface

    Raises:
        ParseError: on malformed input

    Returns:
        MappingClass: the parsed class, raw when given by ``endo:``
    """
    stripped = text.strip()
    if stripped.startswith("endo:"):
        endo = parse_endomorphism(stripped[len("endo:") :], genus)
        return MappingClass(genus, endomorphism=endo)
    if stripped in ("", "1", "id"):
        return MappingClass.identity(genus)
    return MappingClass(genus, factors=parse_factors(stripped, genus))
