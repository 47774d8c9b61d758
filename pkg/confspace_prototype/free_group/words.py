"""Reduced words in the free group on a_1, b_1, ..., a_g, b_g"""

import re
from typing import Iterable, List, Sequence, Tuple

from ..exceptions import ParseError

Letter = int

_TOKEN = re.compile(r"([abAB])(\d+)")


def letter_name(letter: Letter) -> str:
    """Text of a signed letter: generator 2i-1 is a_i, 2i is b_i, capitals invert

    >>> [letter_name(x) for x in (1, 2, -1, -4)]
    ['a1', 'b1', 'A1', 'B2']
    """
    index = abs(letter)
    name = "ab"[(index - 1) % 2] + str((index + 1) // 2)
    return name if letter > 0 else name.upper()


def generator_index(kind: str, handle: int) -> int:
    """index of a_i (kind 'a') or b_i (kind 'b')"""
    return 2 * handle - 1 if kind.lower() == "a" else 2 * handle


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """Cancel adjacent inverse pairs"""
    stack: List[Letter] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class FreeWord:
    """Freely reduced word in the free group of rank 2g.

    Letters are nonzero integers: ``k`` is the k-th generator (a_1, b_1, a_2,
    ...) and ``-k`` its inverse.
    """

    __slots__ = ("genus", "letters")

    def __init__(self, genus: int, letters: Sequence[Letter] = ()):
        rank = 2 * genus
        for letter in letters:
            if letter == 0 or abs(letter) > rank:
                raise ValueError(
                    f"letter {letter} outside the free group of rank {rank}"
                )
        self.genus = genus
        self.letters = free_reduce(letters)

    @classmethod
    def identity(cls, genus: int) -> "FreeWord":
        """the empty word"""
        return cls(genus, ())

    @classmethod
    def generator(cls, genus: int, index: int) -> "FreeWord":
        """the word of a single generator (1 based)"""
        return cls(genus, (index,))

    @classmethod
    def a(cls, genus: int, handle: int) -> "FreeWord":
        """the generator a_i"""
        return cls(genus, (generator_index("a", handle),))

    @classmethod
    def b(cls, genus: int, handle: int) -> "FreeWord":
        """the generator b_i"""
        return cls(genus, (generator_index("b", handle),))

    @classmethod
    def boundary(cls, genus: int, handles: int = None) -> "FreeWord":
        """The product of commutators [a_1, b_1] ... [a_h, b_h]

        With ``handles`` omitted this is the boundary word c.
        """
        handles = genus if handles is None else handles
        word = cls.identity(genus)
        for i in range(1, handles + 1):
            word = word * commutator(cls.a(genus, i), cls.b(genus, i))
        return word

    @classmethod
    def parse(cls, text: str, genus: int) -> "FreeWord":
        """Parse ``a1 b1 A1 B1`` (capitals are inverses, ``1`` or blank is empty)

        >>> str(FreeWord.parse("a1 b1 A1", 1))
        'a1 b1 A1'

        Raises:
            ParseError: on unknown tokens or generators beyond the genus
        """
        compact = re.sub(r"\s+", "", text)
        if compact in ("", "1", "e"):
            return cls.identity(genus)
        if _TOKEN.sub("", compact):
            raise ParseError(f"cannot parse word {text!r}")
        letters = []
        for kind, handle in _TOKEN.findall(compact):
            handle_index = int(handle)
            if not 1 <= handle_index <= genus:
                raise ParseError(f"generator {kind}{handle} outside genus {genus}")
            index = generator_index(kind, handle_index)
            letters.append(index if kind.islower() else -index)
        return cls(genus, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def is_identity(self) -> bool:
        """True for the empty word"""
        return not self.letters

    def _check(self, other: "FreeWord") -> None:
        if other.genus != self.genus:
            raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._check(other)
        return FreeWord(self.genus, self.letters + other.letters)

    def __invert__(self) -> "FreeWord":
        return FreeWord(self.genus, tuple(-x for x in reversed(self.letters)))

    def inverse(self) -> "FreeWord":
        """group inverse"""
        return ~self

    def __pow__(self, power: int) -> "FreeWord":
        if power < 0:
            return (~self) ** (-power)
        return FreeWord(self.genus, self.letters * power)

    def conjugate(self, other: "FreeWord") -> "FreeWord":
        """other * self * other^-1"""
        return other * self * ~other

    def exponent_sums(self) -> List[int]:
        """image in the abelianization Z^2g"""
        sums = [0] * (2 * self.genus)
        for letter in self.letters:
            sums[abs(letter) - 1] += 1 if letter > 0 else -1
        return sums

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.genus == other.genus and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.genus, self.letters))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(letter_name(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({self})"


def multiply(x: FreeWord, y: FreeWord) -> FreeWord:
    """reduced product x y"""
    return x * y


def invert(x: FreeWord) -> FreeWord:
    """reduced inverse"""
    return ~x


def commutator(x: FreeWord, y: FreeWord) -> FreeWord:
    """[x, y] = x y x^-1 y^-1

    >>> str(commutator(FreeWord.a(1, 1), FreeWord.b(1, 1)))
    'a1 b1 A1 B1'
    """
    return x * y * ~x * ~y


def reduce_word(genus: int, letters: Sequence[Letter]) -> FreeWord:
    """freely reduce an arbitrary letter sequence"""
    return FreeWord(genus, letters)
