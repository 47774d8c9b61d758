"""Free Lie algebra over the integers in the Lyndon basis

Letters are the generator indices 1 (A_1), 2 (B_1), 3 (A_2), ... ordered as
integers. A Lyndon word w has a standard bracketing P_w obtained by splitting
off its longest proper Lyndon suffix; expanded in the tensor algebra, P_w is w
plus lexicographically larger words of the same length. That triangularity
drives the conversion from tensors to Lyndon coordinates.
"""

from typing import Dict, Iterator, List, Tuple, Union

from .endomorphisms import dehn_twist_generator
from .magnus import magnus_expansion
from .words import FreeWord, letter_name

Word = Tuple[int, ...]
Bracket = Union[int, Tuple["Bracket", "Bracket"]]
Tensor = Dict[Word, int]


def is_lyndon(word: Word) -> bool:
    """True if the word is strictly smaller than each of its proper suffixes

    >>> is_lyndon((1, 2)), is_lyndon((2, 1)), is_lyndon((1, 1))
    (True, False, False)
    """
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def lyndon_words(alphabet_size: int, degree: int) -> Iterator[Word]:
    """Lyndon words of length at most ``degree`` in increasing order (Duval)

    >>> list(lyndon_words(2, 3))
    [(1,), (1, 1, 2), (1, 2), (1, 2, 2), (2,)]
    """
    if alphabet_size < 1 or degree < 1:
        return
    word = [1]
    while word:
        yield tuple(word)
        size = len(word)
        while len(word) < degree:
            word.append(word[len(word) - size])
        while word and word[-1] == alphabet_size:
            word.pop()
        if word:
            word[-1] += 1


def standard_bracketing(word: Word) -> Bracket:
    """Bracketing of a Lyndon word by its longest proper Lyndon suffix

    >>> standard_bracketing((1, 1, 2))
    (1, (1, 2))
    """
    if len(word) == 1:
        return word[0]
    for split in range(1, len(word)):
        if is_lyndon(word[split:]):
            left, right = word[:split], word[split:]
            return (standard_bracketing(left), standard_bracketing(right))
    raise ValueError(f"{word} is not a Lyndon word")


def _add_into(target: Tensor, source: Tensor, scale: int = 1) -> None:
    for key, value in source.items():
        total = target.get(key, 0) + scale * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)


def bracket_to_tensor(expr: Bracket) -> Tensor:
    """Expand nested brackets [x, y] = xy - yx in the tensor algebra"""
    if isinstance(expr, int):
        return {(expr,): 1}
    left, right = (bracket_to_tensor(part) for part in expr)
    out: Tensor = {}
    for lword, lcoeff in left.items():
        for rword, rcoeff in right.items():
            _add_into(out, {lword + rword: lcoeff * rcoeff})
            _add_into(out, {rword + lword: -lcoeff * rcoeff})
    return out


def bracket_to_str(expr: Bracket) -> str:
    """``[[A1,B1],A1]`` style text"""
    if isinstance(expr, int):
        return letter_name(expr).upper()
    return f"[{bracket_to_str(expr[0])},{bracket_to_str(expr[1])}]"


class LieElement:
    """Integer combination of standard Lyndon brackets"""

    def __init__(self, coeffs: Dict[Word, int] = None):
        self.coeffs: Dict[Word, int] = {}
        for word, coeff in (coeffs or {}).items():
            if not is_lyndon(word):
                raise ValueError(f"{word} is not a Lyndon word")
            if coeff:
                self.coeffs[tuple(word)] = coeff

    @classmethod
    def from_bracket(cls, expr: Bracket) -> "LieElement":
        """Lyndon coordinates of a nested bracket of letters"""
        return cls.from_tensor(bracket_to_tensor(expr))

    @classmethod
    def from_tensor(cls, tensor: Tensor) -> "LieElement":
        """Lyndon coordinates of a Lie element of the tensor algebra

        The smallest word of the remaining support is Lyndon and its
        coefficient is the coordinate of its standard bracket; that bracket is
        subtracted and the step repeats.

        Raises:
            ValueError: if the tensor is not a Lie element
        """
        remainder = {w: c for w, c in tensor.items() if c}
        coeffs: Dict[Word, int] = {}
        while remainder:
            word = min(remainder)
            if not is_lyndon(word):
                raise ValueError(
                    f"tensor is not a Lie element (leading word {word})"
                )
            coeff = remainder[word]
            coeffs[word] = coeff
            bracket = bracket_to_tensor(standard_bracketing(word))
            _add_into(remainder, bracket, -coeff)
        return cls(coeffs)

    def to_tensor(self) -> Tensor:
        """expansion in the tensor algebra"""
        out: Tensor = {}
        for word, coeff in self.coeffs.items():
            _add_into(out, bracket_to_tensor(standard_bracketing(word)), coeff)
        return out

    def degrees(self) -> List[int]:
        """degrees carrying a nonzero coordinate"""
        return sorted({len(w) for w in self.coeffs})

    def is_zero(self) -> bool:
        """True for the zero element"""
        return not self.coeffs

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.coeffs)
        _add_into(out, other.coeffs)
        return LieElement(out)

    def __neg__(self) -> "LieElement":
        return LieElement({w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __rmul__(self, scale: int) -> "LieElement":
        return LieElement({w: scale * c for w, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for word in sorted(self.coeffs, key=lambda w: (len(w), w)):
            coeff = self.coeffs[word]
            text = bracket_to_str(standard_bracketing(word))
            parts.append(text if coeff == 1 else f"{coeff}*{text}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LieElement({self})"


def boundary_twist_class(genus: int, power: int) -> LieElement:
    """Class of T_d^k(a_1) a_1^-1 in the degree 3 part of the free Lie algebra

    The boundary twist conjugates by c, so T_d^k(a_1) a_1^-1 = [c^k, a_1]
    lies in gamma_2 and its leading Magnus term is a Lie element of degree 3.

    Args:
        genus (int): genus, at least 1
        power (int): exponent k

    Returns:
        LieElement: the class, equal to k * sum_i [[A_i, B_i], A_1]
    """
    if genus < 1:
        raise ValueError(f"genus must be at least 1, got {genus}")
    twist = dehn_twist_generator("Td", genus) ** power
    a_1 = FreeWord.a(genus, 1)
    series = magnus_expansion(twist(a_1) * ~a_1, 3)
    return LieElement.from_tensor(series.degree_part(3))


def expected_boundary_twist_class(genus: int, power: int) -> LieElement:
    """k * ([[A_1, B_1], A_1] + ... + [[A_g, B_g], A_1]) from brackets"""
    total = LieElement()
    for handle in range(1, genus + 1):
        total = total + LieElement.from_bracket(((2 * handle - 1, 2 * handle), 1))
    return power * total
