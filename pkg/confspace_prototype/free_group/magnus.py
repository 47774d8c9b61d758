"""Magnus expansion and the lower central series of the free group

The lower central series is indexed from zero: gamma_0 = F, gamma_{i+1} =
[F, gamma_i]. A word lies in gamma_i exactly when its Magnus expansion
has no nonconstant term of degree at most i.
"""

from typing import Dict, List, Optional, Tuple

from .endomorphisms import FreeEndomorphism
from .words import FreeWord, letter_name

Monomial = Tuple[int, ...]


class TruncatedMagnusSeries:
    """Noncommutative integer polynomial in A_1, B_1, ..., A_g, B_g.

    Terms of degree above ``degree`` are dropped. Monomials are tuples of
    generator indices (1 for A_1, 2 for B_1, ...), stored level by level.
    """

    def __init__(
        self, degree: int, levels: Optional[List[Dict[Monomial, int]]] = None
    ):
        if degree < 0:
            raise ValueError(f"truncation degree must be nonnegative, got {degree}")
        self.degree = degree
        self.levels: List[Dict[Monomial, int]] = [dict() for _ in range(degree + 1)]
        for level, terms in enumerate(levels or []):
            if level > degree:
                break
            for word, coeff in terms.items():
                if coeff:
                    self.levels[level][word] = coeff

    @classmethod
    def one(cls, degree: int) -> "TruncatedMagnusSeries":
        """the unit 1"""
        return cls(degree, [{(): 1}])

    @classmethod
    def from_terms(
        cls, degree: int, terms: Dict[Monomial, int]
    ) -> "TruncatedMagnusSeries":
        """Series from a flat ``{monomial: coefficient}`` dictionary"""
        levels: List[Dict[Monomial, int]] = [dict() for _ in range(degree + 1)]
        for word, coeff in terms.items():
            if len(word) <= degree and coeff:
                levels[len(word)][word] = levels[len(word)].get(word, 0) + coeff
        return cls(degree, levels)

    @classmethod
    def of_letter(cls, letter: int, degree: int) -> "TruncatedMagnusSeries":
        """Image of a signed letter

        x -> 1 + X and x^-1 -> 1 - X + X^2 - ... up to the truncation degree.
        """
        index = abs(letter)
        levels: List[Dict[Monomial, int]] = [{(): 1}]
        for power in range(1, degree + 1):
            if letter > 0 and power > 1:
                break
            sign = 1 if letter > 0 else (-1) ** power
            levels.append({(index,) * power: sign})
        return cls(degree, levels)

    def terms(self) -> Dict[Monomial, int]:
        """flat ``{monomial: coefficient}`` view"""
        return {word: c for level in self.levels for word, c in level.items()}

    def degree_part(self, level: int) -> Dict[Monomial, int]:
        """homogeneous part of a given degree"""
        if level > self.degree:
            raise ValueError(f"degree {level} is above the truncation {self.degree}")
        return dict(self.levels[level])

    def coefficient(self, word: Monomial) -> int:
        """coefficient of a monomial"""
        if len(word) > self.degree:
            return 0
        return self.levels[len(word)].get(tuple(word), 0)

    def lowest_degree(self) -> Optional[int]:
        """lowest degree >= 1 carrying a nonzero term, None if there is none"""
        for level in range(1, self.degree + 1):
            if self.levels[level]:
                return level
        return None

    def is_one(self) -> bool:
        """True if the series equals 1 up to the truncation"""
        return self.lowest_degree() is None and self.levels[0] == {(): 1}

    def truncated(self, degree: int) -> "TruncatedMagnusSeries":
        """drop the terms above a lower degree"""
        return TruncatedMagnusSeries(min(degree, self.degree), self.levels)

    def _check(self, other: "TruncatedMagnusSeries") -> int:
        return min(self.degree, other.degree)

    def __mul__(self, other: "TruncatedMagnusSeries") -> "TruncatedMagnusSeries":
        degree = self._check(other)
        out: List[Dict[Monomial, int]] = [dict() for _ in range(degree + 1)]
        for level in range(degree + 1):
            for left_level in range(level + 1):
                right_level = level - left_level
                for lword, lcoeff in self.levels[left_level].items():
                    for rword, rcoeff in other.levels[right_level].items():
                        word = lword + rword
                        out[level][word] = out[level].get(word, 0) + lcoeff * rcoeff
        return TruncatedMagnusSeries(degree, out)

    def __add__(self, other: "TruncatedMagnusSeries") -> "TruncatedMagnusSeries":
        degree = self._check(other)
        out = [dict(level) for level in self.levels[: degree + 1]]
        for level in range(degree + 1):
            for word, coeff in other.levels[level].items():
                out[level][word] = out[level].get(word, 0) + coeff
        return TruncatedMagnusSeries(degree, out)

    def __neg__(self) -> "TruncatedMagnusSeries":
        return TruncatedMagnusSeries(
            self.degree, [{w: -c for w, c in level.items()} for level in self.levels]
        )

    def __sub__(self, other: "TruncatedMagnusSeries") -> "TruncatedMagnusSeries":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedMagnusSeries):
            return NotImplemented
        return self.degree == other.degree and self.levels == other.levels

    def __repr__(self) -> str:
        return f"TruncatedMagnusSeries({self}, degree={self.degree})"

    def __str__(self) -> str:
        parts = []
        terms = self.terms()
        for word in sorted(terms, key=lambda w: (len(w), w)):
            coeff = terms[word]
            monomial = "".join(letter_name(x).upper() for x in word) or "1"
            if coeff == 1:
                parts.append(monomial)
            elif coeff == -1:
                parts.append("-" + monomial)
            else:
                parts.append(f"{coeff}*{monomial}" if word else str(coeff))
        return " + ".join(parts).replace("+ -", "- ") or "0"


def magnus_expansion(word: FreeWord, degree: int) -> TruncatedMagnusSeries:
    """Magnus expansion of a word truncated at a degree

    Args:
        word (FreeWord): the word
        degree (int): truncation degree, at least 1

    Raises:
        ValueError: if the degree is below 1

    Returns:
        TruncatedMagnusSeries: product of the letter images

    >>> str(magnus_expansion(FreeWord.parse("a1 b1 A1 B1", 1), 2))
    '1 + A1B1 - B1A1'
    """
    if degree < 1:
        raise ValueError(f"degree bound must be at least 1, got {degree}")
    series = TruncatedMagnusSeries.one(degree)
    for letter in word.letters:
        series = series * TruncatedMagnusSeries.of_letter(letter, degree)
    return series


def lcs_depth(word: FreeWord, degree: int) -> int:
    """Largest i <= degree with the word in the i-th lower central term

    Membership in gamma_i is read off the Magnus expansion: the lowest
    nonconstant degree must be at least i + 1.

    Args:
        word (FreeWord): the word
        degree (int): bound D

    Returns:
        int: the depth, D when the word lies in gamma_D

    >>> lcs_depth(FreeWord.parse("a1", 1), 4), lcs_depth(FreeWord.boundary(1), 4)
    (0, 1)
    """
    if degree < 1:
        raise ValueError(f"degree bound must be at least 1, got {degree}")
    lowest = magnus_expansion(word, degree + 1).lowest_degree()
    if lowest is None:
        return degree
    return min(lowest - 1, degree)


def johnson_depth(endo: FreeEndomorphism, degree: int) -> int:
    """Largest i <= degree such that the endomorphism acts trivially modulo gamma_i

    This is the minimum over the generators x of ``lcs_depth(endo(x) x^-1)``.

    Args:
        endo (FreeEndomorphism): the endomorphism
        degree (int): bound D

    Returns:
        int: the Johnson filtration stage, D for the identity
    """
    if degree < 1:
        raise ValueError(f"degree bound must be at least 1, got {degree}")
    depth = degree
    for index in range(1, 2 * endo.genus + 1):
        generator = FreeWord.generator(endo.genus, index)
        depth = min(depth, lcs_depth(endo(generator) * ~generator, degree))
        if depth == 0:
            break
    return depth
