"""Endomorphisms of the free group and the Dehn twist generators"""

import re
from typing import List, Optional, Sequence, Tuple

import sympy

from ..integral_linear.sparse_matrix import SparseIntMatrix
from .words import FreeWord, letter_name

_GENERATOR = re.compile(r"^(Ta|Tb|Tsep)(\d+)$|^(Td)$")


class FreeEndomorphism:
    """Endomorphism of the free group of rank 2g, given by generator images.

    ``images[k]`` is the image of the generator k + 1 (a_1, b_1, a_2, ...).
    An exact inverse can be attached when it is known in closed form.
    """

    def __init__(
        self,
        genus: int,
        images: Sequence[FreeWord],
        inverse: Optional["FreeEndomorphism"] = None,
    ):
        if len(images) != 2 * genus:
            raise ValueError(
                f"expected {2 * genus} generator images, got {len(images)}"
            )
        for image in images:
            if image.genus != genus:
                raise ValueError(f"image {image} is not a word of genus {genus}")
        self.genus = genus
        self.images: Tuple[FreeWord, ...] = tuple(images)
        self._inverse = inverse

    @classmethod
    def identity(cls, genus: int) -> "FreeEndomorphism":
        """the identity endomorphism"""
        images = [FreeWord.generator(genus, k) for k in range(1, 2 * genus + 1)]
        endo = cls(genus, images)
        endo._inverse = endo
        return endo

    @classmethod
    def from_dict(cls, genus: int, images: dict) -> "FreeEndomorphism":
        """Build from ``{generator index: word}``; missing generators are fixed"""
        full = [
            images.get(k, FreeWord.generator(genus, k))
            for k in range(1, 2 * genus + 1)
        ]
        return cls(genus, full)

    def __call__(self, word: FreeWord) -> FreeWord:
        letters: List[int] = []
        for letter in word.letters:
            image = self.images[abs(letter) - 1]
            if letter > 0:
                letters.extend(image.letters)
            else:
                letters.extend(-x for x in reversed(image.letters))
        return FreeWord(self.genus, letters)

    def image(self, index: int) -> FreeWord:
        """image of the generator ``index`` (1 based)"""
        return self.images[index - 1]

    def __mul__(self, other: "FreeEndomorphism") -> "FreeEndomorphism":
        """Composition: ``(f * g)(x) = f(g(x))``"""
        if other.genus != self.genus:
            raise ValueError(f"genus mismatch: {self.genus} vs {other.genus}")
        inverse = None
        if self._inverse is not None and other._inverse is not None:
            inverse = FreeEndomorphism(
                self.genus,
                [other._inverse(x) for x in self._inverse.images],
            )
        composite = FreeEndomorphism(
            self.genus, [self(image) for image in other.images], inverse
        )
        if inverse is not None:
            inverse._inverse = composite
        return composite

    def compose(self, other: "FreeEndomorphism") -> "FreeEndomorphism":
        """self o other"""
        return self * other

    @property
    def has_inverse(self) -> bool:
        """True if an exact inverse is attached"""
        return self._inverse is not None

    def inverse(self) -> "FreeEndomorphism":
        """Attached exact inverse

        Raises:
            ValueError: if no inverse is known
        """
        if self._inverse is None:
            raise ValueError("no inverse is known for this endomorphism")
        return self._inverse

    def __pow__(self, power: int) -> "FreeEndomorphism":
        base = self if power >= 0 else self.inverse()
        result = FreeEndomorphism.identity(self.genus)
        for _ in range(abs(power)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        """True if every generator is fixed"""
        return all(
            image.letters == (k + 1,) for k, image in enumerate(self.images)
        )

    def fixes_boundary(self) -> bool:
        """True if the boundary word c is sent to itself exactly"""
        boundary = FreeWord.boundary(self.genus)
        return self(boundary) == boundary

    def abelianization(self) -> SparseIntMatrix:
        """Action on Z^2g; column k holds the exponent sums of the k-th image"""
        entries = {}
        for col, image in enumerate(self.images):
            for row, value in enumerate(image.exponent_sums()):
                if value:
                    entries[(row, col)] = value
        return SparseIntMatrix(2 * self.genus, 2 * self.genus, entries)

    def abelianization_determinant(self) -> int:
        """exact determinant of the abelianization"""
        if self.genus == 0:
            return 1
        matrix = sympy.Matrix(self.abelianization().to_dense().tolist())
        return int(matrix.det())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeEndomorphism):
            return NotImplemented
        return self.genus == other.genus and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.genus, self.images))

    def __str__(self) -> str:
        return "endo: " + "; ".join(
            f"{letter_name(k + 1)} -> {image}" for k, image in enumerate(self.images)
        )

    def __repr__(self) -> str:
        return f"FreeEndomorphism({self})"


def _conjugation(genus: int, by: FreeWord, handles: int) -> FreeEndomorphism:
    """x -> by x by^-1 on the generators of the first ``handles`` handles"""
    images = []
    inverse_images = []
    for k in range(1, 2 * genus + 1):
        gen = FreeWord.generator(genus, k)
        if (k + 1) // 2 <= handles:
            images.append(gen.conjugate(by))
            inverse_images.append(gen.conjugate(~by))
        else:
            images.append(gen)
            inverse_images.append(gen)
    inverse = FreeEndomorphism(genus, inverse_images)
    endo = FreeEndomorphism(genus, images, inverse)
    inverse._inverse = endo
    return endo


def _replace_one(
    genus: int, index: int, image: FreeWord, inverse_image: FreeWord
) -> FreeEndomorphism:
    """endomorphism changing a single generator, with its inverse"""
    inverse = FreeEndomorphism.from_dict(genus, {index: inverse_image})
    endo = FreeEndomorphism.from_dict(genus, {index: image})
    endo._inverse = inverse
    inverse._inverse = endo
    return endo


def dehn_twist_generator(name: str, genus: int) -> FreeEndomorphism:
    """Action on the free group of one of the fixed twist generators

    * ``Ta<i>``: twist about the curve carrying a_i, b_i -> b_i a_i
    * ``Tb<i>``: twist about the curve carrying b_i, a_i -> a_i b_i^-1
    * ``Tsep<h>``: twist about the separating curve around the first h
      handles, conjugation of a_1, ..., b_h by [a_1, b_1] ... [a_h, b_h]
    * ``Td``: boundary twist, conjugation of every generator by c

    Each comes with its exact inverse and fixes c.

    Args:
        name (str): generator name
        genus (int): genus of the surface

    Raises:
        ValueError: for unknown names or handles outside the genus

    Returns:
        FreeEndomorphism: the automorphism

    >>> str(dehn_twist_generator("Ta1", 1))
    'endo: a1 -> a1; b1 -> b1 a1'
    """
    match = _GENERATOR.match(name)
    if match is None:
        raise ValueError(f"unknown twist generator {name!r}")
    if match.group(3) == "Td":
        return _conjugation(genus, FreeWord.boundary(genus), genus)

    kind, handle = match.group(1), int(match.group(2))
    if not 1 <= handle <= genus:
        raise ValueError(f"twist generator {name!r} outside genus {genus}")
    a_i, b_i = FreeWord.a(genus, handle), FreeWord.b(genus, handle)
    if kind == "Ta":
        return _replace_one(genus, 2 * handle, b_i * a_i, b_i * ~a_i)
    if kind == "Tb":
        return _replace_one(genus, 2 * handle - 1, a_i * ~b_i, a_i * b_i)
    return _conjugation(genus, FreeWord.boundary(genus, handle), handle)


def twist_generator_names(genus: int) -> List[str]:
    """names of every twist generator available in a given genus"""
    names = []
    for handle in range(1, genus + 1):
        names.extend([f"Ta{handle}", f"Tb{handle}"])
    names.extend(f"Tsep{h}" for h in range(1, genus + 1))
    if genus:
        names.append("Td")
    return names


class MappingClass:
    """Word in the twist generators together with its action on the free group.

    The word ``X Y`` acts as X o Y: Y is applied first. ``factors`` is None
    for a raw endomorphism entered directly.
    """

    def __init__(
        self,
        genus: int,
        factors: Optional[Sequence[Tuple[str, int]]] = None,
        endomorphism: Optional[FreeEndomorphism] = None,
    ):
        self.genus = genus
        if factors is None:
            if endomorphism is None:
                raise ValueError("either factors or an endomorphism is required")
            self.factors = None
            self.endomorphism = endomorphism
            return

        self.factors = tuple((name, power) for name, power in factors if power)
        endo = FreeEndomorphism.identity(genus)
        for name, power in self.factors:
            endo = endo * dehn_twist_generator(name, genus) ** power
        self.endomorphism = endo

    @classmethod
    def identity(cls, genus: int) -> "MappingClass":
        """the trivial class"""
        return cls(genus, factors=())

    @property
    def is_raw(self) -> bool:
        """True for a raw endomorphism input"""
        return self.factors is None

    def __mul__(self, other: "MappingClass") -> "MappingClass":
        if self.is_raw or other.is_raw:
            return MappingClass(
                self.genus, endomorphism=self.endomorphism * other.endomorphism
            )
        return MappingClass(self.genus, factors=self.factors + other.factors)

    def __pow__(self, power: int) -> "MappingClass":
        if self.is_raw:
            return MappingClass(self.genus, endomorphism=self.endomorphism**power)
        factors = self.factors
        if power < 0:
            factors = tuple((name, -p) for name, p in reversed(factors))
        return MappingClass(self.genus, factors=factors * abs(power))

    def normal_form(self) -> str:
        """Canonical text of the class, accepted back by the parser

        >>> MappingClass(2, [("Ta1", 1), ("Td", -2), ("Tb2", 0)]).normal_form()
        'Ta1 Td^-2'
        """
        if self.is_raw:
            return str(self.endomorphism)
        if not self.factors:
            return "1"
        return " ".join(
            name if power == 1 else f"{name}^{power}" for name, power in self.factors
        )

    def __str__(self) -> str:
        return self.normal_form()

    def __repr__(self) -> str:
        return f"MappingClass({self.normal_form()!r}, genus={self.genus})"

