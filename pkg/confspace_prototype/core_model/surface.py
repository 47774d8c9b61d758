"""Rectangle model of a genus g surface with one boundary component"""

from collections import namedtuple
from dataclasses import dataclass, field
from typing import List

from scipy.special import comb, factorial


BoundaryInterval = namedtuple(
    "BoundaryInterval", ["name", "handle", "arc", "orientation"]
)
BoundaryInterval.__doc__ = """One of the 4g intervals of the right edge.

Fields:
    name: ``I``, ``J``, ``I'`` or ``J'``
    handle: handle index i, 1 based
    arc: index of the arc the interval is glued to (U_i -> 2i-2, V_i -> 2i-1)
    orientation: +1 if the gluing map is increasing, -1 if it reverses order
"""


@dataclass(frozen=True)
class SurfaceParams:
    """Genus of the surface and the bookkeeping of its rectangle model.

    The surface is the rectangle [0, 2] x [0, 1] whose right edge is cut,
    bottom to top, into I_1, J_1, I'_1, J'_1, I_2, ... ; I_i is glued to I'_i
    and J_i to J'_i reversing the vertical order. The glued intervals are the
    arcs U_i (from I_i) and V_i (from J_i), which form a wedge of 2g circles at
    the basepoint p_0. The remaining three edges form the boundary circle.

    Arcs are indexed U_1, V_1, U_2, V_2, ... so that arc k carries the free
    generator k + 1 (a_1, b_1, a_2, b_2, ...).
    """

    genus: int
    boundary_subdivision: List[BoundaryInterval] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {self.genus}")
        intervals = []
        for handle in range(1, self.genus + 1):
            u_arc, v_arc = 2 * handle - 2, 2 * handle - 1
            intervals.extend(
                [
                    BoundaryInterval("I", handle, u_arc, 1),
                    BoundaryInterval("J", handle, v_arc, 1),
                    BoundaryInterval("I'", handle, u_arc, -1),
                    BoundaryInterval("J'", handle, v_arc, -1),
                ]
            )
        object.__setattr__(self, "boundary_subdivision", intervals)

    @property
    def arc_count(self) -> int:
        """number of arcs, 2g"""
        return 2 * self.genus

    @property
    def is_disc(self) -> bool:
        """True for the genus 0 model"""
        return self.genus == 0

    def arc_name(self, arc: int) -> str:
        """U_i or V_i for an arc index"""
        return f"{'UV'[arc % 2]}{arc // 2 + 1}"


def rising_factorial(base: int, length: int) -> int:
    """base (base + 1) ... (base + length - 1), with rising(0, k) = 0 for k >= 1

    >>> rising_factorial(2, 3)
    24
    >>> rising_factorial(0, 0)
    1
    """
    if length == 0:
        return 1
    if base == 0:
        return 0
    return int(
        factorial(base + length - 1, exact=True) // factorial(base - 1, exact=True)
    )


def column_cell_count(points: int) -> int:
    """number of pure column cells on m points, m! 2^(m-1) (1 for m = 0)

    >>> [column_cell_count(m) for m in range(5)]
    [1, 1, 4, 24, 192]
    """
    if points == 0:
        return 1
    return int(factorial(points, exact=True)) * 2 ** (points - 1)


def arc_cell_count(genus: int, points: int) -> int:
    """number of pure arc cells on k points, rising(2g, k)"""
    return rising_factorial(2 * genus, points)


def expected_cell_count(genus: int, points: int) -> int:
    """total number of cells for (g, n) by double counting

    >>> expected_cell_count(1, 2), expected_cell_count(2, 3)
    (14, 252)
    """
    return sum(
        int(comb(points, k, exact=True))
        * column_cell_count(points - k)
        * arc_cell_count(genus, k)
        for k in range(points + 1)
    )
