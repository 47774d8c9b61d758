"""Based simplicial maps from a subdivided wedge to the wedge"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..free_group.endomorphisms import FreeEndomorphism
from .one_complex import (
    OneComplexModel,
    arc_edge_name,
    subdivided_wedge,
    wedge_model,
)
from .product_complex import Component, ProductSimplex


@dataclass
class SimplicialSelfMap:
    """Simplicial map X' -> X sending every vertex to p_0.

    Attributes:
        domain (OneComplexModel): the subdivided wedge X'
        codomain (OneComplexModel): the wedge X
        loops (List[List[Tuple[str, int]]]): for every loop of X', its
            sub-edges in loop order with their orientation (+1 or -1)
        edge_map (Dict[str, Optional[str]]): image edge of each sub-edge,
            None when the sub-edge is collapsed to p_0
    """

    domain: OneComplexModel
    codomain: OneComplexModel
    loops: List[List[Tuple[str, int]]]
    edge_map: Dict[str, Optional[str]]

    def component_image(self, component: Component) -> Component:
        """image of one coordinate of a product simplex"""
        name, theta = component
        if self.domain.dimension_of(name) == 0:
            return self.codomain.basepoint, theta
        target = self.edge_map[name]
        if target is None:
            return self.codomain.basepoint, tuple(0 for _ in theta)
        return target, theta

    def simplex_image(self, simplex: ProductSimplex) -> ProductSimplex:
        """coordinatewise image"""
        return tuple(self.component_image(c) for c in simplex)

    def word_of_loop(self, arc: int) -> List[int]:
        """signed generators read along loop ``arc``, skipping collapsed edges"""
        letters = []
        for edge, sign in self.loops[arc]:
            target = self.edge_map[edge]
            if target is not None:
                letters.append(sign * int(target[1:]))
        return letters

    def is_identity(self) -> bool:
        """True if each loop is a single forward edge onto its own loop"""
        return all(
            len(loop) == 1
            and loop[0][1] == 1
            and self.edge_map[loop[0][0]] == arc_edge_name(arc)
            for arc, loop in enumerate(self.loops)
        )


def _loop_layout(endo: FreeEndomorphism) -> List[List[int]]:
    """Letters of every image word, plus 0 for an appended collapse sub-edge"""
    layout = []
    for image in endo.images:
        letters = list(image.letters)
        if not any(letter > 0 for letter in letters):
            letters.append(0)
        layout.append(letters)
    return layout


def endo_to_map(
    endo: FreeEndomorphism, model: Optional[OneComplexModel] = None
) -> SimplicialSelfMap:
    """Realize an endomorphism on a subdivided wedge

    Loop k of the domain gets one sub-edge per letter of the image of the
    k-th generator, oriented by the sign of the letter and mapped onto the
    loop of that letter. A loop whose image has no positive letter also gets
    a trailing forward sub-edge mapped to p_0, so that every loop has a
    forward sub-edge for the comparison collapse.

    Args:
        endo (FreeEndomorphism): the endomorphism
        model (Optional[OneComplexModel]): the wedge X, built if omitted

    Returns:
        SimplicialSelfMap: the map, inducing ``endo`` on the fundamental group
    """
    codomain = wedge_model(endo.genus) if model is None else model
    layout = _loop_layout(endo)
    domain = subdivided_wedge(
        [[1 if letter >= 0 else -1 for letter in letters] for letters in layout]
    )
    loops: List[List[Tuple[str, int]]] = []
    edge_map: Dict[str, Optional[str]] = {}
    for arc, letters in enumerate(layout):
        loop = []
        for i, letter in enumerate(letters):
            name = f"{arc_edge_name(arc)}.{i + 1}"
            sign = 1 if letter >= 0 else -1
            loop.append((name, sign))
            edge_map[name] = arc_edge_name(abs(letter) - 1) if letter else None
        loops.append(loop)
    return SimplicialSelfMap(domain, codomain, loops, edge_map)


def collapse_map(self_map: SimplicialSelfMap) -> SimplicialSelfMap:
    """Collapse X' -> X: the first forward sub-edge of each loop covers the loop"""
    edge_map: Dict[str, Optional[str]] = {}
    for arc, loop in enumerate(self_map.loops):
        first = next(edge for edge, sign in loop if sign > 0)
        for edge, _ in loop:
            edge_map[edge] = arc_edge_name(arc) if edge == first else None
    return SimplicialSelfMap(
        self_map.domain, self_map.codomain, self_map.loops, edge_map
    )
