"""Delta complexes of dimension at most two on top of networkx

Vertices are graph nodes, edges are keyed multi-edges oriented from their
source (face 1) to their target (face 0). Triangles are stored as a graph
attribute mapping a name to the edge names of its faces (d_0, d_1, d_2).
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from numpy.testing import assert_

from ..core_model.surface import SurfaceParams

WEDGE = "wedge"
SURFACE = "surface"
SUBDIVIDED = "subdivided"

BASEPOINT = "p0"


def arc_edge_name(arc: int) -> str:
    """name of the loop or right-edge segment carrying arc ``arc`` (0 based)"""
    return f"x{arc + 1}"


class OneComplexModel:
    """Wedge of circles or triangulated surface, as a Delta complex.

    Attributes:
        graph (nx.MultiDiGraph): vertices and oriented edges, with graph
            attributes ``basepoint``, ``role``, ``triangles`` and ``marked``
    """

    def __init__(self, graph: nx.MultiDiGraph):
        self.graph = graph
        self._faces: Dict[str, Tuple[str, ...]] = {}
        self._dimension: Dict[str, int] = {}
        for vertex in graph.nodes:
            self._faces[vertex] = ()
            self._dimension[vertex] = 0
        for source, target, key in graph.edges(keys=True):
            if key in self._faces:
                raise ValueError(f"simplex name {key!r} used twice")
            self._faces[key] = (target, source)
            self._dimension[key] = 1
        for name, faces in self.triangles.items():
            if name in self._faces:
                raise ValueError(f"simplex name {name!r} used twice")
            self._faces[name] = tuple(faces)
            self._dimension[name] = 2
        self.check()

    @property
    def basepoint(self) -> str:
        """the base vertex p_0"""
        return self.graph.graph["basepoint"]

    @property
    def role(self) -> str:
        """``wedge``, ``subdivided`` or ``surface``"""
        return self.graph.graph["role"]

    @property
    def triangles(self) -> Dict[str, Tuple[str, str, str]]:
        """{triangle: (d_0, d_1, d_2) edge names}"""
        return self.graph.graph.get("triangles", {})

    @property
    def marked(self) -> frozenset:
        """names of the simplices of the marked subcomplex"""
        return frozenset(self.graph.graph.get("marked", {self.basepoint}))

    @property
    def dimension(self) -> int:
        """top dimension of a simplex"""
        return max(self._dimension.values(), default=-1)

    def faces(self, name: str) -> Tuple[str, ...]:
        """face names d_0, ..., d_m of a simplex"""
        return self._faces[name]

    def dimension_of(self, name: str) -> int:
        """dimension of a named simplex"""
        return self._dimension[name]

    def simplices(self, dimension: Optional[int] = None) -> List[str]:
        """simplex names, optionally of one dimension, in a fixed order"""
        return [
            name
            for name, dim in self._dimension.items()
            if dimension is None or dim == dimension
        ]

    def edge_endpoints(self, name: str) -> Tuple[str, str]:
        """(source, target) of an edge"""
        target, source = self._faces[name]
        return source, target

    def counts(self) -> List[int]:
        """number of simplices in each dimension"""
        return [len(self.simplices(d)) for d in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        """alternating count of simplices"""
        return sum((-1) ** d * c for d, c in enumerate(self.counts()))

    def check(self) -> None:
        """Simplicial identities d_i d_j = d_{j-1} d_i for i < j on triangles"""
        assert_(self.basepoint in self.graph.nodes, "basepoint is not a vertex")
        for name, faces in self.triangles.items():
            assert_(
                all(self._dimension.get(f) == 1 for f in faces),
                f"faces of {name} are not edges",
            )
            for i in range(3):
                for j in range(i + 1, 3):
                    assert_(
                        self._faces[faces[j]][i] == self._faces[faces[i]][j - 1],
                        f"triangle {name} violates d_{i} d_{j} = d_{j - 1} d_{i}",
                    )
        for name in self.marked:
            assert_(name in self._faces, f"marked simplex {name} is unknown")
            assert_(
                all(f in self.marked for f in self._faces[name]),
                f"marked set is not closed under faces at {name}",
            )


def _graph(role: str, vertices: Iterable[str]) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph(role=role, basepoint=BASEPOINT)
    graph.add_nodes_from(vertices)
    return graph


def wedge_model(genus: int) -> OneComplexModel:
    """Wedge of 2g circles at p_0, loop ``x<k>`` carrying generator k

    >>> wedge_model(2).counts()
    [1, 4]
    """
    graph = _graph(WEDGE, [BASEPOINT])
    for arc in range(2 * genus):
        graph.add_edge(BASEPOINT, BASEPOINT, key=arc_edge_name(arc))
    return OneComplexModel(graph)


def subdivided_wedge(loops: Sequence[Sequence[int]]) -> OneComplexModel:
    """Wedge with loop k cut into sub-edges of prescribed orientations

    Args:
        loops (Sequence[Sequence[int]]): for every loop, the orientation (+1
            along the loop, -1 against it) of each sub-edge in loop order

    Returns:
        OneComplexModel: sub-edge ``x<k>.<i>`` joins the i-th and (i+1)-th
            vertex of loop k, the end vertices being p_0
    """
    graph = _graph(SUBDIVIDED, [BASEPOINT])
    for arc, orientations in enumerate(loops):
        if not orientations:
            raise ValueError(f"loop {arc} needs at least one sub-edge")
        size = len(orientations)
        stops = (
            [BASEPOINT]
            + [f"q{arc + 1}.{i}" for i in range(1, size)]
            + [BASEPOINT]
        )
        graph.add_nodes_from(stops[1:-1])
        for i, sign in enumerate(orientations):
            start, end = stops[i], stops[i + 1]
            if sign < 0:
                start, end = end, start
            graph.add_edge(start, end, key=f"{arc_edge_name(arc)}.{i + 1}")
    return OneComplexModel(graph)


def surface_model(genus: int) -> OneComplexModel:
    """Triangulated rectangle model of the surface with its boundary marked

    For g >= 1 the rectangle is a polygon with corners w_0, ..., w_4g all
    identified with p_0: the sides w_j w_{j+1} (j < 4g) are the right edge
    segments I_1, J_1, I'_1, J'_1, ... glued to the arcs, and the side w_4g w_0
    is the boundary circle. The polygon is fanned from w_0; diagonals and the
    boundary edge point away from w_0. For g = 0 the model is a triangle with
    its whole boundary marked.

    >>> surface_model(1).counts()
    [1, 5, 3]
    """
    if genus == 0:
        graph = _graph(SURFACE, [BASEPOINT, "v1", "v2"])
        graph.add_edge(BASEPOINT, "v1", key="e01")
        graph.add_edge("v1", "v2", key="e12")
        graph.add_edge(BASEPOINT, "v2", key="e02")
        graph.graph["triangles"] = {"t": ("e12", "e02", "e01")}
        graph.graph["marked"] = {BASEPOINT, "v1", "v2", "e01", "e12", "e02"}
        return OneComplexModel(graph)

    params = SurfaceParams(genus)
    sides = params.boundary_subdivision
    graph = _graph(SURFACE, [BASEPOINT])
    for arc in range(params.arc_count):
        graph.add_edge(BASEPOINT, BASEPOINT, key=arc_edge_name(arc))
    corners = 4 * genus

    # edge from w_0 to w_j
    spokes = {1: arc_edge_name(sides[0].arc), corners: "boundary"}
    graph.add_edge(BASEPOINT, BASEPOINT, key="boundary")
    for j in range(2, corners):
        spokes[j] = f"d{j}"
        graph.add_edge(BASEPOINT, BASEPOINT, key=f"d{j}")

    triangles = {}
    for j in range(1, corners):
        side = sides[j]
        if side.orientation > 0:
            # vertices (w_0, w_j, w_{j+1})
            faces = (arc_edge_name(side.arc), spokes[j + 1], spokes[j])
        else:
            # vertices (w_0, w_{j+1}, w_j)
            faces = (arc_edge_name(side.arc), spokes[j], spokes[j + 1])
        triangles[f"t{j}"] = faces
    graph.graph["triangles"] = triangles
    graph.graph["marked"] = {BASEPOINT, "boundary"}
    return OneComplexModel(graph)
