"""Refinement of spatial graphs: subdivision, inscribed polygons and unions."""

import dataclasses
from typing import Callable, List, Tuple

import numpy as np

from .. import __config__ as cfg
from ..utils import errors
from .spatial_graph import Edge, SpatialGraph


def subdivide(graph: SpatialGraph, edge_id: str, joint_index: int) -> SpatialGraph:
    """Promote joint `joint_index` of edge `edge_id` to a degree-2 vertex.

    The geometric image and all vertex positions are unchanged; the edge is
    split into `<edge_id>.0` and `<edge_id>.1`.

    Raises:
        IndexOutOfRange: if the edge or the joint does not exist.
    """
    edge = graph.edge(edge_id)
    if not 0 <= joint_index < len(edge.joints):
        raise errors.IndexOutOfRange(
            f"Edge {edge_id!r} has {len(edge.joints)} joints, got index {joint_index}"
        )
    new_vertex = _fresh_id(f"{edge_id}@{joint_index}", graph.vertices)
    first = Edge(
        _fresh_id(f"{edge_id}.0", graph.edge_by_id),
        edge.u,
        new_vertex,
        edge.joints[:joint_index],
    )
    second = Edge(
        _fresh_id(f"{edge_id}.1", graph.edge_by_id),
        new_vertex,
        edge.v,
        edge.joints[joint_index + 1 :],
    )
    edges = []
    for other in graph.edges:
        edges.extend([first, second] if other.id == edge_id else [other])
    vertices = dict(graph.vertices)
    vertices[new_vertex] = edge.joints[joint_index]
    return SpatialGraph(vertices=vertices, edges=tuple(edges), name=graph.name)


def refine_segment(graph: SpatialGraph, edge_id: str, segment: int, point) -> SpatialGraph:
    """Insert `point` as a new joint inside segment `segment` of edge `edge_id`.

    Both polygons are inscribed in any curve through all their points, so
    the result is a refinement of `graph`.

    Raises:
        IndexOutOfRange: if the edge or the segment does not exist.
        CoincidentPoints: if `point` coincides with an end of the segment.
    """
    edge = graph.edge(edge_id)
    if not 0 <= segment <= len(edge.joints):
        raise errors.IndexOutOfRange(
            f"Edge {edge_id!r} has {len(edge.joints) + 1} segments, got index {segment}"
        )
    joints = np.insert(edge.joints, segment, np.asarray(point, dtype=float), axis=0)
    edges = tuple(
        Edge(edge.id, edge.u, edge.v, joints) if other.id == edge_id else other
        for other in graph.edges
    )
    return SpatialGraph(vertices=dict(graph.vertices), edges=edges, name=graph.name)


@dataclasses.dataclass(frozen=True)
class ParametricArc:
    """Arc t -> func(t) for t in [t_start, t_end].

    `func` takes an array of parameters of shape (n,) and returns points of
    shape (n, 3). A closed arc has func(t_start) == func(t_end).
    """

    func: Callable[[np.ndarray], np.ndarray]
    t_start: float
    t_end: float
    closed: bool = False
    name: str = "arc"

    def sample(self, n: int) -> np.ndarray:
        t = np.linspace(self.t_start, self.t_end, n, endpoint=not self.closed)
        return np.asarray(self.func(t), dtype=float).reshape(n, 3)


def inscribe(arc: ParametricArc, n: int) -> SpatialGraph:
    """Return the polygon through `n` samples equally spaced in parameter.

    An open arc gives vertices `start` and `end` joined by one edge; a closed
    arc gives one vertex `v0` with a loop through the other samples.

    Raises:
        BadParameters: if there are too few samples.
        CoincidentPoints: if two consecutive samples coincide.
    """
    if n < 2 or (arc.closed and n < 3):
        raise errors.BadParameters(f"Need at least {3 if arc.closed else 2} samples, got {n}")
    if not arc.t_start < arc.t_end:
        raise errors.BadParameters("Samples should be strictly ordered in parameter")
    points = arc.sample(n)
    if arc.closed:
        return SpatialGraph.build(
            {"v0": points[0]}, [("loop", "v0", "v0", points[1:])], name=arc.name
        )
    return SpatialGraph.build(
        {"start": points[0], "end": points[-1]},
        [("arc", "start", "end", points[1:-1])],
        name=arc.name,
    )


def circle_arc(radius: float = 1.0, center=(0.0, 0.0, 0.0)) -> ParametricArc:
    """Closed circle of `radius` in the plane z = center_z, starting at angle 0."""
    if radius <= 0:
        raise errors.BadParameters(f"Radius should be positive, got {radius}")
    center = np.asarray(center, dtype=float)

    def func(t):
        return center + radius * np.stack([np.cos(t), np.sin(t), np.zeros_like(t)], axis=1)

    return ParametricArc(func, 0.0, 2 * np.pi, closed=True, name="circle")


def wild_height(x):
    """h(x) = -(x/pi) sin(pi/x), with zeros at x = 1/n."""
    x = np.asarray(x, dtype=float)
    return -(x / np.pi) * np.sin(np.pi / x)


def wild_curve_arc(first_zero: int, arches: int) -> ParametricArc:
    """Graph of h over [1/(first_zero + arches), 1/first_zero].

    The parameter is t = 1/x, so each unit of t covers exactly one arch
    (the piece between consecutive zeros) and samples are spread evenly
    over arches.
    """
    if first_zero < 1 or arches < 1:
        raise errors.BadParameters(
            f"first_zero and arches should be >= 1, got {first_zero}, {arches}"
        )

    def func(t):
        x = 1.0 / t
        return np.stack([x, wild_height(x), np.zeros_like(x)], axis=1)

    return ParametricArc(
        func, float(first_zero), float(first_zero + arches), name=f"wild_{arches}"
    )


def glue(
    first: SpatialGraph, second: SpatialGraph, prefix: str = "b."
) -> Tuple[SpatialGraph, List[str]]:
    """Union of two graphs, identifying vertices at equal positions.

    Vertices of `second` within the separation tolerance of a vertex of
    `first` are merged into it. Other ids of `second` get `prefix` when they
    clash with ids of `first`.

    Returns:
        The union and the ids of the glue vertices.
    """
    rename = {}
    glued = []
    for q in second.vertex_ids:
        position = second.vertices[q]
        match = [
            p
            for p in first.vertex_ids
            if np.linalg.norm(first.vertices[p] - position) <= cfg.SEPARATION_TOL
        ]
        if match:
            rename[q] = match[0]
            glued.append(match[0])
        else:
            rename[q] = _fresh_id(q, first.vertices, prefix)

    vertices = dict(first.vertices)
    for q in second.vertex_ids:
        vertices.setdefault(rename[q], second.vertices[q])
    edges = list(first.edges)
    taken = set(first.edge_by_id)
    for edge in second.edges:
        new_id = _fresh_id(edge.id, taken, prefix)
        taken.add(new_id)
        edges.append(Edge(new_id, rename[edge.u], rename[edge.v], edge.joints))
    name = f"{first.name}+{second.name}"
    return SpatialGraph(vertices=vertices, edges=tuple(edges), name=name), sorted(set(glued))


def _fresh_id(base: str, taken, prefix: str = "") -> str:
    if base not in taken:
        return base
    candidate = prefix + base
    index = 1
    while candidate in taken:
        candidate = f"{prefix}{base}~{index}"
        index += 1
    return candidate
