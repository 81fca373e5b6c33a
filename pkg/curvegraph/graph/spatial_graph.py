"""SpatialGraph, CombinatorialGraph and VertexStar classes."""

import dataclasses
import functools
from collections import Counter
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

import networkx as nx
import numpy as np

from .. import __config__ as cfg
from ..utils import errors

EdgeEnd = Tuple["Edge", int]


def as_point(value, what: str = "point") -> np.ndarray:
    """Convert `value` to a finite float array of shape (3,)."""
    try:
        point = np.asarray(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise errors.SchemaViolation(f"{what} is not numeric: {value!r}") from exc
    if point.shape != (3,):
        raise errors.SchemaViolation(f"{what} should have 3 coordinates, got {value!r}")
    if not np.all(np.isfinite(point)):
        raise errors.SchemaViolation(f"{what} has non-finite coordinates: {value!r}")
    return point


def as_direction(value) -> np.ndarray:
    """Return the unit vector along `value`."""
    vec = as_point(value, "direction")
    norm = np.linalg.norm(vec)
    if norm <= cfg.SEPARATION_TOL:
        raise errors.BadParameters(f"Direction {value!r} has zero length")
    return vec / norm


@dataclasses.dataclass(frozen=True, eq=False)
class Edge:
    """Edge from `u` to `v` with interior polyline joints (array of shape (k, 3))."""

    id: str
    u: str
    v: str
    joints: np.ndarray

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def end_vertex(self, end: int) -> str:
        return self.u if end == 0 else self.v


@dataclasses.dataclass(frozen=True, eq=False)
class SpatialGraph:
    """Combinatorial multigraph with vertex positions and polyline edges.

    Validated on construction and immutable afterwards. Every mutation
    (subdivide, glue, shrink, ...) returns a new graph.
    """

    vertices: Mapping[str, np.ndarray]
    edges: Tuple[Edge, ...]
    name: str = ""

    def __post_init__(self):
        vertices = {str(k): as_point(p, f"vertex {k}") for k, p in self.vertices.items()}
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(self.edges))
        self._validate()

    @classmethod
    def build(
        cls,
        vertices: Mapping[str, object],
        edges: List[Tuple[str, str, str, list]],
        name: str = "",
    ) -> "SpatialGraph":
        """Build from plain data: `edges` is a list of (id, u, v, joints)."""
        return cls(
            vertices=dict(vertices),
            edges=tuple(
                Edge(
                    str(eid),
                    str(u),
                    str(v),
                    np.array([as_point(p, f"joint of edge {eid}") for p in joints]).reshape(
                        -1, 3
                    ),
                )
                for eid, u, v, joints in edges
            ),
            name=name,
        )

    def _validate(self):
        seen = set()
        for edge in self.edges:
            if edge.id in seen:
                raise errors.SchemaViolation(f"Duplicated edge id {edge.id!r}")
            seen.add(edge.id)
            for end in (edge.u, edge.v):
                if end not in self.vertices:
                    raise errors.DanglingEndpoint(
                        f"Edge {edge.id!r} refers to unknown vertex {end!r}"
                    )
            if edge.is_loop and len(edge.joints) == 0:
                raise errors.LoopWithoutJoint(
                    f"Loop {edge.id!r} at {edge.u!r} needs at least one interior joint"
                )
            steps = np.linalg.norm(np.diff(self.edge_points(edge), axis=0), axis=1)
            if np.any(steps <= cfg.SEPARATION_TOL):
                index = int(np.argmin(steps))
                raise errors.CoincidentPoints(
                    f"Edge {edge.id!r} has coincident consecutive points at segment {index}"
                )

    # Combinatorics

    @property
    def vertex_ids(self) -> List[str]:
        return sorted(self.vertices)

    @functools.cached_property
    def edge_by_id(self) -> Dict[str, Edge]:
        return {edge.id: edge for edge in self.edges}

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edge_by_id[edge_id]
        except KeyError as exc:
            raise errors.IndexOutOfRange(f"No edge with id {edge_id!r}") from exc

    def incident_ends(self, q: str) -> List[EdgeEnd]:
        """Return the (edge, end) pairs at `q`; a loop contributes both ends."""
        self._check_vertex(q)
        return [
            (edge, end)
            for edge in self.edges
            for end in (0, 1)
            if edge.end_vertex(end) == q
        ]

    def degree(self, q: str) -> int:
        return len(self.incident_ends(q))

    def degrees(self) -> Dict[str, int]:
        counts: Counter = Counter()
        for edge in self.edges:
            counts[edge.u] += 1
            counts[edge.v] += 1
        return {q: counts[q] for q in self.vertex_ids}

    def combinatorial(self) -> "CombinatorialGraph":
        return CombinatorialGraph(
            vertices=tuple(self.vertex_ids),
            edges=tuple((edge.id, edge.u, edge.v) for edge in self.edges),
        )

    def is_connected(self) -> bool:
        return self.combinatorial().is_connected()

    # Geometry

    def edge_points(self, edge: Edge) -> np.ndarray:
        """Return the full polyline u, joints..., v as an array of shape (k+2, 3)."""
        return np.vstack([self.vertices[edge.u], edge.joints, self.vertices[edge.v]])

    def first_point(self, edge: Edge, end: int) -> np.ndarray:
        """Return the polyline point next to the vertex at `end` of `edge`."""
        points = self.edge_points(edge)
        return points[1] if end == 0 else points[-2]

    @functools.cached_property
    def arrays(self) -> "PolylineArrays":
        return PolylineArrays(self)

    def transformed(self, func: Callable[[np.ndarray], np.ndarray], name: Optional[str] = None):
        """Apply `func` to every point (vertex and joint); combinatorics unchanged."""
        return SpatialGraph(
            vertices={q: func(p) for q, p in self.vertices.items()},
            edges=tuple(
                dataclasses.replace(
                    edge,
                    joints=np.array([func(p) for p in edge.joints]).reshape(-1, 3),
                )
                for edge in self.edges
            ),
            name=self.name if name is None else name,
        )

    def rotated(self, matrix: np.ndarray) -> "SpatialGraph":
        matrix = np.asarray(matrix, dtype=float)
        return self.transformed(lambda p: matrix @ p)

    def without_edge(self, edge_id: str) -> "SpatialGraph":
        """Remove an edge, keeping all vertices (removes the edge interior only)."""
        self.edge(edge_id)
        return SpatialGraph(
            vertices=self.vertices,
            edges=tuple(edge for edge in self.edges if edge.id != edge_id),
            name=self.name,
        )

    def _check_vertex(self, q: str):
        if q not in self.vertices:
            raise errors.UnknownVertex(f"Vertex {q!r} is not in graph {self.name!r}")

    def __repr__(self) -> str:
        return (
            f"SpatialGraph({self.name!r}, vertices={len(self.vertices)}, "
            f"edges={len(self.edges)})"
        )


class PolylineArrays:
    """Flat numpy view of a spatial graph used by the vectorised computations.

    Rows `0..n-1` of `points` are the topological vertices in sorted id order,
    the remaining rows are polyline joints.

    Attributes:
        points: (P, 3) positions.
        segments: (S, 2) point rows of every polyline segment.
        joints: (J, 3) rows (previous, joint, next) of every joint.
        end_vertex, end_neighbor: (2E,) for each edge end, the row of its
            topological vertex and the row of the next polyline point.
        vertex_ids: ids of rows `0..n-1`.
    """

    def __init__(self, graph: SpatialGraph):
        self.vertex_ids = graph.vertex_ids
        self.vertex_row = {q: i for i, q in enumerate(self.vertex_ids)}
        points = [graph.vertices[q] for q in self.vertex_ids]
        segments, joints, end_vertex, end_neighbor = [], [], [], []
        self.edge_rows: Dict[str, List[int]] = {}
        for edge in graph.edges:
            first = len(points)
            points.extend(edge.joints)
            rows = (
                [self.vertex_row[edge.u]]
                + list(range(first, first + len(edge.joints)))
                + [self.vertex_row[edge.v]]
            )
            self.edge_rows[edge.id] = rows
            segments.extend(zip(rows[:-1], rows[1:]))
            joints.extend(zip(rows[:-2], rows[1:-1], rows[2:]))
            end_vertex.extend((rows[0], rows[-1]))
            end_neighbor.extend((rows[1], rows[-2]))

        self.points = np.array(points, dtype=float).reshape(-1, 3)
        self.segments = np.array(segments, dtype=int).reshape(-1, 2)
        self.joints = np.array(joints, dtype=int).reshape(-1, 3)
        self.end_vertex = np.array(end_vertex, dtype=int)
        self.end_neighbor = np.array(end_neighbor, dtype=int)
        self.n_vertices = len(self.vertex_ids)


@dataclasses.dataclass(frozen=True)
class CombinatorialGraph:
    """Vertex ids and an edge multiset of (edge id, u, v); loops allowed."""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str, str], ...]

    def __post_init__(self):
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise errors.SchemaViolation("Duplicated vertex ids")
        ids = [eid for eid, _, _ in self.edges]
        if len(set(ids)) != len(ids):
            raise errors.SchemaViolation("Duplicated edge ids")
        for eid, u, v in self.edges:
            for end in (u, v):
                if end not in known:
                    raise errors.DanglingEndpoint(
                        f"Edge {eid!r} refers to unknown vertex {end!r}"
                    )
        for q, d in self.degrees().items():
            if d < 1:
                raise errors.SchemaViolation(f"Vertex {q!r} has no incident edge")

    @classmethod
    def from_pairs(cls, pairs, vertices=None) -> "CombinatorialGraph":
        """Build from (u, v) pairs; edges get ids 'e0', 'e1', ..."""
        pairs = [(str(u), str(v)) for u, v in pairs]
        if vertices is None:
            vertices = sorted({q for pair in pairs for q in pair})
        return cls(
            vertices=tuple(str(q) for q in vertices),
            edges=tuple((f"e{i}", u, v) for i, (u, v) in enumerate(pairs)),
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "CombinatorialGraph":
        return cls.from_pairs(
            [(u, v) for u, v in graph.edges()],
            vertices=sorted(str(q) for q in graph.nodes()),
        )

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for eid, u, v in self.edges:
            graph.add_edge(u, v, key=eid)
        return graph

    def degrees(self) -> Dict[str, int]:
        counts: Counter = Counter()
        for _, u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return {q: counts[q] for q in self.vertices}

    def degree(self, q: str) -> int:
        return self.degrees()[q]

    @property
    def loops(self) -> List[Tuple[str, str, str]]:
        return [edge for edge in self.edges if edge[1] == edge[2]]

    def odd_vertices(self) -> List[str]:
        return [q for q, d in self.degrees().items() if d % 2]

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_connected(self.to_networkx())

    def subdivide(self, edge_id: str, new_vertex: str) -> "CombinatorialGraph":
        """Insert a degree-2 vertex `new_vertex` inside edge `edge_id`."""
        if new_vertex in self.vertices:
            raise errors.BadParameters(f"Vertex {new_vertex!r} already exists")
        edges = []
        found = False
        for eid, u, v in self.edges:
            if eid == edge_id:
                edges.extend([(f"{eid}.0", u, new_vertex), (f"{eid}.1", new_vertex, v)])
                found = True
            else:
                edges.append((eid, u, v))
        if not found:
            raise errors.IndexOutOfRange(f"No edge with id {edge_id!r}")
        return CombinatorialGraph(self.vertices + (new_vertex,), tuple(edges))

    def relabeled(self, prefix: str) -> "CombinatorialGraph":
        return CombinatorialGraph(
            vertices=tuple(prefix + q for q in self.vertices),
            edges=tuple((prefix + eid, prefix + u, prefix + v) for eid, u, v in self.edges),
        )

    def identify(self, keep: str, drop: str) -> "CombinatorialGraph":
        """Merge vertex `drop` into `keep` (one-point union)."""
        if keep not in self.vertices or drop not in self.vertices:
            raise errors.UnknownVertex(f"Cannot identify {keep!r} and {drop!r}")
        rename = {drop: keep}
        return CombinatorialGraph(
            vertices=tuple(q for q in self.vertices if q != drop),
            edges=tuple(
                (eid, rename.get(u, u), rename.get(v, v)) for eid, u, v in self.edges
            ),
        )

    def __add__(self, other: "CombinatorialGraph") -> "CombinatorialGraph":
        return CombinatorialGraph(self.vertices + other.vertices, self.edges + other.edges)


@dataclasses.dataclass(frozen=True, eq=False)
class VertexStar:
    """Unit tangent vectors T_1..T_d at a vertex (multiplicity preserved)."""

    tangents: np.ndarray
    vertex: str = "q"

    def __post_init__(self):
        tangents = np.asarray(self.tangents, dtype=float).reshape(-1, 3)
        if len(tangents) < 1:
            raise errors.BadParameters("A vertex star needs at least one tangent")
        norms = np.linalg.norm(tangents, axis=1)
        if np.any(np.abs(norms - 1) > cfg.UNIT_TOL):
            raise errors.BadParameters(
                f"Tangents at {self.vertex!r} should be unit vectors, norms {norms}"
            )
        object.__setattr__(self, "tangents", tangents)

    @classmethod
    def from_vectors(cls, vectors, vertex: str = "q") -> "VertexStar":
        """Normalise arbitrary non-zero vectors into a star."""
        vectors = np.asarray(vectors, dtype=float).reshape(-1, 3)
        norms = np.linalg.norm(vectors, axis=1)
        if np.any(norms <= cfg.SEPARATION_TOL):
            raise errors.ZeroLengthSegment(f"Zero tangent vector at {vertex!r}")
        return cls(vectors / norms[:, None], vertex)

    @property
    def degree(self) -> int:
        return len(self.tangents)

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.tangents)

    def __len__(self) -> int:
        return self.degree


def tangent_star(graph: SpatialGraph, q: str) -> VertexStar:
    """Return the unit tangents at `q` pointing into each incident edge end.

    Raises:
        UnknownVertex: if `q` is not a vertex.
        ZeroLengthSegment: if a first segment has zero length.
    """
    ends = graph.incident_ends(q)
    if not ends:
        raise errors.ZeroLengthSegment(f"Vertex {q!r} has no incident edge")
    origin = graph.vertices[q]
    vectors = [graph.first_point(edge, end) - origin for edge, end in ends]
    return VertexStar.from_vectors(vectors, vertex=q)
