"""Vertex passages of a circuit: exterior angles, local extrema and nlm."""

import math
from typing import Dict, Iterator, NamedTuple

import numpy as np

from ..graph import HalfInt, SpatialGraph, as_direction
from ..projection import is_generic
from ..utils import errors
from .circuit import Circuit, Traversal, check_closed


class Passage(NamedTuple):
    """The circuit goes through `vertex`, arriving along `incoming` and leaving along `outgoing`.

    `incoming` and `outgoing` are unit tangents at the vertex pointing into the
    arrival and the departure edge.
    """

    vertex: str
    arrival: Traversal
    departure: Traversal
    incoming: np.ndarray
    outgoing: np.ndarray
    before: np.ndarray
    after: np.ndarray

    @property
    def exterior_angle(self) -> float:
        """pi minus the angle between the two tangents."""
        return float(np.arccos(np.clip(-self.incoming @ self.outgoing, -1.0, 1.0)))


def passages(graph: SpatialGraph, circuit: Circuit) -> Iterator[Passage]:
    """Yield every vertex passage of a closed circuit.

    Raises:
        NonClosedCircuit: if the circuit does not close up in `graph`.
    """
    check_closed(graph, circuit)
    for arrival, departure in circuit.passages():
        edge_in = graph.edge(arrival.edge_id)
        edge_out = graph.edge(departure.edge_id)
        q = edge_in.end_vertex(arrival.arrival_end)
        origin = graph.vertices[q]
        before = graph.first_point(edge_in, arrival.arrival_end)
        after = graph.first_point(edge_out, departure.start_end)
        incoming = (before - origin) / np.linalg.norm(before - origin)
        outgoing = (after - origin) / np.linalg.norm(after - origin)
        yield Passage(q, arrival, departure, incoming, outgoing, before, after)


def vertex_passage_curvature(graph: SpatialGraph, circuit: Circuit) -> Dict[str, float]:
    """Sum of passage exterior angles at every topological vertex."""
    parts: Dict[str, list] = {q: [] for q in graph.vertex_ids}
    for passage in passages(graph, circuit):
        parts[passage.vertex].append(passage.exterior_angle)
    return {q: math.fsum(angles) for q, angles in parts.items()}


def _passage_extremum(passage: Passage, e: np.ndarray, graph: SpatialGraph) -> int:
    """+1 for a local max of the height along the circuit, -1 for a min, else 0."""
    height = graph.vertices[passage.vertex] @ e
    below = int(passage.before @ e < height) + int(passage.after @ e < height)
    if below == 2:
        return 1
    if below == 0:
        return -1
    return 0


def _generic_direction(graph: SpatialGraph, e) -> np.ndarray:
    e = as_direction(e)
    check = is_generic(graph, e)
    if not check.generic:
        raise errors.NonGenericDirection(f"Direction {e.tolist()}: {check.witness}")
    return e


def nlm_from_circuit(graph: SpatialGraph, circuit: Circuit, e, q: str) -> HalfInt:
    """Return (lmax - lmin)/2 over the passages of a double-cover circuit through `q`.

    Raises:
        NonGenericDirection: if `e` is not generic.
        UnknownVertex: if `q` is not a vertex.
    """
    e = _generic_direction(graph, e)
    if q not in graph.vertices:
        raise errors.UnknownVertex(f"Vertex {q!r} is not in graph {graph.name!r}")
    doubled = sum(
        _passage_extremum(passage, e, graph)
        for passage in passages(graph, circuit)
        if passage.vertex == q
    )
    return HalfInt(doubled)


def circuit_local_maxima(graph: SpatialGraph, circuit: Circuit, e) -> int:
    """Number of local maxima of the height along the circuit.

    Passages through vertices count once each; a maximal joint counts once
    for every traversal of its edge.
    """
    e = _generic_direction(graph, e)
    count = sum(
        _passage_extremum(passage, e, graph) == 1 for passage in passages(graph, circuit)
    )
    for traversal in circuit.traversals:
        points = graph.edge_points(graph.edge(traversal.edge_id)) @ e
        interior = points[1:-1]
        count += int(np.count_nonzero((interior > points[:-2]) & (interior > points[2:])))
    return int(count)
