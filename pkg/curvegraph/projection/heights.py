"""Directional combinatorics of a polygonal graph: genericity, d+/d-, nlm and mu."""

import weakref
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from .. import __config__ as cfg
from ..graph import HalfInt, SpatialGraph, as_direction, save_graph
from ..logger import logger
from ..utils import errors
from ..utils.random_utils import block_generator, text_seed
from ..utils.sphere import rotation_about

DIRECTION_CHUNK = 4096

_graph_seeds: "weakref.WeakKeyDictionary[SpatialGraph, int]" = weakref.WeakKeyDictionary()


class Genericity(NamedTuple):
    """Result of `is_generic`; `witness` names the first violation found."""

    generic: bool
    witness: Optional[str] = None


class CriticalPoint(NamedTuple):
    name: str
    kind: str  # "vertex" or "joint"
    row: int
    height: float
    d_up: int
    d_down: int

    @property
    def nlm(self) -> HalfInt:
        return HalfInt(self.d_down - self.d_up)


def graph_seed(graph: SpatialGraph) -> int:
    """Seed derived from the canonical JSON of `graph`."""
    if graph not in _graph_seeds:
        _graph_seeds[graph] = text_seed(save_graph(graph))
    return _graph_seeds[graph]


def joint_names(graph: SpatialGraph) -> dict:
    """Map point rows of polyline joints to names '<edge id>#<joint index>'."""
    names = {}
    for edge_id, rows in graph.arrays.edge_rows.items():
        for k, row in enumerate(rows[1:-1]):
            names[row] = f"{edge_id}#{k}"
    return names


def _segment_violation(graph: SpatialGraph, e: np.ndarray) -> Optional[str]:
    arrays = graph.arrays
    vectors = arrays.points[arrays.segments[:, 1]] - arrays.points[arrays.segments[:, 0]]
    derivative = np.abs(vectors @ e)
    flat = derivative <= cfg.DERIVATIVE_TOL * np.linalg.norm(vectors, axis=1)
    if not np.any(flat):
        return None
    a, b = arrays.segments[int(np.argmax(flat))]
    names = {**joint_names(graph), **dict(enumerate(arrays.vertex_ids))}
    return f"segment {names[a]}-{names[b]} is orthogonal to the direction"


def _joint_signs(graph: SpatialGraph, heights: np.ndarray) -> np.ndarray:
    """Return d- minus d+ at every joint (+2 local max, -2 local min, 0 otherwise)."""
    joints = graph.arrays.joints
    return -(
        np.sign(heights[joints[:, 0]] - heights[joints[:, 1]])
        + np.sign(heights[joints[:, 2]] - heights[joints[:, 1]])
    ).astype(int)


def critical_points(graph: SpatialGraph, e) -> List[CriticalPoint]:
    """Topological vertices and extremal joints, ordered by height.

    Does not check genericity; zero derivatives count as neither up nor down.
    """
    e = as_direction(e)
    arrays = graph.arrays
    heights = arrays.points @ e
    points = []
    for q in arrays.vertex_ids:
        row = arrays.vertex_row[q]
        d_up = d_down = 0
        for edge, end in graph.incident_ends(q):
            delta = graph.first_point(edge, end) @ e - heights[row]
            d_up += int(delta > 0)
            d_down += int(delta < 0)
        points.append(CriticalPoint(q, "vertex", row, float(heights[row]), d_up, d_down))
    names = joint_names(graph)
    for (_, row, _), doubled in zip(arrays.joints, _joint_signs(graph, heights)):
        if doubled:
            d_down = 2 if doubled > 0 else 0
            points.append(
                CriticalPoint(names[row], "joint", int(row), float(heights[row]), 2 - d_down, d_down)
            )
    return sorted(points, key=lambda point: (point.height, point.name))


def is_generic(graph: SpatialGraph, e) -> Genericity:
    """Check that no segment is orthogonal to `e` and critical heights are distinct."""
    e = as_direction(e)
    witness = _segment_violation(graph, e)
    if witness is not None:
        return Genericity(False, witness)
    points = critical_points(graph, e)
    for lower, upper in zip(points, points[1:]):
        if upper.height - lower.height <= cfg.SEPARATION_TOL:
            return Genericity(
                False, f"critical points {lower.name} and {upper.name} share a height"
            )
    return Genericity(True)


def perturb_direction(graph: SpatialGraph, e) -> Tuple[np.ndarray, int]:
    """Return a generic direction close to `e` and the number of rotations used.

    The k-th retry rotates `e` by `PERTURB_ANGLE` about the k-th axis drawn
    from a generator seeded by the graph, so the outcome is reproducible.

    Raises:
        NonGenericDirection: if every retry is still non-generic.
    """
    e = as_direction(e)
    check = is_generic(graph, e)
    if check.generic:
        return e, 0
    rng = block_generator(graph_seed(graph))
    for attempt in range(1, cfg.PERTURB_RETRIES + 1):
        axis = rng.standard_normal(3)
        candidate = rotation_about(axis, cfg.PERTURB_ANGLE) @ e
        candidate /= np.linalg.norm(candidate)
        logger.debug("Direction %s non-generic (%s), retry %d", e, check.witness, attempt)
        check = is_generic(graph, candidate)
        if check.generic:
            return candidate, attempt
    raise errors.NonGenericDirection(
        f"Direction {e.tolist()} stays non-generic after {cfg.PERTURB_RETRIES} "
        f"perturbations: {check.witness}"
    )


def _require_generic(graph: SpatialGraph, e: np.ndarray):
    check = is_generic(graph, e)
    if not check.generic:
        raise errors.NonGenericDirection(f"Direction {e.tolist()}: {check.witness}")


def updown_degrees(graph: SpatialGraph, e, q: str) -> Tuple[int, int]:
    """Return (d+, d-) at vertex `q` from the first segment of every incident edge end.

    Raises:
        UnknownVertex: if `q` is not a topological vertex.
        NonGenericDirection: if an incident first segment is orthogonal to `e`.
    """
    e = as_direction(e)
    ends = graph.incident_ends(q)
    origin = graph.vertices[q]
    d_up = d_down = 0
    for edge, end in ends:
        vector = graph.first_point(edge, end) - origin
        delta = float(vector @ e)
        if abs(delta) <= cfg.DERIVATIVE_TOL * np.linalg.norm(vector):
            raise errors.NonGenericDirection(
                f"Edge {edge.id!r} leaves {q!r} orthogonally to the direction"
            )
        if delta > 0:
            d_up += 1
        else:
            d_down += 1
    return d_up, d_down


def nlm(graph: SpatialGraph, e, q: str) -> HalfInt:
    """Net local maxima at `q`: (d- - d+)/2."""
    d_up, d_down = updown_degrees(graph, e, q)
    return HalfInt(d_down - d_up)


def nlm_profile(graph: SpatialGraph, e) -> List[Tuple[CriticalPoint, HalfInt]]:
    e = as_direction(e)
    _require_generic(graph, e)
    return [(point, point.nlm) for point in critical_points(graph, e)]


def mu(graph: SpatialGraph, e) -> HalfInt:
    """Multiplicity at `e`: sum of nlm+ over vertices and extremal joints.

    Raises:
        NonGenericDirection: perturb first with `perturb_direction`.
    """
    return sum((value.positive() for _, value in nlm_profile(graph, e)), HalfInt(0))


def mu_many(graph: SpatialGraph, directions: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised mu over a batch of unit directions.

    Returns:
        (mu_doubled, generic): integer array 2*mu(e) and the genericity flag
        of every direction. Values at non-generic rows are not meaningful.
    """
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    mu_doubled = np.zeros(len(directions), dtype=np.int64)
    generic = np.zeros(len(directions), dtype=bool)
    for start in range(0, len(directions), DIRECTION_CHUNK):
        chunk = slice(start, start + DIRECTION_CHUNK)
        mu_doubled[chunk], generic[chunk] = _mu_chunk(graph, directions[chunk])
    return mu_doubled, generic


def _mu_chunk(graph: SpatialGraph, directions: np.ndarray):
    arrays = graph.arrays
    heights = arrays.points @ directions.T  # (points, directions)

    vectors = arrays.points[arrays.segments[:, 1]] - arrays.points[arrays.segments[:, 0]]
    derivative = np.abs(vectors @ directions.T)
    generic = np.all(
        derivative > cfg.DERIVATIVE_TOL * np.linalg.norm(vectors, axis=1)[:, None], axis=0
    )

    ends = np.sign(heights[arrays.end_neighbor] - heights[arrays.end_vertex])
    vertex_doubled = np.zeros((arrays.n_vertices, len(directions)), dtype=np.int64)
    np.add.at(vertex_doubled, arrays.end_vertex, -ends.astype(np.int64))

    joints = arrays.joints
    joint_doubled = -(
        np.sign(heights[joints[:, 0]] - heights[joints[:, 1]])
        + np.sign(heights[joints[:, 2]] - heights[joints[:, 1]])
    ).astype(np.int64)

    mu_doubled = np.maximum(vertex_doubled, 0).sum(axis=0) + np.maximum(
        joint_doubled, 0
    ).sum(axis=0)

    critical_heights = np.vstack(
        [heights[: arrays.n_vertices], np.where(joint_doubled != 0, heights[joints[:, 1]], np.nan)]
    )
    ordered = np.sort(critical_heights, axis=0)
    gaps = np.diff(ordered, axis=0)
    separated = np.all(np.isnan(gaps) | (gaps > cfg.SEPARATION_TOL), axis=0)
    return mu_doubled, generic & separated
