"""Great-circle arrangement of a vertex star.

The circles are {e : <e, T_i> = 0}. Each cell carries the integer value
sum_i chi_i(e), where chi_i(e) = +1 if <e, T_i> < 0 and -1 otherwise, and its
exact area by spherical excess.
"""

import dataclasses
import math
from typing import Dict, List, Tuple

import numpy as np

from .. import __config__ as cfg
from ..graph import VertexStar
from ..logger import logger
from ..utils.sphere import orthonormal_frame

TWO_PI = 2 * math.pi


@dataclasses.dataclass(frozen=True, eq=False)
class Circle:
    """Great circle with unit normal `normal`, carrying the tangents `members`."""

    normal: np.ndarray
    members: Tuple[int, ...]


@dataclasses.dataclass(frozen=True, eq=False)
class Cell:
    """Face of the arrangement.

    Attributes:
        value: sum of chi_i on the cell.
        area: steradians.
        interior: a point strictly inside the cell.
        boundary: cyclic list of (circle index, start vertex, end vertex);
            empty when the cell is a hemisphere bounded by a single circle.
    """

    value: int
    area: float
    interior: np.ndarray
    boundary: Tuple[Tuple[int, int, int], ...]


@dataclasses.dataclass(frozen=True, eq=False)
class SphericalArrangement:
    cells: Tuple[Cell, ...]
    circles: Tuple[Circle, ...]
    vertices: np.ndarray
    merged: bool

    @property
    def total_area(self) -> float:
        return math.fsum(cell.area for cell in self.cells)

    @property
    def values(self) -> List[int]:
        return [cell.value for cell in self.cells]


def chi_sum(tangents: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """Return sum_i chi_i(e) for each row of `directions`, as integers."""
    dots = np.atleast_2d(directions) @ tangents.T
    return np.sum(np.where(dots < 0, 1, -1), axis=1)


def build_arrangement(star: VertexStar) -> SphericalArrangement:
    """Build the arrangement of the d great circles orthogonal to the tangents.

    Circles with T_i = +-T_j are merged with multiplicity, and intersection
    points closer than `MERGE_TOL` are merged into one arrangement vertex.
    """
    tangents = star.tangents
    circles = _distinct_circles(tangents)
    merged = len(circles) < len(tangents)

    if len(circles) == 1:
        normal = circles[0].normal
        cells = tuple(
            Cell(
                value=int(chi_sum(tangents, sign * normal)[0]),
                area=TWO_PI,
                interior=sign * normal,
                boundary=(),
            )
            for sign in (1.0, -1.0)
        )
        return SphericalArrangement(cells, tuple(circles), np.zeros((0, 3)), merged)

    vertices, on_circle, concurrent = _intersection_vertices(circles)
    merged = merged or concurrent
    if merged:
        logger.info("Star at %r has merged circles or concurrent vertices", star.vertex)

    half_edges, arc_midpoints = _half_edges(circles, vertices, on_circle)
    cells = tuple(_trace_cells(tangents, circles, vertices, half_edges, arc_midpoints))

    total = math.fsum(cell.area for cell in cells)
    if abs(total - 2 * TWO_PI) > 1e-9:
        logger.warning(
            "Arrangement at %r: cell areas sum to %r instead of 4*pi", star.vertex, total
        )
    return SphericalArrangement(cells, tuple(circles), vertices, merged)


def _distinct_circles(tangents: np.ndarray) -> List[Circle]:
    circles: List[Tuple[np.ndarray, List[int]]] = []
    for index, tangent in enumerate(tangents):
        for normal, members in circles:
            if np.linalg.norm(np.cross(normal, tangent)) <= cfg.MERGE_TOL:
                members.append(index)
                break
        else:
            circles.append((tangent.copy(), [index]))
    return [Circle(normal, tuple(members)) for normal, members in circles]


def _intersection_vertices(circles: List[Circle]):
    """Return merged vertices, the vertex ids on each circle and a concurrency flag."""
    points: List[np.ndarray] = []
    incidence: List[set] = []
    concurrent = False
    for a in range(len(circles)):
        for b in range(a + 1, len(circles)):
            cross = np.cross(circles[a].normal, circles[b].normal)
            cross /= np.linalg.norm(cross)
            for point in (cross, -cross):
                for index, known in enumerate(points):
                    if np.linalg.norm(known - point) <= cfg.MERGE_TOL:
                        incidence[index].update((a, b))
                        concurrent = True
                        break
                else:
                    points.append(point)
                    incidence.append({a, b})
    on_circle: Dict[int, List[int]] = {c: [] for c in range(len(circles))}
    for index, members in enumerate(incidence):
        for c in members:
            on_circle[c].append(index)
    return np.array(points), on_circle, concurrent


def _half_edges(circles, vertices, on_circle):
    """Return outgoing half-edges per vertex and the midpoint of every arc.

    A half-edge is (tail, head, circle, forward, tangent at tail, arc id);
    forward means counter-clockwise about the circle normal.
    """
    outgoing: Dict[int, list] = {v: [] for v in range(len(vertices))}
    midpoints = []
    for c, circle in enumerate(circles):
        normal = circle.normal
        e1, e2 = orthonormal_frame(normal)
        ids = on_circle[c]
        angles = [math.atan2(vertices[v] @ e2, vertices[v] @ e1) % TWO_PI for v in ids]
        order = [v for _, v in sorted(zip(angles, ids))]
        sorted_angles = sorted(angles)
        for k, tail in enumerate(order):
            head = order[(k + 1) % len(order)]
            span = (sorted_angles[(k + 1) % len(order)] - sorted_angles[k]) % TWO_PI
            if span == 0.0:
                span = TWO_PI
            arc_id = len(midpoints)
            start = vertices[tail]
            midpoints.append(
                start * math.cos(span / 2) + np.cross(normal, start) * math.sin(span / 2)
            )
            outgoing[tail].append(
                (tail, head, c, True, np.cross(normal, vertices[tail]), arc_id)
            )
            outgoing[head].append(
                (head, tail, c, False, -np.cross(normal, vertices[head]), arc_id)
            )

    # sort counter-clockwise about the outward normal at each vertex
    for v, items in outgoing.items():
        e1, e2 = orthonormal_frame(vertices[v])
        items.sort(key=lambda item: math.atan2(item[4] @ e2, item[4] @ e1) % TWO_PI)
    return outgoing, midpoints


def _trace_cells(tangents, circles, vertices, outgoing, midpoints):
    position = {}
    for v, items in outgoing.items():
        for k, item in enumerate(items):
            position[(v, item[1], item[2], item[3])] = k

    def angle_at(v, item):
        e1, e2 = orthonormal_frame(vertices[v])
        return math.atan2(item[4] @ e2, item[4] @ e1)

    visited = set()
    for start_v, items in outgoing.items():
        for start in items:
            key = (start[0], start[1], start[2], start[3])
            if key in visited:
                continue
            cycle, angles = [], []
            half = start
            while True:
                hkey = (half[0], half[1], half[2], half[3])
                if hkey in visited:
                    break
                visited.add(hkey)
                cycle.append(half)
                head = half[1]
                twin_index = position[(head, half[0], half[2], not half[3])]
                around = outgoing[head]
                nxt = around[(twin_index - 1) % len(around)]
                interior = (angle_at(head, around[twin_index]) - angle_at(head, nxt)) % TWO_PI
                angles.append(interior)
                half = nxt

            area = math.fsum(angles) - (len(cycle) - 2) * math.pi
            interior_point = np.sum([midpoints[h[5]] for h in cycle], axis=0)
            interior_point /= np.linalg.norm(interior_point)
            yield Cell(
                value=_cell_value(tangents, circles, cycle, interior_point),
                area=area,
                interior=interior_point,
                boundary=tuple((h[2], h[0], h[1]) for h in cycle),
            )


def _cell_value(tangents, circles, cycle, interior_point) -> int:
    """Sum of chi_i on a cell; sides of bounding circles are read off exactly.

    The cell lies to the left of each boundary half-edge, which for a forward
    half-edge is the side <e, normal> > 0.
    """
    side = {h[2]: (1.0 if h[3] else -1.0) for h in cycle}
    total = 0
    for c, circle in enumerate(circles):
        for i in circle.members:
            if c in side:
                dot = side[c] * float(np.sign(tangents[i] @ circle.normal))
            else:
                dot = float(tangents[i] @ interior_point)
            total += 1 if dot < 0 else -1
    return total
