"""Whole-graph totals NTC, TC, CTC and VTC, circuit curvature and shrinking."""

import math
from typing import Dict, Iterable, Optional

import numpy as np

from .. import __config__ as cfg
from ..attrdict import AttrDict
from ..double_cover import Circuit, passages
from ..graph import SpatialGraph, as_direction, glue, tangent_star
from ..projection import nlm, perturb_direction
from ..utils import errors
from ..utils.random_utils import block_generator
from ..utils.sphere import uniform_sphere
from .vertex import ctc_vertex, ntc_vertex, tc_vertex, vtc_vertex

FUNCTIONALS = ("ntc", "tc", "ctc", "vtc")


class CurvatureReport(AttrDict):
    """Totals of a spatial graph.

    Keys: name, <functional>_total for each requested functional,
    joint_angle_sum, and with a breakdown `vertices` ({id: {degree, ntc, ...}}).
    The text form lists the breakdown first and ends with ntc_total when present.
    """

    def text(self) -> str:
        lines = []
        for q, values in self.get("vertices", {}).items():
            parts = "; ".join(f"{k} = {v:.9g}" for k, v in values.items() if k != "degree")
            lines.append(f"  {q} (degree {values['degree']}): {parts}")
        keys = ["joint_angle_sum__rad__.12g"]
        keys += [f"{name}_total__rad__.12g" for name in FUNCTIONALS[::-1] if f"{name}_total" in self]
        lines.append(self.output(keys, max_length=1))
        return "\n".join(lines)


def _joint_tangents(graph: SpatialGraph):
    """Unit tangents at every joint towards the previous and the next point."""
    arrays = graph.arrays
    before = arrays.points[arrays.joints[:, 0]] - arrays.points[arrays.joints[:, 1]]
    after = arrays.points[arrays.joints[:, 2]] - arrays.points[arrays.joints[:, 1]]
    before /= np.linalg.norm(before, axis=1)[:, None]
    after /= np.linalg.norm(after, axis=1)[:, None]
    return before, after


def joint_exterior_angles(graph: SpatialGraph) -> np.ndarray:
    """Exterior angle at every polyline joint, in PolylineArrays order."""
    before, after = _joint_tangents(graph)
    return np.arccos(np.clip(-np.sum(before * after, axis=1), -1.0, 1.0))


def joint_angle_sum(graph: SpatialGraph) -> float:
    return math.fsum(joint_exterior_angles(graph))


def _joint_vtc_sum(graph: SpatialGraph) -> float:
    before, after = _joint_tangents(graph)
    return math.fsum(np.linalg.norm(before + after, axis=1))


def _vertex_values(graph: SpatialGraph, functional: str) -> Dict[str, float]:
    func = {
        "ntc": ntc_vertex,
        "tc": lambda star: tc_vertex(star) if star.degree >= 2 else 0.0,
        "ctc": ctc_vertex,
        "vtc": vtc_vertex,
    }[functional]
    return {q: func(tangent_star(graph, q)) for q in graph.vertex_ids}


def _total(graph: SpatialGraph, functional: str) -> float:
    joints = _joint_vtc_sum(graph) if functional == "vtc" else joint_angle_sum(graph)
    return math.fsum(_vertex_values(graph, functional).values()) + joints


def ntc_total(graph: SpatialGraph) -> float:
    """NTC of a polygonal graph.

    Sum of ntc over the topological vertices plus the exterior angles at all
    polyline joints.
    """
    return _total(graph, "ntc")


def tc_total(graph: SpatialGraph) -> float:
    return _total(graph, "tc")


def ctc_total(graph: SpatialGraph) -> float:
    return _total(graph, "ctc")


def vtc_total(graph: SpatialGraph) -> float:
    """Sum of |T_1 + ... + T_d| over vertices and joints."""
    return _total(graph, "vtc")


def curvature_report(
    graph: SpatialGraph, functional: str = "ntc", breakdown: bool = False
) -> CurvatureReport:
    """Compute `functional` ('ntc', 'tc', 'ctc', 'vtc' or 'all') for `graph`."""
    if functional == "all":
        names = FUNCTIONALS
    elif functional in FUNCTIONALS:
        names = (functional,)
    else:
        raise errors.BadParameters(
            f"Unknown functional {functional!r}; use one of {FUNCTIONALS + ('all',)}"
        )
    report = CurvatureReport(name=graph.name, joint_angle_sum=joint_angle_sum(graph))
    per_vertex = {name: _vertex_values(graph, name) for name in names}
    for name in names:
        joints = _joint_vtc_sum(graph) if name == "vtc" else report.joint_angle_sum
        report[f"{name}_total"] = math.fsum(per_vertex[name].values()) + joints
    if breakdown:
        degrees = graph.degrees()
        report.vertices = {
            q: dict(degree=degrees[q], **{name: per_vertex[name][q] for name in names})
            for q in graph.vertex_ids
        }
    return report


def circuit_curvature(graph: SpatialGraph, circuit: Circuit) -> float:
    """Total curvature of a closed circuit of `graph`.

    Exterior angles at every vertex passage, between the arrival and the
    departure tangent, plus the joint angles of every traversed edge.

    Raises:
        NonClosedCircuit: if the circuit does not close up.
    """
    arrays = graph.arrays
    angles = joint_exterior_angles(graph)
    joint_rows = {int(row): k for k, row in enumerate(arrays.joints[:, 1])}
    terms = [passage.exterior_angle for passage in passages(graph, circuit)]
    for traversal in circuit.traversals:
        rows = arrays.edge_rows[traversal.edge_id][1:-1]
        terms.extend(angles[joint_rows[row]] for row in rows)
    return math.fsum(terms)


def cylindrical_shrink(graph: SpatialGraph, e, delta: float) -> SpatialGraph:
    """Map p to <e,p> e + delta (p - <e,p> e); combinatorics unchanged.

    Raises:
        BadParameters: unless 0 < delta <= 1.
    """
    if not 0 < delta <= 1:
        raise errors.BadParameters(f"Shrink factor should be in (0, 1], got {delta}")
    e = as_direction(e)

    def shrink(p):
        along = (p @ e) * e
        return along + delta * (p - along)

    return graph.transformed(shrink, name=f"{graph.name}~{delta:g}")


def subadditivity_defect(
    first: SpatialGraph,
    second: SpatialGraph,
    directions: Optional[Iterable] = None,
    samples: int = 32,
    seed: int = 0,
) -> AttrDict:
    """Compare NTC of a union with the sum of the NTC of its parts.

    The parts are glued at vertices with equal positions. The defect
    ntc(first) + ntc(second) - ntc(union) is >= 0; it is 0 when
    nlm_first(e, p) * nlm_second(e, p) >= 0 at every glue point p for almost
    every e. That criterion is tested on `directions` (or `samples` random ones).
    """
    union, glue_points = glue(first, second)
    parts = ntc_total(first) + ntc_total(second)
    whole = ntc_total(union)
    if directions is None:
        directions = uniform_sphere(block_generator(seed), samples)
    partners = {p: glue_vertex_in_second(first, second, p) for p in glue_points}
    same_sign = True
    for e in directions:
        e, _ = perturb_direction(union, e)
        for p, q in partners.items():
            if nlm(first, e, p).doubled * nlm(second, e, q).doubled < 0:
                same_sign = False
    return AttrDict(
        union=union.name,
        glue_points=glue_points,
        parts=parts,
        union_ntc=whole,
        defect=parts - whole,
        nlm_same_sign=same_sign,
        subadditive=whole <= parts + 1e-9,
    )


def glue_vertex_in_second(first: SpatialGraph, second: SpatialGraph, p: str) -> str:
    """Return the vertex of `second` glued onto vertex `p` of `first`."""
    position = first.vertices[p]
    for q in second.vertex_ids:
        if np.linalg.norm(second.vertices[q] - position) <= cfg.SEPARATION_TOL:
            return q
    raise errors.UnknownVertex(f"No vertex of {second.name!r} at the position of {p!r}")
