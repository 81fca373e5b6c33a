"""Read and write spatial graphs as JSON documents.

Schema:
    {"name": str,
     "vertices": [{"id": str, "pos": [x, y, z]}],
     "edges": [{"id": str, "ends": [id, id], "polyline": [[x, y, z], ...]}]}

`polyline` lists the interior joints only. Canonical output sorts vertices
and edges by id, so load/save is byte-stable.
"""

import json
from typing import Any

from ..utils import errors
from ..utils.file_read import read_file, write_file
from .spatial_graph import SpatialGraph


def load_graph(text: str, /) -> SpatialGraph:
    """Parse and validate a graph document.

    Raises:
        SchemaViolation, DanglingEndpoint, LoopWithoutJoint, CoincidentPoints.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.SchemaViolation(f"Not a JSON document: {exc}") from exc
    return graph_from_dict(document)


def graph_from_dict(document: Any) -> SpatialGraph:
    if not isinstance(document, dict):
        raise errors.SchemaViolation("Graph document should be a JSON object")
    name = document.get("name", "")
    if not isinstance(name, str):
        raise errors.SchemaViolation("'name' should be a string")
    vertices_doc = _get_list(document, "vertices")
    edges_doc = _get_list(document, "edges")

    vertices = {}
    for item in vertices_doc:
        vid = _get_id(item, "vertex")
        if vid in vertices:
            raise errors.SchemaViolation(f"Duplicated vertex id {vid!r}")
        vertices[vid] = item.get("pos")

    edges = []
    for item in edges_doc:
        eid = _get_id(item, "edge")
        ends = item.get("ends")
        if (
            not isinstance(ends, list)
            or len(ends) != 2
            or not all(isinstance(end, str) for end in ends)
        ):
            raise errors.SchemaViolation(f"Edge {eid!r}: 'ends' should be two vertex ids")
        polyline = item.get("polyline", [])
        if not isinstance(polyline, list):
            raise errors.SchemaViolation(f"Edge {eid!r}: 'polyline' should be a list")
        edges.append((eid, ends[0], ends[1], polyline))

    return SpatialGraph.build(vertices, edges, name=name)


def graph_to_dict(graph: SpatialGraph) -> dict:
    return {
        "name": graph.name,
        "vertices": [
            {"id": q, "pos": [float(x) for x in graph.vertices[q]]}
            for q in graph.vertex_ids
        ],
        "edges": [
            {
                "id": edge.id,
                "ends": [edge.u, edge.v],
                "polyline": [[float(x) for x in p] for p in edge.joints],
            }
            for edge in sorted(graph.edges, key=lambda edge: edge.id)
        ],
    }


def save_graph(graph: SpatialGraph, /) -> str:
    """Return the canonical JSON text of `graph`."""
    return json.dumps(graph_to_dict(graph), indent=1) + "\n"


def read_graph(path: str, /) -> SpatialGraph:
    return load_graph(read_file(path))


def write_graph(path: str, graph: SpatialGraph, /) -> str:
    return write_file(path, save_graph(graph))


def _get_list(document: dict, key: str) -> list:
    value = document.get(key)
    if not isinstance(value, list):
        raise errors.SchemaViolation(f"'{key}' should be a list")
    return value


def _get_id(item: Any, what: str) -> str:
    if not isinstance(item, dict) or not isinstance(item.get("id"), str):
        raise errors.SchemaViolation(f"Every {what} should be an object with a string 'id'")
    return item["id"]
