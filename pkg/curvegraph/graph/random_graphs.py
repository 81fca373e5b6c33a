"""Seeded random graphs, embeddings and stars for checks and property suites."""

from typing import Dict, Optional

import networkx as nx
import numpy as np

from ..utils import errors
from ..utils.sphere import uniform_sphere
from .spatial_graph import CombinatorialGraph, SpatialGraph, VertexStar


def random_star(rng: np.random.Generator, degree: int, vertex: str = "q") -> VertexStar:
    """`degree` independent uniform unit tangents."""
    if degree < 1:
        raise errors.BadParameters(f"Degree should be >= 1, got {degree}")
    return VertexStar(uniform_sphere(rng, degree), vertex)


def random_trivalent(vertices: int, seed: int) -> CombinatorialGraph:
    """Random simple 3-regular graph on `vertices` (even, >= 4) vertices."""
    if vertices < 4 or vertices % 2:
        raise errors.BadParameters(f"Need an even number >= 4 of vertices, got {vertices}")
    graph = nx.random_regular_graph(3, vertices, seed=seed)
    return CombinatorialGraph.from_networkx(nx.relabel_nodes(graph, lambda i: f"v{i}"))


def random_multigraph(rng: np.random.Generator, vertices: int, edges: int) -> CombinatorialGraph:
    """Connected random multigraph: a random tree plus extra edges, loops allowed."""
    if vertices < 1 or edges < vertices - 1 or (vertices == 1 and edges < 1):
        raise errors.BadParameters(
            f"Cannot build a connected graph with {vertices} vertices and {edges} edges"
        )
    pairs = [(f"v{int(rng.integers(i))}", f"v{i}") for i in range(1, vertices)]
    for _ in range(edges - len(pairs)):
        u, v = rng.integers(vertices, size=2)
        pairs.append((f"v{u}", f"v{v}"))
    return CombinatorialGraph.from_pairs(pairs, vertices=[f"v{i}" for i in range(vertices)])


def random_embedding(
    graph: CombinatorialGraph,
    rng: np.random.Generator,
    joints: int = 1,
    pinned: Optional[Dict[str, np.ndarray]] = None,
    name: str = "",
) -> SpatialGraph:
    """Place vertices and joints uniformly in the cube [-1, 1]^3.

    Loops get at least two joints so that they bound a triangle. Vertices in
    `pinned` keep the given position. Random points are in general position
    with probability one.
    """
    pinned = pinned or {}
    positions = {
        q: np.asarray(pinned[q], dtype=float) if q in pinned else rng.uniform(-1, 1, 3)
        for q in graph.vertices
    }
    edges = []
    for eid, u, v in graph.edges:
        count = max(joints, 2) if u == v else joints
        edges.append((eid, u, v, rng.uniform(-1, 1, (count, 3))))
    return SpatialGraph.build(positions, edges, name=name)
