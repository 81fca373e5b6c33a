# pylint: disable=W0611
"""Utils for testing."""

import logging
import math
import os

import numpy as np
from dh5.path import Path

from curvegraph.graph import SpatialGraph, VertexStar

TEST_DIR = Path(os.path.dirname(__file__))
DATA_DIR = Path(os.path.join(TEST_DIR, "tmp_test_data"))

logging.basicConfig(level=logging.WARNING, force=True)
logging.getLogger().setLevel(logging.WARNING)


def square(side: float = 1.0, name: str = "square") -> SpatialGraph:
    """Planar square as a loop at one vertex with three joints."""
    return SpatialGraph.build(
        {"v0": [0, 0, 0]},
        [("loop", "v0", "v0", [[side, 0, 0], [side, side, 0], [0, side, 0]])],
        name=name,
    )


def planar_theta(name: str = "theta") -> SpatialGraph:
    """Theta graph in the plane z = 0 with two bent edges and a straight one."""
    return SpatialGraph.build(
        {"q-": [0, -1, 0], "q+": [0, 1, 0]},
        [
            ("e0", "q-", "q+", [[-1, 0, 0]]),
            ("e1", "q-", "q+", []),
            ("e2", "q-", "q+", [[1, 0, 0]]),
        ],
        name=name,
    )


def tripod(angle: float = 2 * math.pi / 3) -> VertexStar:
    """Three coplanar unit tangents; the first two are `angle` apart."""
    return VertexStar.from_vectors(
        [
            [1, 0, 0],
            [math.cos(angle), math.sin(angle), 0],
            [math.cos(angle), -math.sin(angle), 0],
        ]
    )


def unit(*vector) -> np.ndarray:
    vector = np.asarray(vector, dtype=float)
    return vector / np.linalg.norm(vector)
