"""Point sets and rotations on the unit sphere."""

from typing import Tuple

import numpy as np

GOLDEN_RATIO = (1 + np.sqrt(5)) / 2


def fibonacci_sphere(samples: int) -> np.ndarray:
    """Return `samples` quasi-uniform unit vectors on a Fibonacci spiral, shape (n, 3).

    cos(theta) = z runs over cell centres 1 - (2i + 1)/n and phi advances by
    2*pi/golden_ratio, so every point is an equal-area cell centre.
    """
    index = np.arange(samples)
    phi = index * (2 * np.pi / GOLDEN_RATIO)
    z = 1 - (2 * index + 1) / samples
    rho = np.sqrt(np.clip(1 - z**2, 0.0, 1.0))
    return np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=1)


def uniform_sphere(rng: np.random.Generator, samples: int) -> np.ndarray:
    """Return `samples` independent uniform unit vectors (normalised Gaussians)."""
    vectors = rng.standard_normal((samples, 3))
    norms = np.linalg.norm(vectors, axis=1)
    # a zero Gaussian triple has probability zero; keep the row finite anyway
    norms[norms == 0] = 1.0
    return vectors / norms[:, None]


def orthonormal_frame(normal: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Return (e1, e2) orthonormal and orthogonal to `normal`, with e1 x e2 = normal."""
    normal = normal / np.linalg.norm(normal)
    helper = np.eye(3)[int(np.argmin(np.abs(normal)))]
    e1 = np.cross(normal, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(normal, e1)
    return e1, e2


def rotation_about(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rotation matrix of `angle` radians about `axis` (Rodrigues)."""
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    kx = np.array(
        [[0.0, -axis[2], axis[1]], [axis[2], 0.0, -axis[0]], [-axis[1], axis[0], 0.0]]
    )
    return np.eye(3) + np.sin(angle) * kx + (1 - np.cos(angle)) * (kx @ kx)


def lonlat_to_vector(lon, lat) -> np.ndarray:
    """Convert longitude/latitude in radians to unit vectors, shape (..., 3)."""
    lon = np.asarray(lon, dtype=float)
    lat = np.asarray(lat, dtype=float)
    return np.stack(
        [np.cos(lat) * np.cos(lon), np.cos(lat) * np.sin(lon), np.sin(lat)], axis=-1
    )
