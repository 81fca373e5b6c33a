"""Per-vertex curvature functionals ntc, tc, ctc and vtc."""

import math
from typing import List, Optional, Tuple

import numpy as np
from scipy import optimize

from .. import __config__ as cfg
from ..attrdict import AttrDict
from ..graph import VertexStar, as_direction
from ..utils import errors
from ..utils.random_utils import block_generator, map_blocks
from ..utils.sphere import fibonacci_sphere, uniform_sphere
from .arrangement import SphericalArrangement, build_arrangement, chi_sum


class VertexReport(AttrDict):
    """Curvature functionals of one vertex star.

    Keys: vertex, degree, ntc, tc, ctc, vtc (radians; vtc is a length),
    exterior_angles (list of [i, j, angle]), merged, and, when requested,
    ntc_mc / ntc_mc_stderr.
    """

    def text(self) -> str:
        keys = ["vertex", "degree", "ntc__rad__.12g", "tc__rad__.12g", "ctc__rad__.12g"]
        keys.append("vtc__.12g")
        if "ntc_mc" in self:
            keys.extend(["ntc_mc__rad__.6f", "ntc_mc_stderr__.2e"])
        return self.output(keys, max_length=1)


def ntc_from_arrangement(arrangement: SphericalArrangement) -> float:
    """1/4 of the integral of the positive part of sum chi_i."""
    return 0.25 * math.fsum(cell.area * max(cell.value, 0) for cell in arrangement.cells)


def ntc_vertex(star: VertexStar) -> float:
    """Return ntc(q) = 1/4 * integral over S^2 of [sum_i chi_i(e)]^+ dA.

    For d = 2 this is the exterior angle; for three coplanar tangents at
    mutual angles 2*pi/3 it is pi/2; opposite pairs give 0.
    """
    return ntc_from_arrangement(build_arrangement(star))


def ntc_vertex_mc(star: VertexStar, samples: int, seed: int) -> Tuple[float, float]:
    """Monte Carlo estimate of ntc(q) with its standard error.

    Uniform directions are drawn in blocks of `MC_BLOCK` from a Philox stream
    keyed by (seed, block), so the estimate does not depend on threading.
    """
    if samples < 1:
        raise errors.BadParameters(f"samples should be >= 1, got {samples}")
    blocks = [
        (block, min(cfg.MC_BLOCK, samples - block * cfg.MC_BLOCK))
        for block in range(math.ceil(samples / cfg.MC_BLOCK))
    ]

    def run(item):
        block, size = item
        directions = uniform_sphere(block_generator(seed, block), size)
        values = np.maximum(chi_sum(star.tangents, directions), 0).astype(float)
        return values.sum(), (values**2).sum()

    sums = map_blocks(run, blocks)
    total = math.fsum(s for s, _ in sums)
    total_sq = math.fsum(s for _, s in sums)
    mean = total / samples
    if samples == 1:
        return math.pi * mean, math.inf
    variance = max(total_sq - samples * mean**2, 0.0) / (samples - 1)
    return math.pi * mean, math.pi * math.sqrt(variance / samples)


def exterior_angles(star: VertexStar) -> List[Tuple[int, int, float]]:
    """Return (i, j, arccos<T_i, -T_j>) for every pair i < j."""
    tangents = star.tangents
    return [
        (i, j, float(np.arccos(np.clip(-tangents[i] @ tangents[j], -1.0, 1.0))))
        for i in range(len(tangents))
        for j in range(i + 1, len(tangents))
    ]


def tc_vertex(star: VertexStar) -> float:
    """Return tc(q), the sum of the pairwise exterior angles (d >= 2)."""
    if star.degree < 2:
        raise errors.BadParameters(f"tc needs degree >= 2, got {star.degree}")
    return math.fsum(angle for _, _, angle in exterior_angles(star))


def vtc_vertex(star: VertexStar) -> float:
    """Return |T_1 + ... + T_d|."""
    return float(np.linalg.norm(star.tangents.sum(axis=0)))


def _cone_value(tangents: np.ndarray, direction: np.ndarray) -> float:
    return float(np.sum(np.arcsin(np.clip(tangents @ direction, -1.0, 1.0))))


def cone_value(star: VertexStar, e) -> float:
    """Sum of pi/2 - arccos<T_i, e>; ctc is its maximum over e."""
    return _cone_value(star.tangents, as_direction(e))


def _ctc_starts(tangents: np.ndarray) -> List[np.ndarray]:
    starts = [t for t in tangents] + [-t for t in tangents]
    total = tangents.sum(axis=0)
    if np.linalg.norm(total) > cfg.SEPARATION_TOL:
        starts.extend([total / np.linalg.norm(total), -total / np.linalg.norm(total)])
    for i in range(len(tangents)):
        for j in range(i + 1, len(tangents)):
            cross = np.cross(tangents[i], tangents[j])
            norm = np.linalg.norm(cross)
            if norm > cfg.MERGE_TOL:
                starts.extend([cross / norm, -cross / norm])
    return starts


def ctc_vertex(star: VertexStar) -> float:
    """Return ctc(q) = sup over e of sum_i (pi/2 - arccos<T_i, e>).

    For d = 2 this is the exterior angle; opposite pairs give 0. For d
    coplanar tangents at equal angles it is pi/(2d) when d is odd, reached at
    e = T_1, and 0 when d is even; the plane normal gives 0 in both cases.

    Local ascent from {+-T_i, +-normalize(sum T_i), +-normalize(T_i x T_j)}
    and from the best points of a quasi-uniform scan; the scan is also a floor.
    """
    tangents = star.tangents
    scan = fibonacci_sphere(cfg.CTC_SCAN_POINTS)
    scan_values = np.sum(np.arcsin(np.clip(scan @ tangents.T, -1.0, 1.0)), axis=1)
    best = float(scan_values.max())
    starts = _ctc_starts(tangents) + list(scan[np.argsort(scan_values)[-4:]])

    def negative(x):
        norm = np.linalg.norm(x)
        return -_cone_value(tangents, x / norm)

    def negative_gradient(x):
        norm = np.linalg.norm(x)
        direction = x / norm
        dots = np.clip(tangents @ direction, -1.0, 1.0)
        weights = 1.0 / np.sqrt(np.maximum(1.0 - dots**2, 1e-24))
        grad = weights @ tangents
        grad -= (grad @ direction) * direction
        return -grad / norm

    for start in starts:
        best = max(best, _cone_value(tangents, start))
        result = optimize.minimize(
            negative,
            start,
            jac=negative_gradient,
            method="BFGS",
            options={"gtol": 1e-10, "maxiter": 200},
        )
        if np.all(np.isfinite(result.x)) and np.linalg.norm(result.x) > 0:
            best = max(best, -float(result.fun))
    return best


def vertex_report(
    star: VertexStar, mc_samples: Optional[int] = None, seed: Optional[int] = None
) -> VertexReport:
    """Evaluate all four functionals (tc only for d >= 2) and optionally the oracle."""
    arrangement = build_arrangement(star)
    report = VertexReport(
        vertex=star.vertex,
        degree=star.degree,
        ntc=ntc_from_arrangement(arrangement),
        tc=tc_vertex(star) if star.degree >= 2 else 0.0,
        ctc=ctc_vertex(star),
        vtc=vtc_vertex(star),
        exterior_angles=[list(item) for item in exterior_angles(star)],
        merged=arrangement.merged,
    )
    if mc_samples is not None:
        if seed is None:
            raise errors.BadParameters("A seed is required for the Monte Carlo estimate")
        report.ntc_mc, report.ntc_mc_stderr = ntc_vertex_mc(star, mc_samples, seed)
    return report
