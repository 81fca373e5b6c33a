"""Level sets of the height function: fiber counts, width and profiles."""

from typing import Iterable, List, Optional

import numpy as np

from .. import __config__ as cfg
from ..attrdict import AttrDict
from ..graph import HalfInt, SpatialGraph, as_direction
from ..utils import errors
from .heights import critical_points, is_generic, nlm_profile, perturb_direction


class FiberCount(AttrDict):
    """Cardinality `count` of the level set at height `level`."""


class ProjectionProfile(AttrDict):
    """Critical points of the height <e, .> with their d+, d-, nlm, and mu.

    Keys: direction, requested_direction, perturbations, generic,
    critical (list of {point, kind, height, d_up, d_down, nlm}), nlm_sum,
    mu, width and, when levels are given, fibers.
    """

    def text(self) -> str:
        lines = [self.output(["mu", "nlm_sum", "width", "perturbations"])]
        for point in self.critical:
            lines.append(
                f"  {point['point']}: height = {point['height']:.9g}; "
                f"d+ = {point['d_up']}; d- = {point['d_down']}; nlm = {point['nlm']}"
            )
        for fiber in self.get("fibers", []):
            lines.append(f"  #(e, {fiber['level']:.9g}) = {fiber['count']}")
        return "\n".join(lines)


def _geometric_count(graph: SpatialGraph, e: np.ndarray, level: float) -> int:
    arrays = graph.arrays
    heights = arrays.points @ e
    low = np.minimum(heights[arrays.segments[:, 0]], heights[arrays.segments[:, 1]])
    high = np.maximum(heights[arrays.segments[:, 0]], heights[arrays.segments[:, 1]])
    # half-open segments, so a level through a monotone joint counts once
    return int(np.count_nonzero((low < level) & (level <= high)))


def fiber_count(graph: SpatialGraph, e, level: float) -> int:
    """Return #{p in graph : <e, p> = level}, counted on the polyline segments.

    The count is checked against 2 * sum of nlm over critical points above
    the level.

    Raises:
        NonGenericDirection: if `e` is not generic.
        BadParameters: if `level` is a critical height.
        NumericalCheckFailed: if the two counts disagree.
    """
    e = as_direction(e)
    profile = nlm_profile(graph, e)
    for point, _ in profile:
        if abs(point.height - level) <= cfg.SEPARATION_TOL:
            raise errors.BadParameters(
                f"Level {level} is the height of critical point {point.name}"
            )
    count = _geometric_count(graph, e, level)
    above = sum((value for point, value in profile if point.height > level), HalfInt(0))
    if count != above.doubled:
        raise errors.NumericalCheckFailed(
            f"Fiber at level {level}: {count} crossings but 2*sum(nlm above) = {above.doubled}"
        )
    return count


def gap_levels(graph: SpatialGraph, e) -> List[float]:
    """One level in the middle of every gap between consecutive critical heights."""
    heights = sorted({point.height for point in critical_points(graph, e)})
    return [(low + high) / 2 for low, high in zip(heights, heights[1:])]


def width_in_direction(graph: SpatialGraph, e) -> int:
    """Return max_s #(e, s), sampled at one level per gap of critical heights."""
    e = as_direction(e)
    return max((fiber_count(graph, e, level) for level in gap_levels(graph, e)), default=0)


def profile(
    graph: SpatialGraph,
    e,
    levels: Optional[Iterable[float]] = None,
    perturb: bool = True,
) -> ProjectionProfile:
    """Build the ProjectionProfile of `graph` in direction `e`.

    With `perturb`, a non-generic `e` is replaced by `perturb_direction(graph, e)`
    and the number of rotations is reported.
    """
    requested = as_direction(e)
    if perturb:
        e, perturbations = perturb_direction(graph, requested)
    else:
        e, perturbations = requested, 0
    check = is_generic(graph, e)
    if not check.generic:
        raise errors.NonGenericDirection(f"Direction {e.tolist()}: {check.witness}")

    points = nlm_profile(graph, e)
    mu_value = sum((value.positive() for _, value in points), HalfInt(0))
    result = ProjectionProfile(
        direction=e.tolist(),
        requested_direction=requested.tolist(),
        perturbations=perturbations,
        generic=True,
        critical=[
            dict(
                point=point.name,
                kind=point.kind,
                height=point.height,
                d_up=point.d_up,
                d_down=point.d_down,
                nlm=value,
            )
            for point, value in points
        ],
        nlm_sum=sum((value for _, value in points), HalfInt(0)),
        mu=mu_value,
        width=width_in_direction(graph, e),
    )
    if levels is not None:
        result.fibers = [
            FiberCount(level=float(level), count=fiber_count(graph, e, float(level)))
            for level in levels
        ]
    return result
