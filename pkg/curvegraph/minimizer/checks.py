"""Closed-form cross-checks of the flat search."""

from typing import Optional, Tuple

from ..attrdict import AttrDict
from ..graph import CombinatorialGraph, HalfInt
from ..logger import logger
from ..utils import errors
from .flat import flat_min

UNION_PREFIX = "b."


def _trivalent_hypothesis(graph: CombinatorialGraph) -> Tuple[Optional[str], Optional[str]]:
    """Return (hypothesis, None) if the formula applies, else (None, reason)."""
    degrees = graph.degrees()
    special = [q for q, d in degrees.items() if d != 3]
    if not special:
        return "trivalent", None
    if len(special) > 1:
        return None, f"vertices {special} are not trivalent"
    w = special[0]
    if degrees[w] < 3:
        return None, f"vertex {w!r} has degree {degrees[w]} < 3"
    neighbours = []
    for eid, u, v in graph.edges:
        if u == v == w:
            return None, f"vertex {w!r} carries the loop {eid!r}"
        if w in (u, v):
            neighbours.append(v if u == w else u)
    repeated = sorted({q for q in neighbours if neighbours.count(q) > 1})
    if repeated:
        return None, f"vertex {w!r} shares several edges with {repeated}"
    return f"one vertex of degree {degrees[w]}", None


def trivalent_formula_check(
    graph: CombinatorialGraph, strict: bool = False, name: str = ""
) -> AttrDict:
    """Compare the flat minimum with 2*pi*(B + k/4) = pi*(2B + k/2).

    B is the bridge number and k the number of odd-degree vertices. The
    formula holds for trivalent graphs and for graphs with a single vertex
    w of degree m >= 3 whose m edges go to m distinct trivalent vertices.

    Returns an AttrDict with hypothesis, hypothesis_ok, reason, k, bridge,
    formula, flat and matches.

    Raises:
        HypothesisViolation: with `strict`, if the graph is outside the hypothesis.
        NumericalCheckFailed: if the hypothesis holds and the values differ.
    """
    hypothesis, reason = _trivalent_hypothesis(graph)
    if hypothesis is None and strict:
        raise errors.HypothesisViolation(reason)
    result = flat_min(graph, name=name)
    k = len(graph.odd_vertices())
    formula = HalfInt(result.bridge.doubled + k // 2)
    matches = formula == result.mu_star
    record = AttrDict(
        name=name,
        hypothesis=hypothesis,
        hypothesis_ok=hypothesis is not None,
        reason=reason,
        k=k,
        bridge=result.bridge,
        formula=formula.ntc_str(),
        flat=result.ntc_star,
        matches=matches,
    )
    if hypothesis is not None and not matches:
        raise errors.NumericalCheckFailed(
            f"{name or 'graph'} ({hypothesis}): flat minimum {result.ntc_star} "
            f"differs from pi*(2B + k/2) = {record.formula}"
        )
    if hypothesis is None:
        logger.info("Formula hypothesis fails for %s: %s", name or "graph", reason)
    return record


def _point(graph: CombinatorialGraph, point: str) -> Tuple[CombinatorialGraph, str]:
    """Return the graph with `point` as a degree-2 vertex, and that vertex."""
    if point in graph.vertices:
        if graph.degree(point) != 2:
            raise errors.BadParameters(
                f"Vertex {point!r} has degree {graph.degree(point)}; "
                "use a degree-2 vertex or an edge id"
            )
        return graph, point
    vertex = f"{point}.mid"
    return graph.subdivide(point, vertex), vertex


def one_point_union(
    first: CombinatorialGraph, p1: str, second: CombinatorialGraph, p2: str
) -> CombinatorialGraph:
    """Join two graphs at a point inside an edge of each.

    A point is a degree-2 vertex or an edge id, which is then subdivided.
    Ids of `second` get the prefix 'b.'.
    """
    first, q1 = _point(first, p1)
    second, q2 = _point(second, p2)
    return (first + second.relabeled(UNION_PREFIX)).identify(q1, UNION_PREFIX + q2)


def one_point_union_check(
    first: CombinatorialGraph, p1: str, second: CombinatorialGraph, p2: str
) -> AttrDict:
    """Check ntc*(union) in [ntc*(first) + ntc*(second) - 2*pi, ntc*(first) + ntc*(second)].

    Returns an AttrDict with parts, upper, lower, union, within_bounds and
    floor_attained (the union reaches the lower bound).

    Raises:
        BudgetExceeded: if a graph is too large for the flat search.
        NumericalCheckFailed: if the union leaves the interval.
    """
    union = one_point_union(first, p1, second, p2)
    mu_first = flat_min(first).mu_star
    mu_second = flat_min(second).mu_star
    mu_union = flat_min(union).mu_star
    upper = mu_first + mu_second
    lower = upper - 1
    record = AttrDict(
        parts=[mu_first.ntc_str(), mu_second.ntc_str()],
        upper=upper.ntc_str(),
        lower=lower.ntc_str(),
        union=mu_union.ntc_str(),
        union_mu=mu_union,
        within_bounds=lower <= mu_union <= upper,
        floor_attained=mu_union == lower,
    )
    if not record.within_bounds:
        raise errors.NumericalCheckFailed(
            f"One-point union has minimum {record.union}, outside [{record.lower}, {record.upper}]"
        )
    return record
