"""Exhaustive search over flat maps: vertex orderings and loop choices.

A flat map sends every topological vertex to its rank in an ordering,
every non-loop edge monotonically between its endpoints and every loop
to a single arc that rises (`up`) or dips (`down`) from its vertex.
Edge-monotone maps of this kind attain the minimum of mu, so searching them
gives the minimal NTC of the combinatorial class.
"""

import dataclasses
import itertools
import math
from collections import Counter
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from .. import __config__ as cfg
from ..attrdict import AttrDict
from ..graph import CombinatorialGraph, HalfInt
from ..logger import logger
from ..utils import errors
from ..utils.random_utils import map_blocks

LOOP_CHOICES = ("down", "up")


@dataclasses.dataclass(frozen=True)
class HeightAssignment:
    """Strict ordering of the vertices (lowest first) and a choice per loop.

    Examples:
        >>> a = HeightAssignment(order=("q-", "q+"))
        >>> a.rank() # -> {'q-': 0, 'q+': 1}
        >>> a.reversed().order # -> ('q+', 'q-')
    """

    order: Tuple[str, ...]
    loops: Tuple[Tuple[str, str], ...] = ()

    def rank(self) -> Dict[str, int]:
        return {q: i for i, q in enumerate(self.order)}

    @property
    def loop_choice(self) -> Dict[str, str]:
        return dict(self.loops)

    def reversed(self) -> "HeightAssignment":
        """The assignment of -f: reversed order, every loop flipped."""
        flip = {"up": "down", "down": "up"}
        return HeightAssignment(
            order=tuple(reversed(self.order)),
            loops=tuple((eid, flip[choice]) for eid, choice in self.loops),
        )

    def validate(self, graph: CombinatorialGraph):
        """Raise InvalidAssignment unless the assignment fits `graph`."""
        if len(set(self.order)) != len(self.order):
            raise errors.InvalidAssignment("Ordering repeats a vertex")
        if set(self.order) != set(graph.vertices):
            missing = sorted(set(graph.vertices) - set(self.order))
            extra = sorted(set(self.order) - set(graph.vertices))
            raise errors.InvalidAssignment(
                f"Ordering is not a bijection of the vertices (missing {missing}, extra {extra})"
            )
        choices = self.loop_choice
        if len(choices) != len(self.loops):
            raise errors.InvalidAssignment("A loop is given two choices")
        loop_ids = {eid for eid, _, _ in graph.loops}
        if set(choices) != loop_ids:
            raise errors.InvalidAssignment(
                f"Loop choices {sorted(choices)} do not match the loops {sorted(loop_ids)}"
            )
        for eid, choice in self.loops:
            if choice not in LOOP_CHOICES:
                raise errors.InvalidAssignment(
                    f"Loop {eid!r} has choice {choice!r}; use 'up' or 'down'"
                )

    def as_json(self) -> dict:
        return {"order": list(self.order), "loops": dict(self.loops)}


def nlm_of_assignment(graph: CombinatorialGraph, assignment: HeightAssignment) -> Dict[str, HalfInt]:
    """nlm at every vertex of the flat map `assignment`."""
    assignment.validate(graph)
    rank = assignment.rank()
    choices = assignment.loop_choice
    doubled: Counter = Counter()
    for eid, u, v in graph.edges:
        if u == v:
            doubled[u] += -2 if choices[eid] == "up" else 2
            continue
        lower, upper = (u, v) if rank[u] < rank[v] else (v, u)
        doubled[lower] -= 1
        doubled[upper] += 1
    return {q: HalfInt(doubled[q]) for q in graph.vertices}


def mu_of_assignment(
    graph: CombinatorialGraph, assignment: HeightAssignment
) -> Tuple[HalfInt, int, int]:
    """Return (mu, number of local extrema, width) of a flat map.

    An `up` loop adds an interior maximum (nlm +1/2 doubled to +1), a `down`
    loop an interior minimum. The width is the largest number of edge
    crossings at a regular level.

    Raises:
        InvalidAssignment: if the assignment does not fit `graph`.

    Examples:
        >>> mu_of_assignment(theta(3), HeightAssignment(("q-", "q+"))) # -> (HalfInt(3/2), 2, 3)
    """
    nlm = nlm_of_assignment(graph, assignment)
    degrees = graph.degrees()
    choices = assignment.loop_choice
    ups = sum(1 for choice in choices.values() if choice == "up")

    mu_doubled = sum(max(value.doubled, 0) for value in nlm.values()) + 2 * ups
    extrema = sum(1 for q, value in nlm.items() if abs(value.doubled) == degrees[q])
    extrema += len(choices)
    return HalfInt(mu_doubled), extrema, _width_of_assignment(graph, assignment)


def _width_of_assignment(graph: CombinatorialGraph, assignment: HeightAssignment) -> int:
    rank = assignment.rank()
    order = assignment.order
    choices = assignment.loop_choice
    up: Counter = Counter()
    down: Counter = Counter()
    for eid, u, _ in graph.loops:
        (up if choices[eid] == "up" else down)[u] += 1

    widths = [2 * up[order[-1]], 2 * down[order[0]]]
    for k in range(len(order) - 1):
        crossing = sum(
            1
            for _, u, v in graph.edges
            if u != v and min(rank[u], rank[v]) <= k < max(rank[u], rank[v])
        )
        widths.append(crossing + 2 * max(up[order[k]], down[order[k + 1]]))
    return max(widths)


class FlatResult(AttrDict):
    """Minima over all flat maps of a combinatorial graph.

    Keys: name, vertices, loops, evaluated, mu_star (HalfInt), ntc_star
    (symbolic, e.g. '6*pi'), ntc_star_rad, bridge (HalfInt), width_star,
    argmin (HeightAssignments attaining mu_star, lexicographic, at most
    MAX_ARGMIN) and argmin_truncated.
    """

    def text(self) -> str:
        lines = [
            self.output(
                ["mu_star", "ntc_star", "ntc_star_rad__rad__.12g", "bridge", "width_star", "evaluated"],
                max_length=1,
            )
        ]
        more = " (truncated)" if self.argmin_truncated else ""
        lines.append(f"argmin{more}:")
        for assignment in self.argmin:
            loops = ", ".join(f"{eid}={choice}" for eid, choice in assignment.loops)
            lines.append("  " + " < ".join(assignment.order) + (f" | {loops}" if loops else ""))
        return "\n".join(lines)


class _Tables(NamedTuple):
    """Index form of a combinatorial graph used by the vectorised search."""

    incidence: np.ndarray  # (edges, n): -1 at u, +1 at v
    ends: np.ndarray  # (edges, 2) vertex indices
    degrees: np.ndarray
    loop_ids: Tuple[str, ...]
    choices: np.ndarray  # (2^loops, loops), 1 = up
    loop_nlm: np.ndarray  # (2^loops, n)
    up: np.ndarray  # (2^loops, n) up loops per vertex
    down: np.ndarray


def _tables(graph: CombinatorialGraph) -> _Tables:
    index = {q: i for i, q in enumerate(graph.vertices)}
    n = len(graph.vertices)
    plain = [(index[u], index[v]) for _, u, v in graph.edges if u != v]
    incidence = np.zeros((len(plain), n), dtype=np.int32)
    for k, (u, v) in enumerate(plain):
        incidence[k, u] -= 1
        incidence[k, v] += 1

    loops = graph.loops
    at_vertex = np.zeros((len(loops), n), dtype=np.int32)
    for k, (_, q, _) in enumerate(loops):
        at_vertex[k, index[q]] = 1
    choices = np.array(list(itertools.product((0, 1), repeat=len(loops))), dtype=np.int32)
    up = choices @ at_vertex
    down = (1 - choices) @ at_vertex
    degrees = graph.degrees()
    return _Tables(
        incidence=incidence,
        ends=np.array(plain, dtype=np.intp).reshape(-1, 2),
        degrees=np.array([degrees[q] for q in graph.vertices], dtype=np.int32),
        loop_ids=tuple(eid for eid, _, _ in loops),
        choices=choices,
        loop_nlm=2 * down - 2 * up,
        up=up,
        down=down,
    )


class _BlockMinimum(NamedTuple):
    mu: int
    ties: int
    argmin: List[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    extrema: int
    width: int
    evaluated: int


def _evaluate(tables: _Tables, perms: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Doubled mu, extrema and width of every (ordering, loop choice) pair.

    `perms[b]` lists vertex indices from the lowest to the highest. The
    results have shape (len(perms), 2^loops).
    """
    n = perms.shape[1]
    ranks = np.argsort(perms, axis=1)
    u, v = tables.ends[:, 0], tables.ends[:, 1]
    signs = np.sign(ranks[:, v] - ranks[:, u]).astype(np.int32)
    nlm = (signs @ tables.incidence)[:, None, :] + tables.loop_nlm[None, :, :]

    ups = tables.choices.sum(axis=1)
    mu = np.maximum(nlm, 0).sum(axis=2) + 2 * ups[None, :]
    extrema = (np.abs(nlm) == tables.degrees).sum(axis=2) + tables.choices.shape[1]

    lo = np.minimum(ranks[:, u], ranks[:, v])
    hi = np.maximum(ranks[:, u], ranks[:, v])
    gaps = np.arange(n - 1)
    crossing = ((lo[:, :, None] <= gaps) & (hi[:, :, None] > gaps)).sum(axis=1)
    # (choices, perms, gaps)
    gap_loops = 2 * np.maximum(tables.up[:, perms[:, :-1]], tables.down[:, perms[:, 1:]])
    inside = np.max(crossing[None, :, :] + gap_loops, axis=2, initial=0)
    top = 2 * tables.up[:, perms[:, -1]]
    bottom = 2 * tables.down[:, perms[:, 0]]
    width = np.maximum(np.maximum(inside, top), bottom).T
    return mu, extrema, width


def _search_block(tables: _Tables, perms: np.ndarray) -> _BlockMinimum:
    mu, extrema, width = _evaluate(tables, perms)
    best = int(mu.min())
    rows, cols = np.nonzero(mu == best)
    argmin = [
        (tuple(int(i) for i in perms[r]), tuple(int(c) for c in tables.choices[k]))
        for r, k in zip(rows[: cfg.MAX_ARGMIN], cols[: cfg.MAX_ARGMIN])
    ]
    return _BlockMinimum(
        mu=best,
        ties=len(rows),
        argmin=argmin,
        extrema=int(extrema.min()),
        width=int(width.min()),
        evaluated=mu.size,
    )


def _tail_length() -> int:
    """Largest t with t! <= PERMUTATION_BLOCK."""
    t = 1
    while math.factorial(t + 1) <= cfg.PERMUTATION_BLOCK:
        t += 1
    return t


def _prefixes(n: int) -> Iterator[Tuple[int, ...]]:
    """Common prefixes of the blocks, in lexicographic order."""
    return itertools.permutations(range(n), n - min(n, _tail_length()))


def _block(n: int, prefix: Tuple[int, ...]) -> np.ndarray:
    """Orderings of range(n) starting with `prefix`, in lexicographic order."""
    rest = [i for i in range(n) if i not in prefix]
    return np.array([prefix + p for p in itertools.permutations(rest)], dtype=np.intp)


def check_budget(graph: CombinatorialGraph):
    """Raise BudgetExceeded if brute force over `graph` is too large."""
    n = len(graph.vertices)
    if n == 0:
        raise errors.BadParameters("Graph has no vertices")
    if n > cfg.BRUTE_FORCE_MAX_VERTICES:
        raise errors.BudgetExceeded(
            f"{n} vertices; brute force is limited to {cfg.BRUTE_FORCE_MAX_VERTICES}"
        )
    size = math.factorial(n) * 2 ** len(graph.loops)
    if size > cfg.BRUTE_FORCE_MAX_EVALUATIONS:
        raise errors.BudgetExceeded(
            f"{size} flat maps to evaluate; the budget is {cfg.BRUTE_FORCE_MAX_EVALUATIONS}"
        )


def flat_min(graph: CombinatorialGraph, name: str = "") -> FlatResult:
    """Minimise mu, the number of extrema and the width over all flat maps.

    The three minima are taken independently. Orderings are split into
    blocks of a common prefix and evaluated in parallel; the reduction keeps
    the minimum and the lexicographically first argmins, so the result does
    not depend on the number of threads.

    Raises:
        BudgetExceeded: more than BRUTE_FORCE_MAX_VERTICES vertices or more than
            BRUTE_FORCE_MAX_EVALUATIONS flat maps.

    Examples:
        >>> flat_min(complete(5)).ntc_star # -> '6*pi'
        >>> flat_min(theta(3)).bridge # -> HalfInt(2), i.e. 1
    """
    check_budget(graph)
    tables = _tables(graph)
    n = len(graph.vertices)
    logger.info(
        "Flat search of %s: %d orderings x %d loop choices",
        name or "graph",
        math.factorial(n),
        len(tables.choices),
    )
    results = map_blocks(lambda prefix: _search_block(tables, _block(n, prefix)), _prefixes(n))

    mu_doubled = min(block.mu for block in results)
    winners = [block for block in results if block.mu == mu_doubled]
    ties = sum(block.ties for block in winners)
    argmin = [pair for block in winners for pair in block.argmin][: cfg.MAX_ARGMIN]
    mu_star = HalfInt(mu_doubled)
    return FlatResult(
        name=name,
        vertices=n,
        loops=len(tables.loop_ids),
        evaluated=sum(block.evaluated for block in results),
        mu_star=mu_star,
        ntc_star=mu_star.ntc_str(),
        ntc_star_rad=2 * math.pi * float(mu_star),
        bridge=HalfInt(min(block.extrema for block in results)),
        width_star=min(block.width for block in results),
        argmin=[_assignment(graph, tables, perm, choice) for perm, choice in argmin],
        argmin_truncated=ties > cfg.MAX_ARGMIN,
    )


def _assignment(
    graph: CombinatorialGraph, tables: _Tables, perm: Tuple[int, ...], choice: Tuple[int, ...]
) -> HeightAssignment:
    return HeightAssignment(
        order=tuple(graph.vertices[i] for i in perm),
        loops=tuple(zip(tables.loop_ids, (LOOP_CHOICES[c] for c in choice))),
    )


def bridge_number(graph: CombinatorialGraph) -> HalfInt:
    """Half the least number of local extrema over all flat maps."""
    return flat_min(graph).bridge


# Independent oracle over edge shapes

_MONOTONE, _BUMP_MAX, _BUMP_MIN = 0, 1, 2
_LOOP_MAX, _LOOP_MIN, _LOOP_BOTH = 0, 1, 2


def flat_min_exhaustive(graph: CombinatorialGraph, name: str = "") -> AttrDict:
    """Minimise mu over orderings and a shape for every edge.

    A non-loop edge is monotone, has one interior maximum or one interior
    minimum; a loop has one maximum, one minimum or one of each. This is a
    larger search space than `flat_min`'s and shares no code with it.

    Returns an AttrDict with mu_star, bridge, monotone_mu_star (the minimum
    when edges are monotone and each loop has one extremum),
    monotone_suffices, single_loop_extremum_suffices and evaluated.

    Raises:
        BudgetExceeded: above EXHAUSTIVE_MAX_VERTICES vertices or
            EXHAUSTIVE_MAX_EDGES edges.
    """
    n, n_edges = len(graph.vertices), len(graph.edges)
    if n == 0:
        raise errors.BadParameters("Graph has no vertices")
    if n > cfg.EXHAUSTIVE_MAX_VERTICES or n_edges > cfg.EXHAUSTIVE_MAX_EDGES:
        raise errors.BudgetExceeded(
            f"Exhaustive search is limited to {cfg.EXHAUSTIVE_MAX_VERTICES} vertices and "
            f"{cfg.EXHAUSTIVE_MAX_EDGES} edges, got {n} and {n_edges}"
        )
    index = {q: i for i, q in enumerate(graph.vertices)}
    degrees = graph.degrees()
    degree = np.array([degrees[q] for q in graph.vertices])
    is_loop = np.array([u == v for _, u, v in graph.edges], dtype=bool)

    shapes = np.array(list(itertools.product(range(3), repeat=n_edges)), dtype=np.intp)
    onehot = np.zeros((len(shapes), 3 * n_edges))
    onehot[np.arange(len(shapes))[:, None], 3 * np.arange(n_edges) + shapes] = 1.0

    # mu and extrema added by the interior of each (edge, shape)
    inner_mu = np.zeros(3 * n_edges)
    inner_extrema = np.zeros(3 * n_edges)
    fixed = np.zeros((3 * n_edges, n))
    for k, (_, u, v) in enumerate(graph.edges):
        a, b = index[u], index[v]
        if is_loop[k]:
            fixed[3 * k + _LOOP_MAX, a] = -2
            fixed[3 * k + _LOOP_MIN, a] = 2
            inner_mu[[3 * k + _LOOP_MAX, 3 * k + _LOOP_BOTH]] = 2
            inner_extrema[[3 * k + _LOOP_MAX, 3 * k + _LOOP_MIN]] = 1
            inner_extrema[3 * k + _LOOP_BOTH] = 2
        else:
            fixed[3 * k + _BUMP_MAX, [a, b]] = -1
            fixed[3 * k + _BUMP_MIN, [a, b]] = 1
            inner_mu[3 * k + _BUMP_MAX] = 2
            inner_extrema[[3 * k + _BUMP_MAX, 3 * k + _BUMP_MIN]] = 1
    base_mu = np.rint(onehot @ inner_mu).astype(int)
    base_extrema = np.rint(onehot @ inner_extrema).astype(int)
    monotone = np.all(np.where(is_loop, shapes != _LOOP_BOTH, shapes == _MONOTONE), axis=1)
    single_loop = np.all(~is_loop | (shapes != _LOOP_BOTH), axis=1)

    best = best_monotone = best_single = best_extrema = None
    for perm in itertools.permutations(range(n)):
        rank = np.argsort(perm)
        contrib = fixed.copy()
        for k, (_, u, v) in enumerate(graph.edges):
            if not is_loop[k]:
                a, b = index[u], index[v]
                lower, upper = (a, b) if rank[a] < rank[b] else (b, a)
                contrib[3 * k + _MONOTONE, lower] = -1
                contrib[3 * k + _MONOTONE, upper] = 1
        nlm = np.rint(onehot @ contrib).astype(int)
        mu = np.maximum(nlm, 0).sum(axis=1) + base_mu
        extrema = (np.abs(nlm) == degree).sum(axis=1) + base_extrema
        best = _least(best, mu)
        best_monotone = _least(best_monotone, mu[monotone])
        best_single = _least(best_single, mu[single_loop])
        best_extrema = _least(best_extrema, extrema)

    logger.debug("Exhaustive search of %s: mu* doubled = %d", name or "graph", best)
    return AttrDict(
        name=name,
        mu_star=HalfInt(best),
        bridge=HalfInt(best_extrema),
        monotone_mu_star=HalfInt(best_monotone),
        monotone_suffices=best_monotone == best,
        single_loop_extremum_suffices=best_single == best,
        evaluated=math.factorial(n) * len(shapes),
    )


def _least(current: Optional[int], values: np.ndarray) -> Optional[int]:
    if values.size == 0:
        return current
    value = int(values.min())
    return value if current is None else min(current, value)
