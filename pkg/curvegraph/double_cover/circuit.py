"""The double of a graph, its Euler circuits and their traversals."""

import dataclasses
import functools
from collections import defaultdict
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from ..graph import CombinatorialGraph, SpatialGraph
from ..logger import logger
from ..utils import errors
from ..utils.random_utils import block_generator

COPIES = ("A", "B")

# (edge id, copy, end) with end 0 at u and 1 at v
CopyEnd = Tuple[str, str, int]


class Traversal(NamedTuple):
    """One pass along a copy of a base edge; forward runs from u to v."""

    edge_id: str
    forward: bool
    copy: str = "A"

    @property
    def start_end(self) -> int:
        return 0 if self.forward else 1

    @property
    def arrival_end(self) -> int:
        return 1 if self.forward else 0

    def as_json(self) -> list:
        return [self.edge_id, self.copy, self.forward]


@dataclasses.dataclass(frozen=True)
class DoubledGraph:
    """The base graph with every edge present twice, as copies A and B."""

    base: CombinatorialGraph

    def __post_init__(self):
        for q, d in self.degrees().items():
            if d % 2 or d != 2 * self.base.degree(q):
                raise errors.NumericalCheckFailed(f"Doubled degree at {q!r} is {d}")

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.base.vertices

    @property
    def copies(self) -> List[Tuple[str, str, str, str]]:
        """(edge id, copy, u, v) of every edge copy."""
        return [(eid, c, u, v) for eid, u, v in self.base.edges for c in COPIES]

    @functools.cached_property
    def ends(self) -> Dict[str, List[CopyEnd]]:
        """Copy-ends at every vertex, in a fixed order."""
        ends: Dict[str, List[CopyEnd]] = {q: [] for q in self.vertices}
        for eid, c, u, v in self.copies:
            ends[u].append((eid, c, 0))
            ends[v].append((eid, c, 1))
        return ends

    def degrees(self) -> Dict[str, int]:
        return {q: len(items) for q, items in self.ends.items()}

    def end_vertex(self, copy_end: CopyEnd) -> str:
        _, u, v = self._edges[copy_end[0]]
        return u if copy_end[2] == 0 else v

    @functools.cached_property
    def _edges(self) -> Dict[str, Tuple[str, str, str]]:
        return {eid: (eid, u, v) for eid, u, v in self.base.edges}


def double(graph) -> DoubledGraph:
    """Return the double of a CombinatorialGraph or SpatialGraph."""
    if isinstance(graph, SpatialGraph):
        graph = graph.combinatorial()
    return DoubledGraph(graph)


@dataclasses.dataclass(frozen=True)
class Circuit:
    """Closed traversals covering each edge copy once, possibly in several components."""

    components: Tuple[Tuple[Traversal, ...], ...]

    @property
    def traversals(self) -> List[Traversal]:
        return [t for component in self.components for t in component]

    def __len__(self) -> int:
        return sum(len(component) for component in self.components)

    def passages(self) -> Iterator[Tuple[Traversal, Traversal]]:
        """Consecutive (arrival, departure) pairs, cyclically within each component."""
        for component in self.components:
            for k, arrival in enumerate(component):
                yield arrival, component[(k + 1) % len(component)]

    def immediate_reversals(self) -> List[Tuple[Traversal, Traversal]]:
        """Passages that leave along the other copy of the arrival edge, backwards."""
        return [
            (arrival, departure)
            for arrival, departure in self.passages()
            if arrival.edge_id == departure.edge_id
            and arrival.copy != departure.copy
            and arrival.forward != departure.forward
        ]

    def as_json(self) -> list:
        return [[t.as_json() for t in component] for component in self.components]


def _forbidden(a: CopyEnd, b: CopyEnd) -> bool:
    """Pairing a with b at a vertex means an immediate reversal."""
    return a[0] == b[0] and a[2] == b[2] and a[1] != b[1]


def _random_pairing(
    ends: List[CopyEnd], rng: np.random.Generator, nonreversing: bool
) -> Optional[List[Tuple[CopyEnd, CopyEnd]]]:
    """Random perfect matching of the copy-ends at a vertex, with backtracking."""
    order = [ends[i] for i in rng.permutation(len(ends))]

    def extend(remaining: List[CopyEnd]):
        if not remaining:
            return []
        first, rest = remaining[0], remaining[1:]
        for k in rng.permutation(len(rest)):
            partner = rest[k]
            if nonreversing and _forbidden(first, partner):
                continue
            tail = extend(rest[:k] + rest[k + 1 :])
            if tail is not None:
                return [(first, partner)] + tail
        return None

    return extend(order)


def _trace(dg: DoubledGraph, pairs: Dict[CopyEnd, CopyEnd]) -> List[Tuple[Traversal, ...]]:
    used = set()
    components = []
    for eid, c, _, _ in dg.copies:
        if (eid, c) in used:
            continue
        component = []
        departure: CopyEnd = (eid, c, 0)
        while (departure[0], departure[1]) not in used:
            used.add((departure[0], departure[1]))
            component.append(Traversal(departure[0], departure[2] == 0, departure[1]))
            arrival = (departure[0], departure[1], 1 - departure[2])
            departure = pairs[arrival]
        components.append(tuple(component))
    return components


def _component_index(components) -> Dict[Tuple[str, str], int]:
    return {(t.edge_id, t.copy): k for k, comp in enumerate(components) for t in comp}


def _splice(dg: DoubledGraph, pairs: Dict[CopyEnd, CopyEnd], nonreversing: bool) -> bool:
    """Swap two transitions of different components at a shared vertex.

    Returns False when no two components meet at a vertex.
    """
    components = _trace(dg, pairs)
    if len(components) < 2:
        return False
    index = _component_index(components)
    for q in dg.vertices:
        by_component = defaultdict(list)
        for a in dg.ends[q]:
            b = pairs[a]
            if a < b:
                by_component[index[(a[0], a[1])]].append((a, b))
        if len(by_component) < 2:
            continue
        first, second = sorted(by_component)[:2]
        (a1, b1), (a2, b2) = by_component[first][0], by_component[second][0]
        for new in (((a1, b2), (a2, b1)), ((a1, a2), (b1, b2))):
            if nonreversing and any(_forbidden(x, y) for x, y in new):
                continue
            for x, y in new:
                pairs[x], pairs[y] = y, x
            return True
    return False


def euler_circuit(
    dg: DoubledGraph, nonreversing: bool = False, seed: int = 0, connected: bool = True
) -> Circuit:
    """Random Euler circuit of the doubled graph.

    A random transition system pairs the copy-ends at every vertex. With
    `nonreversing`, no pair joins the two copies of an edge at the same end.
    With `connected`, components sharing a vertex are spliced together.

    Raises:
        NonReversingImpossible: a non-reversing circuit was asked for and the
            base graph has a vertex of degree 1.
    """
    if nonreversing:
        leaves = [q for q, d in dg.base.degrees().items() if d == 1]
        if leaves:
            raise errors.NonReversingImpossible(
                f"Vertices {leaves} have degree 1; every circuit reverses there"
            )
    rng = block_generator(seed)
    pairs: Dict[CopyEnd, CopyEnd] = {}
    for q in dg.vertices:
        pairing = _random_pairing(dg.ends[q], rng, nonreversing)
        if pairing is None:
            raise errors.NonReversingImpossible(f"No non-reversing transitions at {q!r}")
        for a, b in pairing:
            pairs[a], pairs[b] = b, a

    if connected:
        splices = 0
        while _splice(dg, pairs, nonreversing):
            splices += 1
        if splices:
            logger.debug("Spliced %d circuit components (seed %d)", splices, seed)
    circuit = Circuit(tuple(_trace(dg, pairs)))
    if nonreversing and circuit.immediate_reversals():
        raise errors.NumericalCheckFailed(f"Circuit for seed {seed} reverses an edge")
    return circuit


def _base(graph) -> CombinatorialGraph:
    return graph.combinatorial() if isinstance(graph, SpatialGraph) else graph


def check_closed(graph, circuit: Circuit) -> None:
    """Check that every traversal starts where the previous one ends.

    Raises:
        NonClosedCircuit: on a gap between traversals or an unknown edge.
    """
    edges = {eid: (u, v) for eid, u, v in _base(graph).edges}
    if not circuit.components or not all(circuit.components):
        raise errors.NonClosedCircuit("Circuit has an empty component")
    for arrival, departure in circuit.passages():
        for t in (arrival, departure):
            if t.edge_id not in edges:
                raise errors.NonClosedCircuit(f"Unknown edge {t.edge_id!r}")
        end_at = edges[arrival.edge_id][arrival.arrival_end]
        start_at = edges[departure.edge_id][departure.start_end]
        if end_at != start_at:
            raise errors.NonClosedCircuit(
                f"Traversal of {arrival.edge_id!r} ends at {end_at!r} but "
                f"{departure.edge_id!r} starts at {start_at!r}"
            )


def check_double_cover(graph, circuit: Circuit) -> None:
    """Check that `circuit` closes up and covers every edge copy exactly once."""
    check_closed(graph, circuit)
    seen = set()
    for t in circuit.traversals:
        key = (t.edge_id, t.copy)
        if key in seen:
            raise errors.NonClosedCircuit(f"Copy {key} is used twice")
        seen.add(key)
    missing = {(eid, c) for eid, _, _ in _base(graph).edges for c in COPIES} - seen
    if missing:
        raise errors.NonClosedCircuit(f"Copies {sorted(missing)} are not traversed")
