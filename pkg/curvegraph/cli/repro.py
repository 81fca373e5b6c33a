"""Reproduction experiments: known values against computed ones.

Every experiment returns a list of `Check` rows; `repro` runs a selection
and reports expected value, computed value, tolerance and PASS/FAIL.
"""

import functools
import math
from typing import Callable, Dict, Iterable, List, NamedTuple, Tuple

import numpy as np

from ..attrdict import AttrDict
from ..curvature import (
    circuit_curvature,
    cone_value,
    cylindrical_shrink,
    joint_angle_sum,
    ntc_total,
    ntc_vertex,
    subadditivity_defect,
    tc_vertex,
    vertex_report,
)
from ..crofton import crofton_ntc
from ..double_cover import double, euler_circuit, nlm_from_circuit, vertex_passage_curvature
from ..graph import (
    SpatialGraph,
    VertexStar,
    inscribe,
    random_embedding,
    random_multigraph,
    random_star,
    random_trivalent,
    refine_segment,
    tangent_star,
    wild_curve_arc,
)
from ..logger import logger
from ..minimizer import catalog_bridge, catalog_value, flat_min, generate
from ..minimizer.families import (
    embed_butterfly,
    embed_complete,
    embed_cycle,
    embed_ladder,
    embed_theta,
)
from ..projection import fiber_count, is_generic, mu, nlm, perturb_direction, profile
from ..utils import errors
from ..utils.random_utils import block_generator
from ..utils.sphere import uniform_sphere

REPRO_SEED = 20_240_501
BUTTERFLY_ALPHA = math.atan(0.5)
STAR_ALPHA = 0.5
MC_VERTEX_SAMPLES = 1_000_000
CROFTON_SAMPLES = 200_000
SHRINK_DIRECTION = (0.36, 0.48, 0.8)


class Check(NamedTuple):
    experiment: str
    name: str
    expected: str
    computed: str
    tolerance: str
    passed: bool

    def as_json(self) -> dict:
        return self._asdict()  # pylint: disable=no-member


class ReproReport(AttrDict):
    """Keys: experiments, checks, failed, passed."""

    def text(self) -> str:
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(
                f"{status} {check.experiment}/{check.name}: expected {check.expected}, "
                f"computed {check.computed}, tolerance {check.tolerance}"
            )
        lines.append(f"{len(self.checks) - self.failed} passed, {self.failed} failed")
        return "\n".join(lines)


def _close(experiment, name, expected: float, computed: float, tol: float, label=None) -> Check:
    return Check(
        experiment,
        name,
        label or f"{expected:.12g}",
        f"{computed:.12g}",
        f"{tol:.3g}",
        abs(computed - expected) <= tol,
    )


def _count(experiment, name, violations: int, trials: int) -> Check:
    return Check(experiment, name, "0 violations", f"{violations} of {trials}", "exact", violations == 0)


def _rng(experiment: int, trial: int) -> np.random.Generator:
    return block_generator(REPRO_SEED + experiment, trial)


# Vertex functionals


def planar_star(degree: int) -> VertexStar:
    """Coplanar star of `degree` tangents at equal angles."""
    angles = 2 * np.pi * np.arange(degree) / degree
    return VertexStar.from_vectors(
        np.stack([np.cos(angles), np.sin(angles), 0 * angles], axis=1), vertex=f"d{degree}"
    )


def planar_ctc(degree: int) -> float:
    """ctc of the coplanar equal-angle star: pi/(2d) for odd d, attained at e = T_1.

    The plane normal only gives the lower bound 0.
    """
    return math.pi / (2 * degree) if degree % 2 else 0.0


def vertex_table() -> List[Check]:
    checks = []
    for d in range(3, 7):
        star = planar_star(d)
        report = vertex_report(star, mc_samples=MC_VERTEX_SAMPLES, seed=d)
        ntc = math.pi / 2 if d % 2 else 0.0
        tc = math.pi / 2 * ((d - 1) ** 2 // 2)
        label = "pi/2" if d % 2 else "0"
        checks.append(_close("vertex-table", f"ntc d={d}", ntc, report.ntc, 1e-6, label))
        ctc_label = f"pi/{2 * d}" if d % 2 else "0"
        checks.append(
            _close("vertex-table", f"ctc d={d}", planar_ctc(d), report.ctc, 1e-6, ctc_label)
        )
        normal = cone_value(star, (0, 0, 1))
        checks.append(
            _close("vertex-table", f"cone value at the normal d={d}", 0.0, normal, 1e-12)
        )
        checks.append(_close("vertex-table", f"tc d={d}", tc, report.tc, 1e-6))
        checks.append(
            _close(
                "vertex-table",
                f"monte carlo d={d}",
                report.ntc,
                report.ntc_mc,
                3 * report.ntc_mc_stderr + 1e-12,
            )
        )
    return checks


def butterfly() -> List[Check]:
    graph = embed_butterfly(BUTTERFLY_ALPHA, name="butterfly")
    whole = ntc_total(graph)
    part = ntc_total(graph.without_edge("L0"))
    return [
        _close("butterfly", "ntc", 5 * math.pi - 4 * BUTTERFLY_ALPHA, whole, 1e-9, "5*pi - 4a"),
        _close(
            "butterfly", "ntc without L0", 6 * math.pi - 8 * BUTTERFLY_ALPHA, part, 1e-9, "6*pi - 8a"
        ),
        Check("butterfly", "subgraph larger", "ntc(G0) > ntc(G)", f"{part - whole:.6g}", "", part > whole),
    ]


def degree4_strictness(seeds: int = 400) -> List[Check]:
    """Degree-4 star where no double-circuit pairing attains ntc."""
    c, s = math.cos(STAR_ALPHA), math.sin(STAR_ALPHA)
    tangents = [(1, 0, 0), (0, 1, 0), (-c, 0, s), (0, -c, -s)]
    graph = SpatialGraph.build(
        {"q": (0, 0, 0), **{f"l{i}": t for i, t in enumerate(tangents, start=1)}},
        [(f"e{i}", "q", f"l{i}", []) for i in range(1, 5)],
        name="star4",
    )
    ntc = ntc_vertex(tangent_star(graph, "q"))
    doubled = double(graph)
    best = min(
        vertex_passage_curvature(graph, euler_circuit(doubled, seed=seed, connected=False))["q"]
        for seed in range(seeds)
    ) / 2
    return [
        Check(
            "degree4-strictness",
            "ntc below 2a",
            f"< {2 * STAR_ALPHA - 1e-3:.6g}",
            f"{ntc:.12g}",
            "1e-3",
            ntc < 2 * STAR_ALPHA - 1e-3,
        ),
        _close("degree4-strictness", "best pairing", 2 * STAR_ALPHA, best, 1e-9, "2a"),
    ]


# Crofton formula


def crofton() -> List[Check]:
    graphs = [
        embed_cycle(4, name="square"),
        embed_butterfly(name="butterfly"),
        embed_theta(3, segments=256, name="theta"),
        embed_complete(4, name="K4"),
    ]
    checks = []
    for graph in graphs:
        exact = ntc_total(graph)
        result = crofton_ntc(graph, "monte_carlo", CROFTON_SAMPLES, seed=REPRO_SEED)
        tol = max(3 * result.stderr, 0.01 * exact)
        checks.append(_close("crofton", graph.name, exact, result.estimate, tol))
    return checks


def cylindrical_shrink_limit() -> List[Check]:
    checks = []
    for graph in (embed_complete(4, name="K4"), embed_butterfly(name="butterfly")):
        e, _ = perturb_direction(graph, SHRINK_DIRECTION)
        limit = 2 * math.pi * float(mu(graph, e))
        small = ntc_total(cylindrical_shrink(graph, e, 1e-4))
        checks.append(
            _close("cylindrical-shrink", f"{graph.name} limit", limit, small, 0.01 * limit)
        )
        distances = [
            abs(ntc_total(cylindrical_shrink(graph, e, delta)) - limit)
            for delta in (1.0, 0.1, 0.01, 0.001)
        ]
        monotone = all(b <= a + 1e-9 for a, b in zip(distances, distances[1:]))
        checks.append(
            Check(
                "cylindrical-shrink",
                f"{graph.name} monotone",
                "non-increasing distance",
                ", ".join(f"{d:.4g}" for d in distances),
                "1e-9",
                monotone,
            )
        )
    return checks


# Flat-map minima

FAMILY_MINIMA = (
    "complete:4", "complete:5", "complete:6", "complete:7",
    "bipartite:2,2", "bipartite:3,2", "bipartite:3,3", "bipartite:4,3", "bipartite:4,4",
    "theta:3", "theta:4", "theta:5", "theta:6",
    "ladder:3", "ladder:4", "ladder:5",
    "wheel:4", "wheel:5", "wheel:6",
    "ring:3", "triple_circles", "triple_theta",
)  # fmt: skip

MINIMUM_WIDTHS = {"complete:4": 4, "complete:5": 6, "complete:6": 9}


@functools.lru_cache(maxsize=None)
def _flat(family: str):
    return flat_min(generate(family), name=family)


def family_minima() -> List[Check]:
    checks = []
    for family in FAMILY_MINIMA:
        result = _flat(family)
        expected = catalog_value(family)
        checks.append(
            Check(
                "family-minima",
                family,
                expected.ntc_str(),
                result.ntc_star,
                "exact",
                result.mu_star == expected,
            )
        )
        bridge = catalog_bridge(family)
        if family == "triple_circles" and bridge is not None:
            checks.append(
                Check("family-minima", f"{family} bridge", str(bridge), str(result.bridge),
                      "exact", result.bridge == bridge)
            )
    return checks


def width() -> List[Check]:
    checks = [
        Check("width", family, str(value), str(_flat(family).width_star), "exact",
              _flat(family).width_star == value)
        for family, value in MINIMUM_WIDTHS.items()
    ]
    # mu >= width/2 reads 2*mu >= width
    violations = sum(
        1 for family in FAMILY_MINIMA if _flat(family).mu_star.doubled < _flat(family).width_star
    )
    checks.append(_count("width", "mu* >= width*/2", violations, len(FAMILY_MINIMA)))
    return checks


# Double covers


def _random_graphs(experiment: int, count: int) -> Iterable[Tuple[int, SpatialGraph]]:
    for trial in range(count):
        rng = _rng(experiment, trial)
        vertices = int(rng.integers(3, 6))
        cg = random_multigraph(rng, vertices, vertices + int(rng.integers(0, 3)))
        yield trial, random_embedding(cg, rng, joints=1, name=f"random{trial}")


def trivalent_identity(random_graphs: int = 20, circuits: int = 10) -> List[Check]:
    graphs = [embed_theta(3, name="theta"), embed_ladder(3, name="ladder3")]
    for trial in range(random_graphs):
        cg = random_trivalent(4 + 2 * (trial % 3), seed=REPRO_SEED + trial)
        graphs.append(random_embedding(cg, _rng(6, trial), joints=1, name=f"trivalent{trial}"))
    checks = []
    for graph in graphs:
        twice = 2 * ntc_total(graph)
        doubled = double(graph)
        worst = max(
            abs(circuit_curvature(graph, euler_circuit(doubled, nonreversing=True, seed=s)) - twice)
            for s in range(circuits)
        )
        checks.append(
            _close("trivalent-identity", graph.name, 0.0, worst / twice, 1e-9, "0 relative")
        )
    return checks


def circuit_independence(graphs: int = 10, circuits: int = 10, directions: int = 50) -> List[Check]:
    violations = trials = 0
    for trial, graph in _random_graphs(7, graphs):
        doubled = double(graph)
        found = [euler_circuit(doubled, seed=s) for s in range(circuits)]
        for e in uniform_sphere(_rng(70, trial), directions):
            e, _ = perturb_direction(graph, e)
            for q in graph.vertex_ids:
                expected = nlm(graph, e, q)
                for circuit in found:
                    trials += 1
                    violations += nlm_from_circuit(graph, circuit, e, q) != expected
    return [_count("circuit-independence", "nlm from circuits", violations, trials)]


# Refinement and the wild curve


def refinement(trials: int = 1000) -> List[Check]:
    violations = skipped = 0
    for trial, graph in _random_graphs(8, trials):
        rng = _rng(80, trial)
        edge = graph.edges[int(rng.integers(len(graph.edges)))]
        segment = int(rng.integers(len(edge.joints) + 1))
        finer = refine_segment(graph, edge.id, segment, rng.uniform(-1, 1, 3))
        e, _ = perturb_direction(finer, uniform_sphere(rng, 1)[0])
        if not is_generic(graph, e).generic:
            skipped += 1
            continue
        violations += mu(finer, e) < mu(graph, e)
    if skipped:
        logger.info("Refinement: %d trials skipped as non-generic", skipped)
    return [_count("refinement", "mu never decreases", violations, trials - skipped)]


def wild_curve(samples_per_arch: int = 64) -> List[Check]:
    checks = []
    for arches in (5, 10, 20):
        polygon = inscribe(wild_curve_arc(10, arches), samples_per_arch * arches + 1)
        total = joint_angle_sum(polygon)
        bound = 0.9 * arches * math.pi
        checks.append(
            Check("wild-curve", f"{arches} arches", f">= {bound:.6g}", f"{total:.6g}", "",
                  total >= bound)
        )
    return checks


# Property suites


def property_suites() -> List[Check]:
    floor = order = 0
    for trial in range(500):
        rng = _rng(12, trial)
        star = random_star(rng, int(rng.choice([3, 5, 7])))
        floor += ntc_vertex(star) < math.pi / 2 - 1e-9
        star = random_star(rng, int(rng.integers(2, 7)))
        order += tc_vertex(star) < (star.degree - 1) * ntc_vertex(star) - 1e-9

    fibers = 0
    for trial, graph in _random_graphs(120, 200):
        rng = _rng(121, trial)
        e, _ = perturb_direction(graph, uniform_sphere(rng, 1)[0])
        result = profile(graph, e)
        heights = [point["height"] for point in result.critical]
        try:
            fiber_count(graph, e, rng.uniform(min(heights), max(heights)))
        except errors.NumericalCheckFailed:
            fibers += 1
        else:
            fibers += result.nlm_sum != 0

    subadditive = 0
    for trial, first in _random_graphs(122, 100):
        rng = _rng(123, trial)
        cg = random_multigraph(rng, 3, 4)
        second = random_embedding(cg, rng, pinned={"v0": first.vertices["v0"]}, name="second")
        subadditive += not subadditivity_defect(first, second, samples=8, seed=trial).subadditive

    return [
        _count("property-suites", "odd-degree floor", floor, 500),
        _count("property-suites", "tc >= (d-1) ntc", order, 500),
        _count("property-suites", "nlm sum and fiber identity", fibers, 200),
        _count("property-suites", "subadditivity", subadditive, 100),
    ]


EXPERIMENTS: Dict[str, Callable[[], List[Check]]] = {
    "vertex-table": vertex_table,
    "crofton": crofton,
    "butterfly": butterfly,
    "family-minima": family_minima,
    "width": width,
    "trivalent-identity": trivalent_identity,
    "circuit-independence": circuit_independence,
    "refinement": refinement,
    "degree4-strictness": degree4_strictness,
    "wild-curve": wild_curve,
    "cylindrical-shrink": cylindrical_shrink_limit,
    "property-suites": property_suites,
}


def repro(which: str = "all") -> ReproReport:
    """Run one experiment by id, or all of them.

    Raises:
        BadParameters: unknown experiment id.
    """
    if which == "all":
        names = list(EXPERIMENTS)
    elif which in EXPERIMENTS:
        names = [which]
    else:
        raise errors.BadParameters(
            f"Unknown experiment {which!r}; use 'all' or one of {sorted(EXPERIMENTS)}"
        )
    checks: List[Check] = []
    for name in names:
        logger.info("Running experiment %s", name)
        checks.extend(EXPERIMENTS[name]())
    failed = [check for check in checks if not check.passed]
    for check in failed:
        logger.error(
            "%s/%s failed: expected %s, computed %s", check.experiment, check.name,
            check.expected, check.computed,
        )
    return ReproReport(experiments=names, checks=checks, failed=len(failed), passed=not failed)
