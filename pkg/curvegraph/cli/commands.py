"""Subcommand handlers. Each takes a RunConfig and returns a CommandResult."""

import json
import math
from typing import List, NamedTuple, Optional

import numpy as np

from .. import storage
from ..attrdict import AttrDict
from ..crofton import crofton_ntc, mu_heatmap, plot_mu_heatmap
from ..curvature import circuit_curvature, curvature_report, ntc_total, vertex_report
from ..double_cover import double, euler_circuit, vertex_passage_curvature
from ..graph import SpatialGraph, VertexStar, read_graph, save_graph, tangent_star
from ..minimizer import (
    catalog,
    catalog_entry,
    catalog_value,
    flat_min,
    flat_min_exhaustive,
    generate,
    parse_family,
    trivalent_formula_check,
)
from ..projection import profile
from ..utils import errors
from ..utils.file_read import write_file
from .config import RunConfig
from .repro import repro

DEFAULT_CROFTON_SAMPLES = 200_000


class CommandResult(NamedTuple):
    """A report, plus CSV or raw text when the command has such a form."""

    report: Optional[AttrDict] = None
    csv: Optional[str] = None
    raw: Optional[str] = None
    status: int = 0


def _single_graph(config: RunConfig) -> SpatialGraph:
    if len(config.inputs) != 1:
        raise errors.BadParameters(
            f"{config.command} needs exactly one graph file, got {len(config.inputs)}"
        )
    return read_graph(config.inputs[0])


def parse_vectors(text: str) -> np.ndarray:
    """Parse 'x,y,z;x,y,z;...' into an array of shape (n, 3)."""
    try:
        rows = [[float(x) for x in item.split(",")] for item in text.split(";") if item.strip()]
    except ValueError as exc:
        raise errors.BadParameters(f"Cannot parse vectors {text!r}") from exc
    if not rows or any(len(row) != 3 for row in rows):
        raise errors.BadParameters(f"Vectors should be 'x,y,z;x,y,z;...', got {text!r}")
    return np.array(rows)


def parse_levels(text: Optional[str]) -> Optional[List[float]]:
    if text is None:
        return None
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise errors.BadParameters(f"Cannot parse levels {text!r}") from exc


def ntc(config: RunConfig) -> CommandResult:
    graph = _single_graph(config)
    report = curvature_report(
        graph, config.options.get("functional", "ntc"), config.options.get("breakdown", False)
    )
    return CommandResult(report)


def vertex(config: RunConfig) -> CommandResult:
    tangents = config.options.get("tangents")
    if tangents is not None:
        star = VertexStar.from_vectors(parse_vectors(tangents))
    else:
        q = config.options.get("vertex")
        if q is None:
            raise errors.BadParameters("Give --tangents, or a graph file and --vertex")
        star = tangent_star(_single_graph(config), q)
    report = vertex_report(star, mc_samples=config.options.get("mc_samples"), seed=config.seed)
    return CommandResult(report)


def mu(config: RunConfig) -> CommandResult:
    graph = _single_graph(config)
    direction = parse_vectors(config.options["dir"])[0]
    report = profile(graph, direction, levels=parse_levels(config.options.get("levels")))
    return CommandResult(report)


def crofton(config: RunConfig) -> CommandResult:
    """Crofton estimate compared with the exact total; exit 2 on disagreement."""
    graph = _single_graph(config)
    samples = config.samples or DEFAULT_CROFTON_SAMPLES
    result = crofton_ntc(graph, config.scheme, samples, config.seed)
    exact = ntc_total(graph)
    tolerance = max(3 * result.stderr, 0.01 * exact)
    result.ntc_total = exact
    result.difference = result.estimate - exact
    result.tolerance = tolerance
    result.agrees = abs(result.difference) <= tolerance
    if config.options.get("h5"):
        storage.save_h5(config.options["h5"], name=graph.name, **result)
    if not result.agrees:
        raise errors.NumericalCheckFailed(
            f"Crofton estimate {result.estimate:.9g} differs from ntc_total {exact:.9g} "
            f"by more than {tolerance:.3g}"
        )
    return CommandResult(result)


def heatmap(config: RunConfig) -> CommandResult:
    graph = _single_graph(config)
    grid = mu_heatmap(graph, config.options.get("resolution", 64))
    if config.options.get("h5"):
        grid.save_h5(config.options["h5"])
    if config.options.get("png"):
        plot_mu_heatmap(grid, config.options["png"])
    report = AttrDict(
        name=graph.name,
        resolution=len(grid.lat),
        minimum_mu=grid.minimum(),
        non_generic=int(np.count_nonzero(~grid.generic)),
    )
    return CommandResult(report, csv=grid.to_csv())


def doublecover(config: RunConfig) -> CommandResult:
    graph = _single_graph(config)
    doubled = double(graph)
    nonreversing = config.options.get("nonreversing", False)
    total = ntc_total(graph)
    circuits = []
    for k in range(config.options.get("circuits", 1)):
        seed = config.seed + k
        circuit = euler_circuit(doubled, nonreversing=nonreversing, seed=seed)
        curvature = circuit_curvature(graph, circuit)
        circuits.append(
            dict(
                seed=seed,
                components=len(circuit.components),
                traversals=len(circuit),
                reversals=len(circuit.immediate_reversals()),
                curvature=curvature,
                ratio=curvature / total if total else math.nan,
                vertices=vertex_passage_curvature(graph, circuit),
                circuit=circuit,
            )
        )
    report = AttrDict(
        name=graph.name, ntc_total=total, twice_ntc=2 * total, nonreversing=nonreversing,
        circuits=circuits,
    )
    return CommandResult(report)


def minimize(config: RunConfig) -> CommandResult:
    family = config.options.get("family")
    if family is not None:
        family = parse_family(family)
        graph, name = generate(family), str(family)
    elif config.options.get("combinatorial"):
        spatial = _single_graph(config)
        graph, name = spatial.combinatorial(), spatial.name
    else:
        raise errors.BadParameters("Give --family, or a graph file with --combinatorial")

    result = flat_min(graph, name=name)
    entry = catalog_entry(family) if family is not None else None
    if entry is not None:
        expected = catalog_value(family)
        result.catalog = expected.ntc_str()
        result.catalog_matches = expected == result.mu_star
        if entry.proven and not result.catalog_matches:
            raise errors.NumericalCheckFailed(
                f"{name}: flat minimum {result.ntc_star} differs from the known {result.catalog}"
            )
    if config.options.get("exhaustive"):
        oracle = flat_min_exhaustive(graph, name=name)
        result.exhaustive = oracle
        if oracle.mu_star != result.mu_star:
            raise errors.NumericalCheckFailed(
                f"{name}: exhaustive minimum {oracle.mu_star.ntc_str()} differs from "
                f"{result.ntc_star}"
            )
    if config.options.get("formula"):
        result.formula_check = trivalent_formula_check(graph, name=name)
    if config.options.get("h5"):
        storage.save_h5(
            config.options["h5"],
            name=name,
            mu_star_doubled=result.mu_star.doubled,
            bridge_doubled=result.bridge.doubled,
            width_star=result.width_star,
            evaluated=result.evaluated,
            argmin_orders=[list(a.order) for a in result.argmin],
        )
    return CommandResult(result)


class CatalogReport(AttrDict):
    def text(self) -> str:
        return "\n".join(
            f"{row['family']:<15} {row['ntc_min']:<40} {row['result']}"
            + ("" if row["proven"] else " (not proven)")
            for row in self.families
        )

    def to_csv(self) -> str:
        lines = ["family,ntc_min,result,proven"]
        lines.extend(
            f"{row['family']},\"{row['ntc_min']}\",\"{row['result']}\",{int(row['proven'])}"
            for row in self.families
        )
        return "\n".join(lines) + "\n"


def show_catalog(config: RunConfig) -> CommandResult:
    report = CatalogReport(families=catalog())
    return CommandResult(report, csv=report.to_csv())


def gen(config: RunConfig) -> CommandResult:
    family = parse_family(config.options["family"])
    if config.options.get("combinatorial"):
        graph = generate(family)
        text = json.dumps(
            {
                "name": str(family),
                "vertices": list(graph.vertices),
                "edges": [list(edge) for edge in graph.edges],
            },
            indent=2,
            sort_keys=True,
        )
    else:
        text = save_graph(generate(family, embed=True)).rstrip("\n")
    if config.options.get("output"):
        write_file(config.options["output"], text + "\n")
    return CommandResult(raw=text)


def run_repro(config: RunConfig) -> CommandResult:
    report = repro(config.options.get("experiment", "all"))
    return CommandResult(report, status=0 if report.passed else 2)


COMMANDS = {
    "ntc": ntc,
    "vertex": vertex,
    "mu": mu,
    "crofton": crofton,
    "heatmap": heatmap,
    "doublecover": doublecover,
    "minimize": minimize,
    "catalog": show_catalog,
    "gen": gen,
    "repro": run_repro,
}
