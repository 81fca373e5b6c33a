"""Graph families: combinatorial generators, explicit embeddings and known minima.

A family is written `name:param,param`, e.g. `complete:5`, `bipartite:3,3`,
`butterfly:0.4636`, `triple_circles`.
"""

import math
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from ..graph import CombinatorialGraph, HalfInt, SpatialGraph
from ..utils import errors

Params = Tuple[float, ...]

DEFAULT_SEGMENTS = 32


class Family(NamedTuple):
    name: str
    params: Params

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}:" + ",".join(_param_str(p) for p in self.params)


def _param_str(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def parse_family(text: str) -> Family:
    """Parse 'name:p1,p2' into a Family, filling defaults.

    Raises:
        BadParameters: unknown name or parameters out of range.
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower().replace("-", "_")
    if name not in _BUILDERS:
        raise errors.BadParameters(f"Unknown family {name!r}; known: {sorted(_BUILDERS)}")
    try:
        params = tuple(float(p) for p in rest.split(",") if p.strip())
    except ValueError as exc:
        raise errors.BadParameters(f"Bad parameters in family {text!r}") from exc
    builder = _BUILDERS[name]
    if len(params) < builder.required or len(params) > len(builder.defaults) + builder.required:
        raise errors.BadParameters(
            f"Family {name!r} takes {builder.required} to "
            f"{builder.required + len(builder.defaults)} parameters, got {len(params)}"
        )
    params = params + builder.defaults[len(params) - builder.required :]
    builder.check(params)
    return Family(name, params)


def _as_int(value: float, what: str, minimum: int) -> int:
    if not float(value).is_integer() or value < minimum:
        raise errors.BadParameters(f"{what} should be an integer >= {minimum}, got {value}")
    return int(value)


# Combinatorial generators


def _from_networkx(graph: nx.Graph, names: Callable[[int], str]) -> CombinatorialGraph:
    return CombinatorialGraph.from_networkx(nx.relabel_nodes(graph, names))


def complete(m: int) -> CombinatorialGraph:
    return _from_networkx(nx.complete_graph(m), lambda i: f"v{i}")


def bipartite(m: int, n: int) -> CombinatorialGraph:
    return _from_networkx(
        nx.complete_bipartite_graph(m, n), lambda i: f"a{i}" if i < m else f"b{i - m}"
    )


def theta(m: int) -> CombinatorialGraph:
    return CombinatorialGraph(
        vertices=("q-", "q+"), edges=tuple((f"e{k}", "q-", "q+") for k in range(m))
    )


def wheel(m: int) -> CombinatorialGraph:
    """Hub of degree m joined to every vertex of an m-cycle."""
    return _from_networkx(nx.wheel_graph(m + 1), lambda i: "hub" if i == 0 else f"r{i}")


def ladder(m: int) -> CombinatorialGraph:
    """Circular ladder with m rungs (the prism over an m-gon)."""
    return _from_networkx(
        nx.circular_ladder_graph(m), lambda i: f"a{i}" if i < m else f"b{i - m}"
    )


def ring(m: int) -> CombinatorialGraph:
    """Vertices v1..v2m; v(2i-1), v(2i) joined by three edges; v(2i), v(2i+1) by one."""
    vertices = tuple(f"v{j}" for j in range(1, 2 * m + 1))
    edges = []
    for i in range(1, m + 1):
        a, b, c = f"v{2 * i - 1}", f"v{2 * i}", f"v{2 * i % (2 * m) + 1}"
        edges.extend(
            [(f"big{i}", a, b), (f"inner{i}", a, b), (f"outer{i}", a, b), (f"link{i}", b, c)]
        )
    return CombinatorialGraph(vertices, tuple(edges))


def sinewave(m: int) -> CombinatorialGraph:
    """Two cycles through the same 2m vertices: every consecutive pair joined twice."""
    vertices = tuple(f"v{k}" for k in range(1, 2 * m + 1))
    edges = []
    for k in range(1, 2 * m + 1):
        a, b = f"v{k}", f"v{k % (2 * m) + 1}"
        edges.extend([(f"p{k}", a, b), (f"n{k}", a, b)])
    return CombinatorialGraph(vertices, tuple(edges))


def cycle(m: int) -> CombinatorialGraph:
    """m-cycle; m = 1 is a loop at v0."""
    vertices = tuple(f"v{k}" for k in range(m))
    return CombinatorialGraph(
        vertices, tuple((f"e{k}", f"v{k}", f"v{(k + 1) % m}") for k in range(m))
    )


def butterfly() -> CombinatorialGraph:
    vertices = ("q0-", "q0+", "q1-", "q1+", "q2-", "q2+")
    edges = (
        ("L0", "q0-", "q0+"),
        ("L1", "q1-", "q1+"),
        ("L2", "q2-", "q2+"),
        ("a1+", "q0+", "q1+"),
        ("a2+", "q0+", "q2+"),
        ("a1-", "q0-", "q1-"),
        ("a2-", "q0-", "q2-"),
    )
    return CombinatorialGraph(vertices, edges)


def triple_circles() -> CombinatorialGraph:
    """p0 joined to p1, p2, p3, each of which carries a loop."""
    edges = [(f"s{i}", "p0", f"p{i}") for i in (1, 2, 3)]
    edges += [(f"c{i}", f"p{i}", f"p{i}") for i in (1, 2, 3)]
    return CombinatorialGraph(("p0", "p1", "p2", "p3"), tuple(edges))


def triple_theta() -> CombinatorialGraph:
    """Three theta graphs sharing the vertex w (degree 9)."""
    edges = [(f"t{i}.{k}", "w", f"a{i}") for i in (1, 2, 3) for k in range(3)]
    return CombinatorialGraph(("w", "a1", "a2", "a3"), tuple(edges))


# Embeddings


def _arc(center, radius, start, stop, segments) -> np.ndarray:
    """Interior points of a circular arc in the plane z = 0."""
    angles = np.linspace(start, stop, segments + 1)[1:-1]
    return np.stack(
        [center[0] + radius * np.cos(angles), center[1] + radius * np.sin(angles), 0 * angles],
        axis=1,
    )


def _moment_points(count: int) -> List[np.ndarray]:
    t = np.linspace(-1.0, 1.0, count)
    return [np.array([x, x**2, x**3]) for x in t]


def _straight(cg: CombinatorialGraph, positions: Dict[str, np.ndarray], name: str):
    return SpatialGraph.build(positions, [(eid, u, v, []) for eid, u, v in cg.edges], name=name)


def embed_complete(m: int, name: str = "") -> SpatialGraph:
    """Straight K_m on the moment curve (t, t^2, t^3); no four vertices are coplanar."""
    cg = complete(m)
    return _straight(cg, dict(zip(cg.vertices, _moment_points(m))), name)


def embed_bipartite(m: int, n: int, name: str = "") -> SpatialGraph:
    cg = bipartite(m, n)
    return _straight(cg, dict(zip(cg.vertices, _moment_points(m + n))), name)


def embed_theta(m: int = 3, segments: int = DEFAULT_SEGMENTS, name: str = "") -> SpatialGraph:
    """Planar theta with vertices (0, +-1, 0).

    Edge k follows x = s_k cos(t), y = sin(t) with s_k evenly spaced in
    [-1, 1]; s = 0 is the straight chord, s = +-1 the two semicircles. Each
    curved edge has `segments` segments (an even number).
    """
    if segments < 2 or segments % 2:
        raise errors.BadParameters(f"segments should be even and >= 2, got {segments}")
    t = np.linspace(-np.pi / 2, np.pi / 2, segments + 1)[1:-1]
    edges = []
    for k, s in enumerate(np.linspace(-1.0, 1.0, m)):
        joints = [] if abs(s) < 1e-12 else np.stack([s * np.cos(t), np.sin(t), 0 * t], axis=1)
        edges.append((f"e{k}", "q-", "q+", joints))
    return SpatialGraph.build({"q-": (0, -1, 0), "q+": (0, 1, 0)}, edges, name=name)


def embed_wheel(m: int, name: str = "") -> SpatialGraph:
    """Planar wheel: hub at the origin, rim on the unit circle, straight edges."""
    cg = wheel(m)
    positions = {"hub": np.zeros(3)}
    for i in range(1, m + 1):
        angle = 2 * np.pi * (i - 1) / m
        positions[f"r{i}"] = np.array([np.cos(angle), np.sin(angle), 0.0])
    return _straight(cg, positions, name)


def embed_ladder(m: int, name: str = "") -> SpatialGraph:
    """Prism over a regular m-gon, rungs along z."""
    cg = ladder(m)
    positions = {}
    for i in range(m):
        angle = 2 * np.pi * i / m
        positions[f"a{i}"] = np.array([np.cos(angle), np.sin(angle), 0.0])
        positions[f"b{i}"] = np.array([np.cos(angle), np.sin(angle), 1.0])
    return _straight(cg, positions, name)


def embed_cycle(m: int, segments: int = DEFAULT_SEGMENTS, name: str = "") -> SpatialGraph:
    """Regular m-gon; for m = 1 and 2 the edges follow the unit circle."""
    cg = cycle(m)
    if m >= 3:
        positions = {
            f"v{k}": np.array([np.cos(2 * np.pi * k / m), np.sin(2 * np.pi * k / m), 0.0])
            for k in range(m)
        }
        return _straight(cg, positions, name)
    per_edge = max(segments // m, 2)
    positions, edges = {}, []
    for k in range(m):
        start = 2 * np.pi * k / m
        positions[f"v{k}"] = np.array([np.cos(start), np.sin(start), 0.0])
        joints = _arc((0, 0), 1.0, start, start + 2 * np.pi / m, per_edge)
        edges.append((f"e{k}", f"v{k}", f"v{(k + 1) % m}", joints))
    return SpatialGraph.build(positions, edges, name=name)


def embed_ring(m: int, segments: int = DEFAULT_SEGMENTS, name: str = "") -> SpatialGraph:
    """Unit circle crossed by m small circles, each at two consecutive vertices."""
    half = np.pi / (3 * m)
    radius = 2 * np.sin(half / 2)
    positions: Dict[str, np.ndarray] = {}
    edges = []
    for i in range(1, m + 1):
        mid = 2 * np.pi * (i - 1) / m
        positions[f"v{2 * i - 1}"] = np.array([np.cos(mid - half), np.sin(mid - half), 0.0])
        positions[f"v{2 * i}"] = np.array([np.cos(mid + half), np.sin(mid + half), 0.0])
    for i in range(1, m + 1):
        mid = 2 * np.pi * (i - 1) / m
        a, b, c = f"v{2 * i - 1}", f"v{2 * i}", f"v{2 * i % (2 * m) + 1}"
        center = np.array([np.cos(mid), np.sin(mid)])
        start = math.atan2(positions[a][1] - center[1], positions[a][0] - center[0])
        stop = math.atan2(positions[b][1] - center[1], positions[b][0] - center[0])
        # the outer arc passes the outward direction `mid`, the inner one the opposite
        outer_start = mid + _wrap(start - mid)
        outer_stop = mid + _wrap(stop - mid)
        edges.append((f"big{i}", a, b, _arc((0, 0), 1.0, mid - half, mid + half, segments)))
        edges.append((f"outer{i}", a, b, _arc(center, radius, outer_start, outer_stop, segments)))
        edges.append(
            (f"inner{i}", a, b, _arc(center, radius, outer_start, outer_stop - 2 * np.pi, segments))
        )
        next_mid = 2 * np.pi * i / m
        edges.append(
            (f"link{i}", b, c, _arc((0, 0), 1.0, mid + half, next_mid - half, segments))
        )
    return SpatialGraph.build(positions, edges, name=name)


def _wrap(angle: float) -> float:
    """Wrap to (-pi, pi]."""
    return -((-angle + np.pi) % (2 * np.pi) - np.pi)


def embed_sinewave(
    m: int, epsilon: float = 0.2, segments: int = 8, name: str = ""
) -> SpatialGraph:
    """Polar curves r = 1 +- epsilon sin(m t), meeting at t = k pi / m."""
    positions, edges = {}, []
    for k in range(1, 2 * m + 1):
        angle = k * np.pi / m
        positions[f"v{k}"] = np.array([np.cos(angle), np.sin(angle), 0.0])
    for k in range(1, 2 * m + 1):
        t = np.linspace(k * np.pi / m, (k + 1) * np.pi / m, segments + 1)[1:-1]
        a, b = f"v{k}", f"v{k % (2 * m) + 1}"
        for tag, sign in (("p", 1.0), ("n", -1.0)):
            r = 1 + sign * epsilon * np.sin(m * t)
            joints = np.stack([r * np.cos(t), r * np.sin(t), 0 * t], axis=1)
            edges.append((f"{tag}{k}", a, b, joints))
    return SpatialGraph.build(positions, edges, name=name)


def embed_butterfly(alpha: float = math.atan(0.5), name: str = "") -> SpatialGraph:
    """Planar butterfly with q0+- = (0, +-1), q1+- = (1, +-(1 + cot a)), q2+- = (-1, ...)."""
    height = 1 + 1 / math.tan(alpha)
    positions = {
        "q0-": (0, -1, 0),
        "q0+": (0, 1, 0),
        "q1-": (1, -height, 0),
        "q1+": (1, height, 0),
        "q2-": (-1, -height, 0),
        "q2+": (-1, height, 0),
    }
    return _straight(butterfly(), positions, name)


def embed_triple_circles(segments: int = DEFAULT_SEGMENTS, name: str = "") -> SpatialGraph:
    positions = {"p0": np.zeros(3)}
    edges = []
    for i in (1, 2, 3):
        angle = 2 * np.pi * (i - 1) / 3
        direction = np.array([np.cos(angle), np.sin(angle), 0.0])
        positions[f"p{i}"] = 2 * direction
        center = 2.5 * direction
        loop = _arc(center, 0.5, angle + np.pi, angle + 3 * np.pi, segments)
        edges.append((f"s{i}", "p0", f"p{i}", []))
        edges.append((f"c{i}", f"p{i}", f"p{i}", loop))
    return SpatialGraph.build(positions, edges, name=name)


def embed_triple_theta(segments: int = DEFAULT_SEGMENTS, name: str = "") -> SpatialGraph:
    positions = {"w": np.zeros(3)}
    edges = []
    t = np.linspace(0.0, 1.0, segments + 1)[1:-1]
    for i in (1, 2, 3):
        angle = 2 * np.pi * (i - 1) / 3
        direction = np.array([np.cos(angle), np.sin(angle), 0.0])
        normal = np.array([-np.sin(angle), np.cos(angle), 0.0])
        positions[f"a{i}"] = 2 * direction
        for k, bulge in enumerate((-0.5, 0.0, 0.5)):
            joints = [] if bulge == 0 else (
                2 * t[:, None] * direction + bulge * np.sin(np.pi * t)[:, None] * normal
            )
            edges.append((f"t{i}.{k}", "w", f"a{i}", joints))
    return SpatialGraph.build(positions, edges, name=name)


# Registry


class _Builder(NamedTuple):
    required: int
    defaults: Params
    check: Callable[[Params], None]
    combinatorial: Callable[..., CombinatorialGraph]
    embed: Callable[..., SpatialGraph]


def _check_ints(*minimums: int) -> Callable[[Params], None]:
    def check(params: Params):
        for value, minimum in zip(params, minimums):
            _as_int(value, "Family parameter", minimum)

    return check


def _check_sinewave(params: Params):
    _as_int(params[0], "m", 2)
    if not 0 < params[1] < 1:
        raise errors.BadParameters(f"epsilon should be in (0, 1), got {params[1]}")


def _check_butterfly(params: Params):
    if not 0 < params[0] < math.pi / 2:
        raise errors.BadParameters(f"alpha should be in (0, pi/2), got {params[0]}")


def _ints(params: Params) -> List[int]:
    return [int(p) for p in params]


_BUILDERS: Dict[str, _Builder] = {
    "complete": _Builder(
        1, (), _check_ints(2), lambda p: complete(*_ints(p)), lambda p, n: embed_complete(*_ints(p), name=n)
    ),
    "bipartite": _Builder(
        2,
        (),
        _check_ints(1, 1),
        lambda p: bipartite(*_ints(p)),
        lambda p, n: embed_bipartite(*_ints(p), name=n),
    ),
    "theta": _Builder(
        1, (), _check_ints(2), lambda p: theta(*_ints(p)), lambda p, n: embed_theta(*_ints(p), name=n)
    ),
    "wheel": _Builder(
        1, (), _check_ints(3), lambda p: wheel(*_ints(p)), lambda p, n: embed_wheel(*_ints(p), name=n)
    ),
    "ladder": _Builder(
        1, (), _check_ints(3), lambda p: ladder(*_ints(p)), lambda p, n: embed_ladder(*_ints(p), name=n)
    ),
    "ring": _Builder(
        1, (), _check_ints(2), lambda p: ring(*_ints(p)), lambda p, n: embed_ring(*_ints(p), name=n)
    ),
    "sinewave": _Builder(
        1,
        (0.2,),
        _check_sinewave,
        lambda p: sinewave(int(p[0])),
        lambda p, n: embed_sinewave(int(p[0]), p[1], name=n),
    ),
    "cycle": _Builder(
        1, (), _check_ints(1), lambda p: cycle(*_ints(p)), lambda p, n: embed_cycle(*_ints(p), name=n)
    ),
    "butterfly": _Builder(
        0,
        (math.atan(0.5),),
        _check_butterfly,
        lambda p: butterfly(),
        lambda p, n: embed_butterfly(p[0], name=n),
    ),
    "triple_circles": _Builder(
        0, (), lambda p: None, lambda p: triple_circles(), lambda p, n: embed_triple_circles(name=n)
    ),
    "triple_theta": _Builder(
        0, (), lambda p: None, lambda p: triple_theta(), lambda p, n: embed_triple_theta(name=n)
    ),
}

FAMILIES = tuple(sorted(_BUILDERS))


def generate(family: Union[str, Family], embed: bool = False):
    """Return the combinatorial graph of `family`, or its embedding with `embed`.

    Examples:
        >>> generate("wheel:4").degrees() # -> {'hub': 4, 'r1': 3, ...}
        >>> ntc_total(generate("butterfly", embed=True)) # -> 5*pi - 4*atan(1/2)
    """
    family = parse_family(family) if isinstance(family, str) else family
    builder = _BUILDERS[family.name]
    if embed:
        return builder.embed(family.params, str(family))
    return builder.combinatorial(family.params)


# Closed-form minima of NTC, as 2*mu (so that NTC = pi * value)


class CatalogEntry(NamedTuple):
    family: str
    formula: str
    result: str
    value: Callable[[Params], int]
    bridge: Optional[Callable[[Params], HalfInt]] = None
    proven: bool = True


def _complete_value(p: Params) -> int:
    ell = int(p[0]) // 2
    return ell * ell if int(p[0]) % 2 == 0 else ell * (ell + 1)


CATALOG: Tuple[CatalogEntry, ...] = (
    CatalogEntry(
        "complete", "pi*l^2 (m = 2l), pi*l(l+1) (m = 2l+1)", "complete graph minimum",
        _complete_value,
    ),
    CatalogEntry(
        "bipartite", "ceil(m n / 2) * pi", "complete bipartite minimum",
        lambda p: math.ceil(int(p[0]) * int(p[1]) / 2),
    ),
    CatalogEntry("theta", "m * pi", "theta graph minimum", lambda p: int(p[0]),
                 lambda p: HalfInt(2)),
    CatalogEntry("ladder", "(2 + m) * pi", "ladder minimum", lambda p: 2 + int(p[0]),
                 lambda p: HalfInt(2)),
    CatalogEntry("wheel", "(2 + ceil(m/2)) * pi", "wheel minimum",
                 lambda p: 2 + math.ceil(int(p[0]) / 2)),
    CatalogEntry("ring", "2 * (m + 1) * pi", "ring graph minimum", lambda p: 2 * (int(p[0]) + 1)),
    CatalogEntry(
        "sinewave", "4 * pi", "sine-wave graph, upper bound from the embedding; "
        "the lower bound is checked by exhaustive search", lambda p: 4, proven=False,
    ),
    CatalogEntry("cycle", "2 * pi", "Fenchel bound", lambda p: 2, lambda p: HalfInt(2)),
    CatalogEntry("triple_circles", "5 * pi", "three circles on a tripod, bridge 3/2",
                 lambda p: 5, lambda p: HalfInt(3)),
    CatalogEntry("triple_theta", "6 * pi", "one-point union of three thetas", lambda p: 6,
                 lambda p: HalfInt(3)),
)

_CATALOG_BY_NAME = {entry.family: entry for entry in CATALOG}


def catalog() -> List[dict]:
    """The closed-form table: family, formula, where it comes from."""
    return [
        dict(family=entry.family, ntc_min=entry.formula, result=entry.result, proven=entry.proven)
        for entry in CATALOG
    ]


def catalog_value(family: Union[str, Family]) -> HalfInt:
    """Return the known minimum mu of `family` (NTC minimum = 2*pi*mu).

    Raises:
        BadParameters: if the family has no closed form.
    """
    family = parse_family(family) if isinstance(family, str) else family
    if family.name not in _CATALOG_BY_NAME:
        raise errors.BadParameters(f"Family {family.name!r} has no closed-form minimum")
    return HalfInt(_CATALOG_BY_NAME[family.name].value(family.params))


def catalog_bridge(family: Union[str, Family]) -> Optional[HalfInt]:
    family = parse_family(family) if isinstance(family, str) else family
    entry = _CATALOG_BY_NAME.get(family.name)
    if entry is None or entry.bridge is None:
        return None
    return entry.bridge(family.params)


def families_with_minimum() -> Sequence[str]:
    return tuple(entry.family for entry in CATALOG)


def catalog_entry(family: Union[str, Family]) -> Optional[CatalogEntry]:
    family = parse_family(family) if isinstance(family, str) else family
    return _CATALOG_BY_NAME.get(family.name)
