"""Sphere quadrature of mu(e): NTC = 1/2 * integral of mu over S^2."""

import math
from typing import Tuple

import numpy as np
from scipy.spatial.transform import Rotation

from .. import __config__ as cfg
from ..attrdict import AttrDict
from ..graph import SpatialGraph
from ..logger import logger
from ..projection import mu, mu_many, perturb_direction
from ..utils import errors
from ..utils.random_utils import block_generator, map_blocks
from ..utils.sphere import fibonacci_sphere, uniform_sphere

SCHEMES = ("monte_carlo", "fibonacci")
SCHEME_ALIASES = {"mc": "monte_carlo", "monte_carlo": "monte_carlo", "fibonacci": "fibonacci"}


class QuadratureResult(AttrDict):
    """Crofton estimate of NTC.

    Keys: scheme, seed, samples, rejected, estimate (radians), stderr,
    mu_mean. For the rotated lattice `stderr` is the sample spread over
    sqrt(n), an indicator rather than a confidence bound.
    """

    def text(self) -> str:
        return self.output(
            ["estimate__rad__.9g", "stderr__.3e", "samples", "rejected", "scheme", "seed"],
            max_length=1,
        )


def lattice_directions(samples: int, seed: int) -> np.ndarray:
    """Fibonacci lattice under a seeded uniformly random rotation."""
    rotation = Rotation.random(random_state=seed).as_matrix()
    return fibonacci_sphere(samples) @ rotation.T


def _resolve(graph: SpatialGraph, directions: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """mu doubled of every direction, perturbing non-generic ones; NaN on rejection."""
    values, generic = mu_many(graph, directions)
    values = values.astype(float)
    for row in np.flatnonzero(~generic):
        try:
            e, _ = perturb_direction(graph, directions[row])
        except errors.NonGenericDirection:
            values[row] = np.nan
            continue
        values[row] = mu(graph, e).doubled
    return values, ~np.isnan(values)


def crofton_ntc(
    graph: SpatialGraph, scheme: str = "monte_carlo", samples: int = 200_000, seed: int = 0
) -> QuadratureResult:
    """Estimate NTC as 2*pi * mean mu(e) over sampled directions.

    Args:
        scheme: 'monte_carlo' (alias 'mc') for uniform random directions drawn
            per block from a Philox stream, or 'fibonacci' for a randomly
            rotated Fibonacci lattice.
        samples: number of directions, at least 10.
        seed: seed of the directions; results are reproducible.

    Raises:
        BadParameters: unknown scheme or fewer than 10 samples.
        ExcessiveRejections: if non-generic directions exceed MAX_REJECTION_RATE.
    """
    if scheme not in SCHEME_ALIASES:
        raise errors.BadParameters(f"Unknown scheme {scheme!r}; use one of {SCHEMES}")
    scheme = SCHEME_ALIASES[scheme]
    if samples < 10:
        raise errors.BadParameters(f"Need at least 10 samples, got {samples}")

    blocks = range(math.ceil(samples / cfg.MC_BLOCK))
    if scheme == "monte_carlo":

        def run(block):
            size = min(cfg.MC_BLOCK, samples - block * cfg.MC_BLOCK)
            return _resolve(graph, uniform_sphere(block_generator(seed, block), size))

    else:
        lattice = lattice_directions(samples, seed)

        def run(block):
            return _resolve(graph, lattice[block * cfg.MC_BLOCK : (block + 1) * cfg.MC_BLOCK])

    results = map_blocks(run, blocks)
    values = np.concatenate([v for v, _ in results])
    accepted = np.concatenate([a for _, a in results])
    rejected = int(np.count_nonzero(~accepted))
    if rejected:
        logger.warning("%d of %d directions rejected as non-generic", rejected, samples)
    if rejected > cfg.MAX_REJECTION_RATE * samples:
        raise errors.ExcessiveRejections(
            f"{rejected} of {samples} directions stayed non-generic for {graph.name!r}"
        )

    kept = values[accepted]
    mu_mean = np.sum(kept) / (2 * len(kept))
    spread = np.std(kept / 2, ddof=1) if len(kept) > 1 else math.inf
    return QuadratureResult(
        scheme=scheme,
        seed=seed,
        samples=samples,
        rejected=rejected,
        mu_mean=float(mu_mean),
        estimate=float(2 * math.pi * mu_mean),
        stderr=float(2 * math.pi * spread / math.sqrt(len(kept))),
    )
