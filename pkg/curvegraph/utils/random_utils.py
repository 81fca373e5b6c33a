"""Random utilities: seeded generators, hashing and the worker pool."""

import hashlib
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

import numpy as np

__all__ = ["block_generator", "text_seed", "thread_count", "map_blocks"]

_T = TypeVar("_T")
_R = TypeVar("_R")


def block_generator(seed: int, block: int = 0) -> np.random.Generator:
    """Return the counter-based generator of sample block `block`.

    Philox is keyed by `seed` and the block index occupies the high part of
    the counter, so block `b` draws the same numbers whichever thread runs it.
    """
    if seed < 0:
        raise ValueError(f"Seed should be non-negative, got {seed}")
    return np.random.Generator(np.random.Philox(key=seed, counter=block << 128))


def text_seed(text: str) -> int:
    """Derive a 63-bit seed from a text (e.g. a canonical graph document)."""
    return int(hashlib.sha256(text.encode("utf-8")).hexdigest()[:16], 16) >> 1


def thread_count() -> int:
    """Return the number of worker threads allowed by `CURVEGRAPH_THREADS`."""
    if "CURVEGRAPH_THREADS" in os.environ:
        try:
            return max(1, int(os.environ["CURVEGRAPH_THREADS"]))
        except ValueError as exc:
            raise ValueError(
                "CURVEGRAPH_THREADS should be a positive integer, "
                f"got {os.environ['CURVEGRAPH_THREADS']!r}"
            ) from exc
    return os.cpu_count() or 1


def map_blocks(func: Callable[[_T], _R], blocks: Iterable[_T], /) -> List[_R]:
    """Apply `func` to every block, in parallel when allowed, keeping the order."""
    blocks = list(blocks)
    workers = min(thread_count(), len(blocks))
    if workers <= 1:
        return [func(block) for block in blocks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, blocks))
