"""
Seeded random streams and the shared worker pool.

Every randomized operation accepts either an integer seed or a ready
``numpy.random.Generator``. Monte-Carlo runs are split into a fixed number of
chunks, each with its own spawned stream, so the merged result depends on the
seed only and never on how many workers happened to run the chunks.
"""

import logging
import secrets
from concurrent.futures import ThreadPoolExecutor, as_completed

import numpy as np

from .conf import get_setting

logger = logging.getLogger(__name__)


def resolve_seed(seed=None):
    """Return the integer seed to use, drawing one from OS entropy when absent."""
    if seed is None:
        return secrets.randbits(63)
    return int(seed)


def as_generator(rng=None):
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def spawn_generators(rng, count):
    """Derive ``count`` independent child streams from ``rng``."""
    return as_generator(rng).spawn(count)


def split_counts(total, chunks=None):
    """Split ``total`` draws into near-equal positive chunk sizes."""
    if chunks is None:
        chunks = get_setting("QBF_SAMPLING_CHUNKS", 16)
    chunks = max(1, min(int(chunks), int(total)))
    base, extra = divmod(int(total), chunks)
    return [base + (1 if index < extra else 0) for index in range(chunks)]


def run_parallel(func, items, max_workers=None):
    """
    Apply ``func`` to every item on the thread pool.

    Results come back in input order. A failing item is logged and re-raised.
    """
    items = list(items)
    if max_workers is None:
        max_workers = get_setting("QBF_MAX_WORKERS", 4)

    if max_workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    results = [None] * len(items)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = {executor.submit(func, item): index for index, item in enumerate(items)}
        for future in as_completed(futures):
            index = futures[future]
            try:
                results[index] = future.result()
            except Exception:
                logger.error(
                    "Parallel work item failed",
                    extra={"item_index": index, "items": len(items)},
                    exc_info=True,
                )
                raise
    return results


def seeded_streams(rng, count):
    """
    ``count`` child streams for an integer seed, ``None`` or a Generator.

    Returns the recorded seed (None when a Generator was passed) and the streams.
    """
    if isinstance(rng, np.random.Generator):
        return None, spawn_generators(rng, count)
    seed = resolve_seed(rng)
    return seed, spawn_generators(seed, count)
