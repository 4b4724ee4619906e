"""Order-preserving parallel map used for independent per-atom and per-η work."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor


def parallel_map[T, R](fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Apply *fn* to every item; results keep the input order.

    ``workers <= 1`` runs sequentially in the calling thread, which is what
    deterministic mode uses.
    """
    materialized = list(items)
    if workers <= 1 or len(materialized) <= 1:
        return [fn(item) for item in materialized]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, materialized))
