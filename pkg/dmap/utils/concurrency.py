from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, List, TypeVar

from dmap import logger

T = TypeVar("T")


def run_sharded(func: Callable[..., T], *args: Any, shard_count: int = 1, workers: int = 1, **kwargs: Any) -> List[T]:
    """
    Calls func(*args, shard_index=i, shard_count=shard_count, **kwargs) for
    every shard and returns the results in shard order.

    func must be a module-level function so worker processes can import it.
    """
    job = partial(func, *args, shard_count=shard_count, **kwargs)
    if workers <= 1 or shard_count <= 1:
        return [job(shard_index=i) for i in range(shard_count)]

    logger.debug("running %d shards of %s on %d workers", shard_count, func.__name__, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(job, shard_index=i) for i in range(shard_count)]
        return [future.result() for future in futures]
