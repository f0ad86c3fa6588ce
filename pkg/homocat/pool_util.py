from concurrent.futures import ProcessPoolExecutor
from . import homocat_config
from . import trace


def parallel_map(func, items, chunksize=8):
    """map func over items, in order.

    Uses a process pool with homocat_config.threads workers when more than one
    thread is configured; func and the items must be picklable then.
    """
    items = list(items)
    workers = homocat_config.threads
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    trace.debug('pool_util.parallel_map', f"{len(items)} tasks on {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
