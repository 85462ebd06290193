from concurrent.futures import ThreadPoolExecutor

from ..globals import globals as g


def worker_count(threads=None):
    return max(1, int(threads if threads is not None else g.threads))


def parallel_map(fn, items, threads=None):
    """ Apply fn to every item, results in input order whatever the completion order """
    items = list(items)
    workers = min(worker_count(threads), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def parallel_imap(fn, items, threads=None):
    """ Lazy parallel_map: yields results in input order as soon as each is ready """
    items = list(items)
    workers = min(worker_count(threads), len(items))
    if workers <= 1:
        for item in items:
            yield fn(item)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items)


def better(candidate, incumbent):
    """True when candidate beats incumbent.

    Both are (value, witness) pairs; a larger value wins, equal values go to
    the lexicographically smaller witness tuple, and a None witness loses.
    """
    if incumbent is None:
        return True
    value, witness = candidate
    best_value, best_witness = incumbent
    if value != best_value:
        return value > best_value
    if witness is None:
        return False
    if best_witness is None:
        return True
    return witness < best_witness


def merge_extremal(results):
    """ Reduce per-partition (value, witness) maxima with the lexicographic tie-break """
    best = None
    for result in results:
        if result is not None and better(result, best):
            best = result
    return best


def reduce_partitioned(kernel, items, threads=None):
    """Run kernel on round-robin stripes of items and merge the extremal results.

    kernel receives a list of items and returns a (value, witness) pair or
    None. The merge does not depend on the number of workers.
    """
    items = list(items)
    parts = worker_count(threads)
    results = parallel_map(kernel, stripes(items, parts), threads)
    return merge_extremal(results)


def stripes(items, parts):
    """ Round-robin split; balances work when item cost decreases along the sequence """
    items = list(items)
    parts = max(1, min(parts, len(items)))
    return [items[i::parts] for i in range(parts)]
