"""
Exhaustive enumeration of the topologies on n labelled points.

Finite topologies correspond one-to-one with preorders (x <= y iff
x ∈ cl{y}), and the up-set of x in the preorder is the minimal
neighbourhood M_x. So instead of searching set families we search for rows
up[0..n-1] with i ∈ up[i] and j ∈ up[i] ⇒ up[j] ⊆ up[i], one row at a time.
Every transitivity constraint involves two rows, so a prefix that breaks
one is cut immediately.

Output order is lexicographic on the row tuple. With jobs > 1 the search is
split by the first row and partitions are merged back in that order, so the
stream is the same for every worker count.
"""

import logging
from multiprocessing import Pool
from typing import Iterator, List, Sequence, Tuple

from tqdm import tqdm

from ..config import DEFAULT_JOBS, MAX_ENUMERATION_N, SHOW_PROGRESS
from ..core import GroundSet, SizeCapExceeded, Topology, topology_from_neighborhoods

logger = logging.getLogger(__name__)

Rows = Tuple[int, ...]


def check_enumeration_size(n: int):
    if n < 0 or n > MAX_ENUMERATION_N:
        raise SizeCapExceeded("enumeration size", n, MAX_ENUMERATION_N)


def _row_candidates(n: int, i: int, rows: Sequence[int]) -> Iterator[int]:
    """Admissible up-rows for point i given rows[0..i-1], ascending."""
    bit = 1 << i
    upper = (1 << n) - 1
    for j in range(i):
        if rows[j] & bit:
            upper &= rows[j]
    for mask in range(1 << n):
        if not mask & bit or mask & ~upper:
            continue
        if all(rows[j] & ~mask == 0 for j in range(i) if mask >> j & 1):
            yield mask


def first_rows(n: int) -> List[int]:
    return list(_row_candidates(n, 0, ())) if n else []


def iter_rows(n: int, first_row: int = None) -> Iterator[Rows]:
    """
    Up-row tuples of every preorder on n points.

    Args:
        n: Number of points
        first_row: Restrict to preorders whose row 0 equals this mask
    """
    if n == 0:
        yield ()
        return
    rows = [0] * n

    def backtrack(i):
        if i == n:
            yield tuple(rows)
            return
        candidates = [first_row] if i == 0 and first_row is not None else _row_candidates(n, i, rows)
        for mask in candidates:
            rows[i] = mask
            yield from backtrack(i + 1)

    yield from backtrack(0)


def _partition_rows(args) -> List[Rows]:
    n, first_row = args
    return list(iter_rows(n, first_row))


def _partition_count(args) -> int:
    n, first_row = args
    return sum(1 for _ in iter_rows(n, first_row))


def iter_rows_parallel(n: int, jobs: int) -> Iterator[Rows]:
    """iter_rows(n) computed by a worker pool; same order as the serial stream."""
    tasks = [(n, row) for row in first_rows(n)]
    with Pool(jobs) as pool:
        for partition in pool.imap(_partition_rows, tasks):
            yield from partition


def enumerate_labeled(n: int, jobs: int = None, progress: bool = None) -> Iterator[Topology]:
    """
    Stream every topology on the points a, b, c, ... (n of them), each once.

    Args:
        n: Number of points (0 <= n <= MAX_ENUMERATION_N)
        jobs: Worker processes (defaults to DEFAULT_JOBS)
        progress: Show a tqdm bar on stderr (defaults to SHOW_PROGRESS)

    Raises:
        SizeCapExceeded
    """
    check_enumeration_size(n)
    jobs = DEFAULT_JOBS if jobs is None else jobs
    progress = SHOW_PROGRESS if progress is None else progress
    ground = GroundSet.standard(n)

    rows_stream = iter_rows_parallel(n, jobs) if jobs > 1 and n > 1 else iter_rows(n)
    for rows in tqdm(rows_stream, desc=f"Enumerating n={n}", disable=not progress):
        yield topology_from_neighborhoods(ground, rows)


def count_labeled(n: int, jobs: int = None) -> int:
    """Number of topologies on n labelled points, without building them."""
    check_enumeration_size(n)
    jobs = DEFAULT_JOBS if jobs is None else jobs
    if jobs > 1 and n > 1:
        with Pool(jobs) as pool:
            total = sum(pool.imap(_partition_count, [(n, row) for row in first_rows(n)]))
    else:
        total = sum(1 for _ in iter_rows(n))
    logger.info(f"Counted {total} labelled topologies on {n} points")
    return total
