"""
Inversion enumerator of labeled trees, by exhaustive Prüfer decoding.

Trees are rooted at vertex 1. An inversion is a pair (i, j) with i > j >= 2
where i is a proper ancestor of j.
"""
import heapq
import logging
import math
from itertools import product
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from jlambda import settings
from jlambda.exceptions import GuardViolation
from jlambda.qpoly import IntPoly

from ._ranges import merge_counts

logger = logging.getLogger(__name__)


def _parents(sequence: Sequence[int], n: int) -> List[int]:
    """
    Decode a Prüfer sequence, always removing the largest leaf, so that vertex
    1 is the one never removed and every removed leaf hangs off its parent.
    """
    degree = [1] * (n + 1)
    for x in sequence:
        degree[x] += 1
    leaves = [-v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    parent = [0] * (n + 1)
    for x in sequence:
        leaf = -heapq.heappop(leaves)
        parent[leaf] = x
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, -x)
    parent[-heapq.heappop(leaves)] = 1
    return parent


def _inversions(parent: Sequence[int], n: int) -> int:
    count = 0
    for j in range(2, n + 1):
        ancestor = parent[j]
        while ancestor != 1:
            if ancestor > j:
                count += 1
            ancestor = parent[ancestor]
    return count


def _count_prefix(n: int, prefix: Tuple[int, ...]) -> List[int]:
    counts = [0] * (math.comb(n - 1, 2) + 1)
    for rest in product(range(1, n + 1), repeat=n - 2 - len(prefix)):
        counts[_inversions(_parents(prefix + rest, n), n)] += 1
    return counts


def tree_inversion_poly(n: int, threads: Optional[int] = None) -> IntPoly:
    """Σ q^inv(T) over the n^(n-2) labeled trees on {1..n}."""
    if n < 2:
        raise ValueError(f"trees need at least two vertices, found n={n}")
    if n > settings.tree_max_n:
        raise GuardViolation("tree_max_n", settings.tree_max_n, n)
    prefixes = list(product(range(1, n + 1), repeat=min(2, n - 2)))
    logger.debug(
        "Enumerating labeled trees", extra={"n": n, "ranges": len(prefixes)}
    )
    counts = merge_counts(lambda prefix: _count_prefix(n, prefix), prefixes, threads)
    return IntPoly(counts)
