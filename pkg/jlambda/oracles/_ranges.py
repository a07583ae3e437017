from concurrent.futures import ThreadPoolExecutor
from typing import Callable
from typing import Iterable
from typing import List
from typing import Optional
from typing import TypeVar

from jlambda import settings

T = TypeVar("T")


def merge_counts(
    task: Callable[[T], List[int]], chunks: Iterable[T], threads: Optional[int] = None
) -> List[int]:
    """Run task over independent chunks and add the count vectors together."""
    threads = settings.threads if threads is None else threads
    if threads:
        with ThreadPoolExecutor(threads) as pool:
            partials = list(pool.map(task, chunks))
    else:
        partials = [task(chunk) for chunk in chunks]
    merged: List[int] = []
    for counts in partials:
        if len(counts) > len(merged):
            merged.extend([0] * (len(counts) - len(merged)))
        for i, c in enumerate(counts):
            merged[i] += c
    return merged
