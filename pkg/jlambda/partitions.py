"""
Integer partitions, the three orders used by the recurrences and the
enumeration of a level in the order the engine consumes it.
"""
import enum
import math
from functools import lru_cache
from itertools import accumulate
from itertools import zip_longest
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Tuple

from jlambda import settings


class Partition(Tuple[int, ...]):
    """A non-increasing tuple of positive parts; () is the partition of 0."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        self = super().__new__(cls, tuple(parts))
        for i, part in enumerate(self):
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers, found {part!r}")
            if i and part > self[i - 1]:
                raise ValueError(f"parts must be non-increasing: {tuple(self)}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma separated syntax, e.g. ``3,2,1``."""
        if text == "":
            return cls()
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError as e:
            raise ValueError(f"invalid partition syntax {text!r}: {e}") from None

    @classmethod
    def single_row(cls, n: int) -> "Partition":
        return cls((n,)) if n else cls()

    @classmethod
    def single_column(cls, n: int) -> "Partition":
        return cls((1,) * n)

    @property
    def text(self) -> str:
        return ",".join(map(str, self))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def last(self) -> int:
        return self[-1]

    def is_single_column(self) -> bool:
        return all(part == 1 for part in self)

    def __repr__(self) -> str:
        return f"Partition(({self.text}))"


class Composition(Tuple[int, ...]):
    """Ordered positive terms; sorting them gives the partition λ(u)."""

    __slots__ = ()

    def __new__(cls, terms: Iterable[int]) -> "Composition":
        self = super().__new__(cls, tuple(terms))
        if any(not isinstance(term, int) or term < 1 for term in self):
            raise ValueError(f"terms must be positive integers: {tuple(self)}")
        return self

    def to_partition(self) -> Partition:
        return Partition(sorted(self, reverse=True))


class Multiplicities(NamedTuple):
    counts: Tuple[int, ...]  # counts[i - 1] is the number of parts equal to i
    factorial: int


class Dominance(enum.Enum):
    LESS_OR_EQUAL = "less-or-equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _check_same_weight(lam: Partition, mu: Partition) -> None:
    if lam.weight != mu.weight:
        raise ValueError(
            f"partitions {lam.text!r} and {mu.text!r} have different weights"
        )


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(
        sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1)
    )


@lru_cache(maxsize=None)
def n_of(lam: Partition) -> int:
    value = sum(i * part for i, part in enumerate(lam))
    if settings.debug:
        assert value == sum(math.comb(part, 2) for part in conjugate(lam)), lam
    return value


@lru_cache(maxsize=None)
def multiplicities(lam: Partition) -> Multiplicities:
    counts = [0] * (lam[0] if lam else 0)
    for part in lam:
        counts[part - 1] += 1
    factorial = 1
    for count in counts:
        factorial *= math.factorial(count)
    return Multiplicities(tuple(counts), factorial)


def m_factorial(lam: Partition) -> int:
    return multiplicities(lam).factorial


def conjugate_factorial(lam: Partition) -> int:
    """λ′! = Π λ′_i!."""
    value = 1
    for part in conjugate(lam):
        value *= math.factorial(part)
    return value


def revlex_cmp(lam: Partition, mu: Partition) -> int:
    """
    Compare under the reverse lexicographic order: -1 if lam ≺ mu, 0 if equal,
    1 if lam ≻ mu. (n) is the maximum of a level and 1^n its minimum.
    """
    _check_same_weight(lam, mu)
    return (lam > mu) - (lam < mu)


def dominance_leq(lam: Partition, mu: Partition) -> Dominance:
    _check_same_weight(lam, mu)
    pairs = list(zip_longest(accumulate(lam), accumulate(mu), fillvalue=lam.weight))
    if all(a <= b for a, b in pairs):
        return Dominance.LESS_OR_EQUAL
    if all(a >= b for a, b in pairs):
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def star(lam: Partition) -> Partition:
    """λ* drops the last (smallest) part."""
    if lam.length < 2:
        raise ValueError(f"star needs at least two parts, found {lam.text!r}")
    return Partition(lam[:-1])


def derived(lam: Partition, i: int) -> Partition:
    """λ^(i): add the last part to the i-th part (1-based) and resort."""
    r = lam.length
    if r < 2:
        raise ValueError(f"derived needs at least two parts, found {lam.text!r}")
    if not 1 <= i <= r - 1:
        raise ValueError(f"index {i} out of range 1..{r - 1} for {lam.text!r}")
    terms = list(lam[:-1])
    terms[i - 1] += lam[-1]
    result = Composition(terms).to_partition()
    if settings.debug:
        assert result > lam, (lam, i)
    return result


def derived_all(lam: Partition) -> List[Partition]:
    return [derived(lam, i) for i in range(1, lam.length)]


def _descending(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield the partitions of n from (n) down to 1^n."""
    if n < 0:
        raise ValueError(f"n must be non-negative, found {n}")
    for parts in _descending(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def count_partitions(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * count_partitions(n - first)
        second = k * (3 * k + 1) // 2
        if second <= n:
            total += sign * count_partitions(n - second)
        k += 1
    return total
