"""
Level-by-level computation of J_λ from J_1 = 1.

Each level n starts with J_n from the level below (the weighted sum over the
partitions of n - 1), then fills in every partition with at least two parts
by the three-term recurrence over λ_r, λ* and the λ^(i). The J_n^(r) family is
available both as an aggregate over a level and through its own linear
recurrence.
"""
import logging
import math
import threading
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Mapping
from typing import MutableMapping
from typing import Optional
from typing import Protocol
from typing import Tuple

from jlambda import settings
from jlambda.exceptions import EngineError
from jlambda.exceptions import IncompleteLevel
from jlambda.exceptions import MissingLevel
from jlambda.partitions import Partition
from jlambda.partitions import count_partitions
from jlambda.partitions import derived_all
from jlambda.partitions import m_factorial
from jlambda.partitions import n_of
from jlambda.partitions import partitions_of
from jlambda.partitions import star
from jlambda.qpoly import ONE
from jlambda.qpoly import ONE_MINUS_Q
from jlambda.qpoly import Q_MINUS_ONE
from jlambda.qpoly import ZERO
from jlambda.qpoly import IntPoly
from jlambda.qpoly import LaurentPoly
from jlambda.qpoly import RatPoly
from jlambda.qpoly import binomial
from jlambda.qpoly import finalize
from jlambda.qpoly import q_analogue
from jlambda.qpoly import rat_to_int

logger = logging.getLogger(__name__)

# Levels above the resident threshold that stay loaded once fetched.
_SPILL_LEVELS = 8


class LevelTable(Mapping[Partition, IntPoly]):
    """The polynomials of every partition of n, in partitions_of(n) order."""

    def __init__(self, n: int, entries: Iterable[Tuple[Partition, IntPoly]]) -> None:
        self.n = n
        self._entries: Dict[Partition, IntPoly] = dict(entries)
        expected = count_partitions(n)
        if len(self._entries) != expected:
            raise IncompleteLevel(
                f"level {n} has {len(self._entries)} entries, expected {expected}"
            )
        for found, wanted in zip(self._entries, partitions_of(n)):
            if found != wanted:
                raise IncompleteLevel(
                    f"level {n} lists {found.text!r} where {wanted.text!r} belongs"
                )

    @classmethod
    def base(cls) -> "LevelTable":
        return cls(1, [(Partition((1,)), ONE)])

    def __getitem__(self, key: Partition) -> IntPoly:
        return self._entries[key]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LevelTable):
            return NotImplemented
        return self.n == other.n and list(self.items()) == list(other.items())

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._entries.items())))

    @property
    def max_degree(self) -> int:
        return max(poly.degree for poly in self._entries.values())

    def of_length(self, r: int) -> List[Tuple[Partition, IntPoly]]:
        return [(lam, poly) for lam, poly in self._entries.items() if len(lam) == r]

    def __repr__(self) -> str:
        return f"<LevelTable n={self.n} entries={len(self)}>"


class LevelSource(Protocol):
    def load_level(self, n: int) -> LevelTable:
        ...


class Levels(Protocol):
    def __getitem__(self, n: int) -> LevelTable:
        ...


class LevelContext:
    """
    The levels a sweep can read. Levels up to settings.memo_weight and the two
    most recent levels stay resident; other lower levels are fetched from the
    source on demand and kept in a small LRU.
    """

    def __init__(self, source: Optional[LevelSource] = None) -> None:
        self.source = source
        self._resident: Dict[int, LevelTable] = {}
        self._spilled: "OrderedDict[int, LevelTable]" = OrderedDict()
        self._building: Dict[Partition, IntPoly] = {}
        self._building_n = 0
        self._latest = 0
        self._lock = threading.Lock()

    def _keep_resident(self, n: int) -> bool:
        return n <= settings.memo_weight or n >= self._latest - 1

    def add(self, table: LevelTable) -> None:
        with self._lock:
            self._latest = max(self._latest, table.n)
            self._resident[table.n] = table
            for k in [k for k in self._resident if not self._keep_resident(k)]:
                self._spilled[k] = self._resident.pop(k)
            while len(self._spilled) > _SPILL_LEVELS:
                self._spilled.popitem(last=False)

    def has_level(self, n: int) -> bool:
        return n in self._resident or n in self._spilled

    def level(self, n: int) -> LevelTable:
        with self._lock:
            table = self._resident.get(n)
            if table is not None:
                return table
            table = self._spilled.get(n)
            if table is not None:
                self._spilled.move_to_end(n)
                return table
            if self.source is None:
                raise MissingLevel(n)
            logger.debug("Loading level on demand", extra={"weight": n})
            table = self.source.load_level(n)
            if self._keep_resident(n):
                self._resident[n] = table
            else:
                self._spilled[n] = table
                while len(self._spilled) > _SPILL_LEVELS:
                    self._spilled.popitem(last=False)
            return table

    __getitem__ = level

    def begin(self, n: int) -> MutableMapping[Partition, IntPoly]:
        self._building = {}
        self._building_n = n
        return self._building

    def polynomial(self, lam: Partition) -> IntPoly:
        if lam.weight == self._building_n:
            try:
                return self._building[lam]
            except KeyError:
                raise LookupError(
                    f"J_({lam.text}) is needed before it has been computed"
                ) from None
        return self.level(lam.weight)[lam]


@dataclass(frozen=True)
class FactoredMonomial:
    """m_λ = (1 - q)^a · q^b · scalar · J_λ under the specialization."""

    one_minus_q_exponent: int
    q_exponent: int
    scalar: Fraction
    j_part: IntPoly

    def expand(self) -> RatPoly:
        body = (ONE_MINUS_Q ** self.one_minus_q_exponent * self.j_part).shift(
            self.q_exponent
        )
        return RatPoly(body) * self.scalar


def _weighted_sum(terms: List[Tuple[Partition, IntPoly]]) -> Tuple[IntPoly, int]:
    """Σ J_λ q^{n(λ)} / m(λ)! as a numerator over the lcm of the m(λ)!."""
    denominator = math.lcm(*(m_factorial(lam) for lam, _ in terms)) if terms else 1
    numerator = ZERO
    for lam, poly in terms:
        numerator += (poly * (denominator // m_factorial(lam))).shift(n_of(lam))
    return numerator, denominator


def compute_Jn(n: int, prev: LevelTable) -> IntPoly:
    if n < 2:
        raise ValueError(f"compute_Jn needs n >= 2, found {n}")
    if prev.n != n - 1:
        raise ValueError(f"J_{n} needs level {n - 1}, found level {prev.n}")
    numerator, denominator = _weighted_sum(list(prev.items()))
    return rat_to_int(RatPoly(numerator * (n - 1), denominator))


def compute_Jlambda(lam: Partition, ctx: LevelContext) -> IntPoly:
    n, r, last = lam.weight, lam.length, lam.last
    if r < 2:
        raise ValueError(f"compute_Jlambda needs at least two parts: {lam.text!r}")
    product = ctx.polynomial(Partition.single_row(last)) * ctx.polynomial(star(lam))
    scale = (n - 1) * binomial(n - 2, last - 1)
    total = LaurentPoly(product * scale, -(r - 1) * last)
    tail = LaurentPoly(ZERO)
    for mu in derived_all(lam):
        tail = tail + LaurentPoly(ctx.polynomial(mu), n_of(mu) - n_of(lam))
    return finalize(total + tail * Q_MINUS_ONE)


def _compute_entry(lam: Partition, ctx: LevelContext) -> IntPoly:
    try:
        return compute_Jlambda(lam, ctx)
    except Exception as e:
        raise EngineError(lam.text, e) from e


def compute_level(
    n: int, ctx: LevelContext, threads: Optional[int] = None
) -> LevelTable:
    """
    Compute level n into ctx. Partitions of the same length never depend on
    each other, so each length class is one wavefront.
    """
    if n < 1:
        raise ValueError(f"levels start at n = 1, found {n}")
    if n == 1:
        table = LevelTable.base()
        ctx.add(table)
        return table

    threads = settings.threads if threads is None else threads
    order = list(partitions_of(n))
    building = ctx.begin(n)
    try:
        building[order[0]] = compute_Jn(n, ctx.level(n - 1))
    except Exception as e:
        raise EngineError(order[0].text, e) from e

    waves = [list(wave) for _, wave in groupby(sorted(order[1:], key=len), key=len)]
    logger.debug("Computing level", extra={"weight": n, "waves": len(waves)})
    if threads:
        with ThreadPoolExecutor(threads) as pool:
            for wave in waves:
                results = list(pool.map(lambda lam: _compute_entry(lam, ctx), wave))
                building.update(zip(wave, results))
    else:
        for wave in waves:
            building.update((lam, _compute_entry(lam, ctx)) for lam in wave)

    table = LevelTable(n, ((lam, building[lam]) for lam in order))
    ctx.begin(0)
    ctx.add(table)
    return table


def compute_levels(
    max_n: int, ctx: Optional[LevelContext] = None, threads: Optional[int] = None
) -> Dict[int, LevelTable]:
    ctx = LevelContext() if ctx is None else ctx
    levels: Dict[int, LevelTable] = {}
    for n in range(1, max_n + 1):
        levels[n] = ctx.level(n) if ctx.has_level(n) else compute_level(n, ctx, threads)
    return levels


def jnr_aggregate(n: int, r: int, level: LevelTable) -> IntPoly:
    """J_n^(r) from the partitions of n with r parts."""
    if not 1 <= r <= n:
        raise ValueError(f"J_n^(r) needs 1 <= r <= n, found n={n}, r={r}")
    numerator, denominator = _weighted_sum(level.of_length(r))
    scaled = RatPoly(
        numerator * (math.factorial(r) * math.factorial(n - r)),
        denominator * math.factorial(n - 1),
    )
    return finalize(LaurentPoly(rat_to_int(scaled), -math.comb(r, 2)))


JnrCache = Dict[Tuple[int, int], IntPoly]


def jnr_recursive(n: int, r: int, cache: Optional[JnrCache] = None) -> IntPoly:
    """J_n^(r) = Σ_j [r]_q^j q^C(j,2) C(n-r, j) J_{n-r}^(j), with J_m^(m) = 1."""
    if not 1 <= r <= n:
        raise ValueError(f"J_n^(r) needs 1 <= r <= n, found n={n}, r={r}")
    if r == n:
        return ONE
    cache = {} if cache is None else cache
    key = (n, r)
    if key in cache:
        return cache[key]
    bracket = q_analogue(r)
    power = ONE
    total = ZERO
    for j in range(1, n - r + 1):
        power = power * bracket
        term = power * jnr_recursive(n - r, j, cache)
        total += term.shift(math.comb(j, 2)) * binomial(n - r, j)
    cache[key] = total
    return total


def m_lambda_factored(lam: Partition, level: LevelTable) -> FactoredMonomial:
    n = lam.weight
    return FactoredMonomial(
        one_minus_q_exponent=n - lam.length,
        q_exponent=n_of(lam),
        scalar=Fraction(1, math.factorial(n - 1) * m_factorial(lam)),
        j_part=level[lam],
    )


def m_lambda_from_J(lam: Partition, poly: IntPoly) -> RatPoly:
    """M_λ = J_λ q^{n(λ)} / (|λ| - 1)!."""
    return RatPoly(poly.shift(n_of(lam)), math.factorial(lam.weight - 1))


def degree_of(lam: Partition) -> int:
    """deg J_λ = C(|λ|-1, 2) + l(λ) - 1 - n(λ)."""
    return math.comb(lam.weight - 1, 2) + lam.length - 1 - n_of(lam)


def pascalian_order(n: int, r: int) -> int:
    """v = C(n-2, 2) + r - 1, the lowest degree of the Pascalian part of M_λ."""
    return math.comb(n - 2, 2) + r - 1


def pascalian_part(n: int, r: int) -> RatPoly:
    """The part of M_λ of degree >= v, which depends only on n = |λ| and r = l(λ)."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"the Pascalian part needs 1 <= r <= n - 1, found {n}, {r}")
    top = math.comb(n - 1, 2) + r - 1
    body = ZERO
    for i in range(n - 1):
        body += IntPoly.monomial(top - i, binomial(n - r - 1 + i, n - r - 1))
    return RatPoly(body * math.factorial(r - 1), math.factorial(n - 1))


