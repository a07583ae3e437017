"""
Structural checks of computed levels and the conjecture predicates on their
coefficient sequences.

Every check returns CheckResult records instead of raising: theorem checks
that fail are bugs, conjecture checks that fail are findings, and findings
proper (tight log-concavity) are never failures.
"""
import enum
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict

from jlambda import settings
from jlambda.engine import JnrCache
from jlambda.engine import LevelTable
from jlambda.engine import Levels
from jlambda.engine import jnr_aggregate
from jlambda.engine import jnr_recursive
from jlambda.engine import m_lambda_from_J
from jlambda.engine import pascalian_order
from jlambda.engine import pascalian_part
from jlambda.exceptions import InexactDivision
from jlambda.exceptions import NegativePowerResidue
from jlambda.partitions import Dominance
from jlambda.partitions import Partition
from jlambda.partitions import conjugate_factorial
from jlambda.partitions import dominance_leq
from jlambda.partitions import m_factorial
from jlambda.partitions import n_of
from jlambda.partitions import partitions_of
from jlambda.partitions import revlex_cmp
from jlambda.qpoly import IntPoly
from jlambda.qpoly import RatPoly
from jlambda.qpoly import binomial
from jlambda.qpoly import content_split
from jlambda.qpoly import q_analogue

logger = logging.getLogger(__name__)


class CheckKind(str, enum.Enum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    FINDING = "finding"


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    subject: str
    check: str
    kind: CheckKind = CheckKind.THEOREM
    passed: bool
    witness: Dict[str, str] = {}


def result(
    subject: str,
    check: str,
    passed: bool,
    kind: CheckKind = CheckKind.THEOREM,
    **witness: Any,
) -> CheckResult:
    """Build a CheckResult; the witness is kept for failures and findings."""
    if passed and kind is not CheckKind.FINDING:
        witness = {}
    if not passed and kind is CheckKind.THEOREM:
        logger.warning(
            "Theorem check failed",
            extra={"subject": subject, "check": check, "witness": witness},
        )
    return CheckResult(
        subject=subject,
        check=check,
        kind=kind,
        passed=passed,
        witness={key: str(value) for key, value in witness.items()},
    )


def _subject(n: int, r: Optional[int] = None) -> str:
    return f"n={n}" if r is None else f"n={n},r={r}"


def _sequence_text(values: Sequence[Any]) -> str:
    return ",".join(map(str, values))


# conjecture predicates


class ConjectureFlags(NamedTuple):
    positive: bool
    log_concave: bool
    strictly_log_concave: bool
    unimodal: bool
    no_internal_zeros: bool


def coefficient_window(poly: IntPoly) -> Tuple[int, ...]:
    """The coefficients from the order to the degree."""
    if poly.is_zero():
        raise ValueError("the zero polynomial has no coefficient window")
    return poly.coeffs[poly.order :]


def _sequence_flags(a: Sequence[Any]) -> ConjectureFlags:
    interior = range(1, len(a) - 1)
    peak = 0
    while peak + 1 < len(a) and a[peak] <= a[peak + 1]:
        peak += 1
    nonzero = [i for i, c in enumerate(a) if c]
    return ConjectureFlags(
        positive=all(c > 0 for c in a),
        log_concave=all(a[j] ** 2 >= a[j - 1] * a[j + 1] for j in interior),
        strictly_log_concave=all(a[j] ** 2 > a[j - 1] * a[j + 1] for j in interior),
        unimodal=all(a[j] >= a[j + 1] for j in range(peak, len(a) - 1)),
        no_internal_zeros=nonzero[-1] - nonzero[0] + 1 == len(nonzero),
    )


def conjecture_checks(poly: IntPoly) -> ConjectureFlags:
    return _sequence_flags(coefficient_window(poly))


def tight_indices(poly: IntPoly) -> List[int]:
    """Interior exponents m where ⟨q^m⟩² equals the product of its neighbours."""
    a = coefficient_window(poly)
    return [
        poly.order + j
        for j in range(1, len(a) - 1)
        if a[j] ** 2 == a[j - 1] * a[j + 1]
    ]


def conjecture_results(lam: Partition, poly: IntPoly) -> List[CheckResult]:
    flags = conjecture_checks(poly)
    window = _sequence_text(coefficient_window(poly))
    results = [
        result(
            lam.text, name, getattr(flags, name), CheckKind.CONJECTURE, window=window
        )
        for name in ("positive", "log_concave", "unimodal", "no_internal_zeros")
    ]
    tight = tight_indices(poly)
    if tight:
        results.append(
            result(
                lam.text,
                "strictly_log_concave",
                False,
                CheckKind.FINDING,
                tight_exponents=_sequence_text(tight),
            )
        )
    return results


# theorem checks on a single polynomial


def structure_check(lam: Partition, poly: IntPoly) -> List[CheckResult]:
    n, r = lam.weight, lam.length
    degree = math.comb(n - 1, 2) + r - 1 - n_of(lam)
    leading = math.factorial(r - 1)
    constant = Fraction(
        math.factorial(n - 1) * m_factorial(lam), conjugate_factorial(lam)
    )
    if poly.is_zero():
        return [
            result(lam.text, check, False, expected=expected, found=0)
            for check, expected in (
                ("order", 0),
                ("degree", degree),
                ("leading_coefficient", leading),
                ("constant_term", constant),
            )
        ]
    return [
        result(lam.text, "order", poly.order == 0, expected=0, found=poly.order),
        result(
            lam.text,
            "degree",
            poly.degree == degree,
            expected=degree,
            found=poly.degree,
        ),
        result(
            lam.text,
            "leading_coefficient",
            poly.leading == leading,
            expected=leading,
            found=poly.leading,
        ),
        result(
            lam.text,
            "constant_term",
            poly.constant == constant,
            expected=constant,
            found=poly.constant,
        ),
    ]


def pascal_tail(n: int, r: int, scale: int = 1) -> List[int]:
    """scale·C(n-r-1+i, n-r-1) for 0 <= i <= n-2, read from the top down."""
    return [scale * binomial(n - r - 1 + i, n - r - 1) for i in range(n - 1)]


def _top_coefficients(poly: IntPoly, count: int) -> List[int]:
    if poly.is_zero():
        return [0] * count
    return [poly.coefficient(poly.degree - i) for i in range(count)]


def pascal_tail_check(lam: Partition, poly: IntPoly) -> List[CheckResult]:
    n, r = lam.weight, lam.length
    if n < 2 or lam.is_single_column():
        raise ValueError(f"the Pascal tail needs λ ≠ 1^n with n >= 2: {lam.text!r}")
    expected = pascal_tail(n, r, math.factorial(r - 1))
    found = _top_coefficients(poly, len(expected))
    results = [
        result(
            lam.text,
            "pascal_tail",
            found == expected,
            expected=_sequence_text(expected),
            found=_sequence_text(found),
        )
    ]
    if r < n - 1:
        # The tail is read top down; log-concavity does not care.
        results.append(
            result(
                lam.text,
                "pascal_tail_strictly_log_concave",
                _sequence_flags(found).strictly_log_concave,
                tail=_sequence_text(found),
            )
        )
    return results


def pascalian_m_check(lam: Partition, poly: IntPoly) -> CheckResult:
    """The part of M_λ of degree >= v matches the Pascalian polynomial of (n, r)."""
    n, r = lam.weight, lam.length
    m_poly = m_lambda_from_J(lam, poly)
    expected = pascalian_part(n, r)
    top = expected.degree
    mismatched = [
        m
        for m in range(pascalian_order(n, r), top + 1)
        if m_poly.coefficient(m) != expected.coefficient(m)
    ]
    passed = not mismatched and (m_poly.is_zero() or m_poly.degree == top)
    return result(
        lam.text,
        "pascalian_part",
        passed,
        exponents=_sequence_text(mismatched),
        degree=m_poly.degree if not m_poly.is_zero() else "-",
    )


def equivalence_check(lam: Partition, poly: IntPoly) -> CheckResult:
    """The conjecture flags agree on J_λ, on M_λ and on Ĵ_λ = J_λ/Δ."""
    j_flags = conjecture_checks(poly)
    m_poly = m_lambda_from_J(lam, poly)
    m_flags = _sequence_flags(
        [m_poly.coefficient(m) for m in range(m_poly.order, m_poly.degree + 1)]
    )
    _, reduced = content_split(poly)
    reduced_flags = conjecture_checks(reduced)
    return result(
        lam.text,
        "equivalent_formulations",
        j_flags == m_flags == reduced_flags,
        j=j_flags,
        m=m_flags,
        reduced=reduced_flags,
    )


def partition_checks(lam: Partition, poly: IntPoly) -> List[CheckResult]:
    results = structure_check(lam, poly)
    if poly.is_zero():
        return results
    if lam.weight >= 2 and not lam.is_single_column():
        results += pascal_tail_check(lam, poly)
        results.append(pascalian_m_check(lam, poly))
    results += conjecture_results(lam, poly)
    results.append(equivalence_check(lam, poly))
    return results


def level_checks(
    table: LevelTable, threads: Optional[int] = None
) -> List[CheckResult]:
    """Every per-partition check over one level, in partitions_of order."""
    threads = settings.threads if threads is None else threads
    if threads:
        with ThreadPoolExecutor(threads) as pool:
            batches = list(
                pool.map(lambda item: partition_checks(*item), table.items())
            )
    else:
        batches = [partition_checks(lam, poly) for lam, poly in table.items()]
    results = [check for batch in batches for check in batch]
    logger.debug(
        "Checked level", extra={"weight": table.n, "results": len(results)}
    )
    return results


# checks over a whole weight


def jnr_checks(n: int, r: int, poly: IntPoly) -> List[CheckResult]:
    subject = _subject(n, r)
    degree = math.comb(n - 1, 2) - math.comb(r - 1, 2)
    constant = math.factorial(n - r)
    results = [
        result(subject, "jnr_monic", poly.leading == 1, found=poly.leading),
        result(
            subject,
            "jnr_constant_term",
            poly.constant == constant,
            expected=constant,
            found=poly.constant,
        ),
        result(
            subject,
            "jnr_degree",
            poly.degree == degree,
            expected=degree,
            found=poly.degree,
        ),
    ]
    if r <= n - 1:
        expected = pascal_tail(n, r)
        found = _top_coefficients(poly, len(expected))
        results.append(
            result(
                subject,
                "jnr_pascal_tail",
                found == expected,
                expected=_sequence_text(expected),
                found=_sequence_text(found),
            )
        )
    flags = conjecture_checks(poly)
    results.append(
        result(
            subject,
            "jnr_positive_log_concave",
            flags.positive and flags.log_concave and poly.order == 0,
            coefficients=poly.text,
        )
    )
    return results


def jnr_routes_check(
    n: int, r: int, level: LevelTable, cache: Optional[JnrCache] = None
) -> Tuple[Optional[IntPoly], CheckResult]:
    """
    J_n^(r) aggregated over a level against its own linear recurrence. A level
    whose aggregate is not an integer polynomial yields no aggregate.
    """
    recursive = jnr_recursive(n, r, cache)
    try:
        aggregate = jnr_aggregate(n, r, level)
    except (InexactDivision, NegativePowerResidue) as e:
        return None, result(
            _subject(n, r),
            "jnr_routes_agree",
            False,
            aggregate=e,
            recursive=recursive.text,
        )
    return aggregate, result(
        _subject(n, r),
        "jnr_routes_agree",
        aggregate == recursive,
        aggregate=aggregate.text,
        recursive=recursive.text,
    )


def _m_sum(level: LevelTable, r: int) -> RatPoly:
    """Σ M_λ / m(λ)! over the partitions of the level with r parts."""
    total = RatPoly(IntPoly())
    for lam, poly in level.of_length(r):
        total = total + m_lambda_from_J(lam, poly) * Fraction(1, m_factorial(lam))
    return total


def m_space_aggregate_check(
    n: int, r: int, level: LevelTable, jnr: IntPoly
) -> CheckResult:
    """q^C(r,2) J_n^(r) / (r!(n-r)!) = Σ_{l(λ)=r} M_λ / m(λ)!."""
    left = RatPoly(
        jnr.shift(math.comb(r, 2)), math.factorial(r) * math.factorial(n - r)
    )
    right = _m_sum(level, r)
    return result(
        _subject(n, r), "m_space_aggregate", left == right, left=left, right=right
    )


def m_space_recurrence_check(n: int, r: int, levels: Levels) -> CheckResult:
    """
    r!·Σ_{|λ|=n, l=r} M_λ/m(λ)! = q^C(r,2) Σ_{|μ|=n-r} [r]^l(μ) M_μ/m(μ)!,
    the J_n^(r) linear recurrence moved into M-space.
    """
    if not 1 <= r <= n - 1:
        raise ValueError(f"the recurrence needs 1 <= r <= n - 1, found n={n}, r={r}")
    left = _m_sum(levels[n], r) * math.factorial(r)
    right = RatPoly(IntPoly())
    bracket = q_analogue(r)
    for mu, poly in levels[n - r].items():
        term = m_lambda_from_J(mu, poly) * bracket ** mu.length
        right = right + term * Fraction(1, m_factorial(mu))
    right = right.shift(math.comb(r, 2))
    return result(
        _subject(n, r), "m_space_recurrence", left == right, left=left, right=right
    )


def bell_identity_check(n: int, r: int) -> CheckResult:
    """Σ_{|λ|=n, l(λ)=r} 1/m(λ)! = C(n-1, r-1)/r!."""
    left = sum(
        (Fraction(1, m_factorial(lam)) for lam in partitions_of(n) if len(lam) == r),
        Fraction(0),
    )
    right = Fraction(math.comb(n - 1, r - 1), math.factorial(r))
    return result(
        _subject(n, r), "bell_identity", left == right, left=left, right=right
    )


def special_family_check(n: int, level: LevelTable) -> List[CheckResult]:
    """J_{1^n} = (n-1)! and J_{(2,1^(n-2))} = (n-2)!·[n-1]_q."""
    column = Partition.single_column(n)
    expected = IntPoly((math.factorial(n - 1),))
    results = [
        result(
            column.text,
            "single_column",
            level[column] == expected,
            expected=expected.text,
            found=level[column].text,
        )
    ]
    if n >= 2:
        lam = Partition((2,) + (1,) * (n - 2))
        expected = q_analogue(n - 1) * math.factorial(n - 2)
        results.append(
            result(
                lam.text,
                "two_then_ones",
                level[lam] == expected,
                expected=expected.text,
                found=level[lam].text,
            )
        )
    return results


def partition_order_check(n: int) -> List[CheckResult]:
    """
    Strict dominance lowers n(λ) strictly, and dominance implies the reverse
    lexicographic order, over every pair of partitions of n.
    """
    subject = _subject(n)
    n_witness: Optional[Tuple[Partition, Partition]] = None
    chain_witness: Optional[Tuple[Partition, Partition]] = None
    for lam, mu in combinations(partitions_of(n), 2):
        if n_witness is not None and chain_witness is not None:
            break
        for low, high in ((lam, mu), (mu, lam)):
            if dominance_leq(low, high) is not Dominance.LESS_OR_EQUAL:
                continue
            if n_witness is None and not n_of(low) > n_of(high):
                n_witness = (low, high)
            if chain_witness is None and revlex_cmp(low, high) >= 0:
                chain_witness = (low, high)
    return [
        result(
            subject,
            "dominance_raises_n",
            n_witness is None,
            pair=" < ".join(p.text for p in n_witness) if n_witness else "",
        ),
        result(
            subject,
            "dominance_refines_revlex",
            chain_witness is None,
            pair=" < ".join(p.text for p in chain_witness) if chain_witness else "",
        ),
    ]


def weight_checks(
    n: int, levels: Levels, cache: Optional[JnrCache] = None
) -> List[CheckResult]:
    """The per-weight identities of level n, reading lower levels from levels."""
    level = levels[n]
    cache = {} if cache is None else cache
    results: List[CheckResult] = []
    results += special_family_check(n, level)
    results += partition_order_check(n)
    for r in range(1, n + 1):
        jnr, agree = jnr_routes_check(n, r, level, cache)
        results.append(agree)
        if jnr is not None:
            results += jnr_checks(n, r, jnr)
            results.append(m_space_aggregate_check(n, r, level, jnr))
        results.append(bell_identity_check(n, r))
        if r <= n - 1:
            results.append(m_space_recurrence_check(n, r, levels))
    return results
