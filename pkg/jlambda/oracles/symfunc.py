"""
Augmented monomial symmetric functions under the specialization
e_n = q^C(n,2)/n!, computed from the power sums alone.

Nothing here reads a J value: the power sums come from Newton's identities and
m̃_λ from its product recursion over λ_r, λ* and the λ^(i).
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import List

from jlambda import settings
from jlambda.exceptions import GuardViolation
from jlambda.exceptions import InexactDivision
from jlambda.partitions import Partition
from jlambda.partitions import conjugate_factorial
from jlambda.partitions import derived_all
from jlambda.partitions import m_factorial
from jlambda.partitions import n_of
from jlambda.partitions import partitions_of
from jlambda.partitions import star
from jlambda.qpoly import ONE_MINUS_Q
from jlambda.qpoly import IntPoly
from jlambda.qpoly import RatPoly
from jlambda.qpoly import exact_divide
from jlambda.verifier import CheckResult
from jlambda.verifier import result


@lru_cache(maxsize=None)
def specialized_e(n: int) -> RatPoly:
    return RatPoly(IntPoly.monomial(math.comb(n, 2)), math.factorial(n))


@lru_cache(maxsize=None)
def specialized_p(k: int) -> RatPoly:
    """p_k from n·e_n = Σ_{i=1..n} (-1)^(i-1) e_{n-i} p_i."""
    if k < 1:
        raise ValueError(f"power sums start at k = 1, found {k}")
    total = specialized_e(k) * k
    for i in range(1, k):
        total = total - specialized_e(k - i) * specialized_p(i) * (-1) ** (i - 1)
    return total * (-1) ** (k - 1)


@lru_cache(maxsize=None)
def _augmented(lam: Partition) -> RatPoly:
    if lam.length == 1:
        return specialized_p(lam[0])
    total = _augmented(Partition.single_row(lam.last)) * _augmented(star(lam))
    for mu in derived_all(lam):
        total = total - _augmented(mu)
    return total


def augmented_monomial_specialized(lam: Partition) -> RatPoly:
    if not lam:
        raise ValueError("m̃ needs a non-empty partition")
    if lam.weight > settings.symfunc_max_weight:
        raise GuardViolation(
            "symfunc_max_weight", settings.symfunc_max_weight, lam.weight
        )
    return _augmented(lam)


def verify_factorization(lam: Partition, poly: IntPoly) -> List[CheckResult]:
    """
    m̃_λ = (1-q)^(n-l) · M_λ with M_λ of the predicted degree, order and
    extreme coefficients, and (n-1)!·M_λ·q^(-n(λ)) equal to the engine's J_λ.
    One result per clause.
    """
    n, r = lam.weight, lam.length
    augmented = augmented_monomial_specialized(lam)
    subject = lam.text
    try:
        quotient = exact_divide(augmented.numerator, ONE_MINUS_Q ** (n - r))
    except InexactDivision:
        failed = [
            result(
                subject,
                check,
                False,
                numerator=augmented.numerator.text,
                denominator=augmented.denominator,
            )
            for check in (
                "factor_divisible",
                "factor_degree_order",
                "factor_extremes",
                "factor_matches_engine",
            )
        ]
        return failed
    m_poly = RatPoly(quotient, augmented.denominator)
    degree = math.comb(n - 1, 2) + r - 1
    top = Fraction(math.factorial(r - 1), math.factorial(n - 1))
    bottom = Fraction(m_factorial(lam), conjugate_factorial(lam))
    engine = RatPoly(poly.shift(n_of(lam)), math.factorial(n - 1))
    return [
        result(subject, "factor_divisible", True),
        result(
            subject,
            "factor_degree_order",
            m_poly.degree == degree and m_poly.order == n_of(lam),
            degree=m_poly.degree,
            order=m_poly.order,
        ),
        result(
            subject,
            "factor_extremes",
            m_poly.coefficient(degree) == top
            and m_poly.coefficient(n_of(lam)) == bottom,
            top=m_poly.coefficient(degree),
            bottom=m_poly.coefficient(n_of(lam)),
        ),
        result(
            subject,
            "factor_matches_engine",
            m_poly == engine,
            oracle=m_poly,
            engine=engine,
        ),
    ]


def power_sum_family_check(n: int, r: int, jnr: IntPoly) -> CheckResult:
    """
    Σ_{|λ|=n, l(λ)=r} m̃_λ/m(λ)! = (1-q)^(n-r) q^C(r,2) J_n^(r) / (r!(n-r)!).
    """
    left = RatPoly(IntPoly())
    for lam in partitions_of(n):
        if lam.length == r:
            left = left + augmented_monomial_specialized(lam) * Fraction(
                1, m_factorial(lam)
            )
    right = RatPoly(
        (ONE_MINUS_Q ** (n - r) * jnr).shift(math.comb(r, 2)),
        math.factorial(r) * math.factorial(n - r),
    )
    return result(
        f"n={n},r={r}", "power_sum_family", left == right, left=left, right=right
    )
