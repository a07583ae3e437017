import math
from unittest import TestCase

import pytest

from jlambda.engine import compute_levels
from jlambda.engine import jnr_aggregate
from jlambda.engine import m_lambda_factored
from jlambda.exceptions import GuardViolation
from jlambda.oracles import augmented_monomial_specialized
from jlambda.oracles import power_sum_family_check
from jlambda.oracles import specialized_p
from jlambda.oracles import verify_factorization
from jlambda.partitions import Partition
from jlambda.partitions import m_factorial
from jlambda.qpoly import ONE_MINUS_Q
from jlambda.qpoly import IntPoly
from jlambda.qpoly import RatPoly
from jlambda.tests.utils import make_test
from jlambda.tests.utils import override_setting

P = Partition.parse


@pytest.fixture(scope="module")
def levels():
    return compute_levels(9)


@make_test
def test_power_sums(case: TestCase) -> None:
    case.assertEqual(specialized_p(1), IntPoly((1,)))
    case.assertEqual(specialized_p(2), IntPoly((1, -1)))
    case.assertEqual(specialized_p(3), RatPoly(IntPoly((2, -3, 0, 1)), 2))
    with case.assertRaises(ValueError):
        specialized_p(0)


def test_power_sums_carry_the_tree_enumerators(levels):
    for k in range(1, 10):
        expected = RatPoly(
            ONE_MINUS_Q ** (k - 1) * levels[k][Partition.single_row(k)],
            math.factorial(k - 1),
        )
        assert specialized_p(k) == expected


@make_test
def test_augmented_monomials(case: TestCase) -> None:
    case.assertEqual(augmented_monomial_specialized(P("1,1")), IntPoly((0, 1)))
    case.assertEqual(
        augmented_monomial_specialized(P("2,1")), RatPoly(IntPoly((0, 1, 0, -1)), 2)
    )
    for n in range(1, 7):
        case.assertEqual(
            augmented_monomial_specialized(Partition.single_column(n)),
            IntPoly.monomial(math.comb(n, 2)),
        )


def test_factored_monomials_expand_to_the_oracle(levels):
    for n in range(1, 8):
        for lam in levels[n]:
            expanded = m_lambda_factored(lam, levels[n]).expand()
            oracle = augmented_monomial_specialized(lam)
            assert expanded * m_factorial(lam) == oracle


def test_verify_factorization_passes_through_nine(levels):
    for n in range(1, 10):
        for lam, poly in levels[n].items():
            results = verify_factorization(lam, poly)
            assert len(results) == 4
            assert all(check.passed for check in results), results


def test_verify_factorization_reports_each_clause(levels):
    lam = P("3,1")
    results = verify_factorization(lam, levels[4][lam] + 1)
    outcome = {check.check: check.passed for check in results}
    assert outcome == {
        "factor_divisible": True,
        "factor_degree_order": True,
        "factor_extremes": True,
        "factor_matches_engine": False,
    }
    failed = results[-1]
    assert "engine" in failed.witness and "oracle" in failed.witness


def test_power_sum_family(levels):
    for n in range(1, 9):
        for r in range(1, n + 1):
            check = power_sum_family_check(n, r, jnr_aggregate(n, r, levels[n]))
            assert check.passed, check


@override_setting("symfunc_max_weight", 4)
def test_guard():
    with pytest.raises(GuardViolation):
        augmented_monomial_specialized(P("3,2"))
