import random
from fractions import Fraction
from unittest import TestCase

import pytest

from jlambda.exceptions import InexactDivision
from jlambda.exceptions import NegativePowerResidue
from jlambda.qpoly import ONE
from jlambda.qpoly import ONE_MINUS_Q
from jlambda.qpoly import Q
from jlambda.qpoly import ZERO
from jlambda.qpoly import IntPoly
from jlambda.qpoly import LaurentPoly
from jlambda.qpoly import RatPoly
from jlambda.qpoly import binomial
from jlambda.qpoly import content_split
from jlambda.qpoly import exact_divide
from jlambda.qpoly import finalize
from jlambda.qpoly import q_analogue
from jlambda.qpoly import rat_to_int
from jlambda.tests.utils import J_321
from jlambda.tests.utils import J_5
from jlambda.tests.utils import make_test


def random_poly(rng: random.Random) -> IntPoly:
    return IntPoly(rng.randrange(-(2**256), 2**256) for _ in range(rng.randrange(6)))


@make_test
def test_text_forms(case: TestCase) -> None:
    case.assertEqual(IntPoly((6, 6, 3, 1)).text, "6,6,3,1")
    case.assertEqual(IntPoly.parse("6,6,3,1"), IntPoly((6, 6, 3, 1)))
    case.assertEqual(IntPoly((1, 2, 0, 0)).coeffs, (1, 2))
    case.assertEqual(ZERO.text, "0")
    case.assertTrue(IntPoly.parse("0").is_zero())
    with case.assertRaises(ValueError):
        IntPoly.parse("1,x")


@make_test
def test_degree_order_and_coefficients(case: TestCase) -> None:
    poly = IntPoly((0, 0, 3, 5))
    case.assertEqual(poly.degree, 3)
    case.assertEqual(poly.order, 2)
    case.assertEqual(poly.leading, 5)
    case.assertEqual(poly.constant, 0)
    case.assertEqual(poly.coefficient(2), 3)
    case.assertEqual(poly.coefficient(-1), 0)
    case.assertEqual(poly.coefficient(9), 0)
    case.assertEqual(poly(1), 8)
    with case.assertRaises(ValueError):
        ZERO.degree
    with case.assertRaises(ValueError):
        ZERO.order


@make_test
def test_arithmetic(case: TestCase) -> None:
    case.assertEqual((ONE + Q) * (ONE - Q), IntPoly((1, 0, -1)))
    case.assertEqual(Q * 3 + 1, IntPoly((1, 3)))
    case.assertEqual(1 - Q, ONE_MINUS_Q)
    case.assertEqual(-Q, IntPoly((0, -1)))
    case.assertEqual((ONE + Q) ** 3, IntPoly((1, 3, 3, 1)))
    case.assertEqual(IntPoly((7,)), 7)
    case.assertEqual(IntPoly((2, 1)).shift(2), IntPoly((0, 0, 2, 1)))
    case.assertEqual(IntPoly((0, 0, 2, 1)).drop_low(2), IntPoly((2, 1)))
    with case.assertRaises(NegativePowerResidue):
        IntPoly((1, 1)).drop_low(1)
    with case.assertRaises(ValueError):
        Q.shift(-1)


def test_ring_axioms_on_wide_coefficients():
    rng = random.Random(20261019)
    for _ in range(50):
        a, b, c = random_poly(rng), random_poly(rng), random_poly(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == ZERO
        if not a.is_zero() and not b.is_zero():
            assert (a * b).degree == a.degree + b.degree
            assert (a * b).order == a.order + b.order


@make_test
def test_substitute_shift(case: TestCase) -> None:
    # 3 + t at t = q - 1
    case.assertEqual(IntPoly((3, 1)).substitute_shift(-1), IntPoly((2, 1)))
    case.assertEqual(
        IntPoly((16, 15, 6, 1)).substitute_shift(-1), IntPoly((6, 6, 3, 1))
    )


@make_test
def test_laurent_canonical_form(case: TestCase) -> None:
    poly = LaurentPoly(IntPoly((0, 0, 3, 2, 1)), -2)
    case.assertEqual(poly.offset, 0)
    case.assertEqual(poly.body, IntPoly((3, 2, 1)))
    case.assertEqual(LaurentPoly(ZERO, -5).offset, 0)
    case.assertEqual(LaurentPoly.monomial(-1) * Q, LaurentPoly(ONE))


@make_test
def test_laurent_add_aligns_offsets(case: TestCase) -> None:
    total = LaurentPoly.monomial(-1, 2) + LaurentPoly(IntPoly((-2, -1, 1)), -1)
    case.assertEqual(finalize(total), IntPoly((-1, 1)))


@make_test
def test_finalize(case: TestCase) -> None:
    case.assertEqual(finalize(LaurentPoly(IntPoly((1, 1)))), IntPoly((1, 1)))
    case.assertEqual(finalize(LaurentPoly(IntPoly((1,)), 2)), IntPoly((0, 0, 1)))
    case.assertEqual(finalize(LaurentPoly(ZERO, -3)), ZERO)
    with case.assertRaises(NegativePowerResidue):
        finalize(LaurentPoly(ONE, -1))


def test_finalize_undoes_shifts():
    poly = LaurentPoly(IntPoly((4, 0, 1)))
    for k in range(5):
        assert finalize(poly.shift(k).shift(-k)) == IntPoly((4, 0, 1))


def test_laurent_ring_axioms():
    rng = random.Random(7)
    zero = LaurentPoly(ZERO)
    for _ in range(50):
        a, b, c = (
            LaurentPoly(random_poly(rng), rng.randrange(-8, 9)) for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == zero
        assert a * LaurentPoly(ONE) == a
        assert (a * b).shift(-a.offset - b.offset).body == a.body * b.body


@make_test
def test_ratpoly_canonical_form(case: TestCase) -> None:
    half = RatPoly(IntPoly((4, 4)), 4)
    case.assertEqual(half.numerator, IntPoly((1, 1)))
    case.assertEqual(half.denominator, 1)
    negative = RatPoly(IntPoly((3,)), -6)
    case.assertEqual(negative.numerator, IntPoly((-1,)))
    case.assertEqual(negative.denominator, 2)
    case.assertEqual(RatPoly(ZERO, 7).denominator, 1)
    with case.assertRaises(ZeroDivisionError):
        RatPoly(ONE, 0)


@make_test
def test_ratpoly_arithmetic(case: TestCase) -> None:
    a = RatPoly(IntPoly((1, 1)), 2)
    b = RatPoly(IntPoly((0, 1)), 3)
    case.assertEqual(a + b, RatPoly(IntPoly((3, 5)), 6))
    case.assertEqual(a - a, RatPoly(ZERO))
    case.assertEqual(a * b, RatPoly(IntPoly((0, 1, 1)), 6))
    case.assertEqual(a * 2, IntPoly((1, 1)))
    case.assertEqual(a * Fraction(1, 3), RatPoly(IntPoly((1, 1)), 6))
    case.assertEqual(a.coefficient(1), Fraction(1, 2))
    case.assertEqual(RatPoly.constant(Fraction(3, 4)), RatPoly(IntPoly((3,)), 4))


def test_ratpoly_ring_axioms():
    rng = random.Random(43)
    for _ in range(30):
        a, b, c = (
            RatPoly(random_poly(rng), rng.randrange(1, 10**6)) for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a - a == RatPoly(ZERO)


@make_test
def test_binomial_and_q_analogue(case: TestCase) -> None:
    case.assertEqual(binomial(5, 2), 10)
    case.assertEqual(binomial(3, 5), 0)
    case.assertEqual(binomial(-1, 0), 0)
    case.assertEqual(binomial(200, 100), 2 * binomial(199, 99))
    case.assertEqual(q_analogue(0), ZERO)
    case.assertEqual(q_analogue(1), ONE)
    case.assertEqual(q_analogue(3), IntPoly((1, 1, 1)))
    case.assertEqual(q_analogue(7)(1), 7)


@make_test
def test_content_split(case: TestCase) -> None:
    case.assertEqual(content_split(IntPoly((2, 2, 2))), (2, IntPoly((1, 1, 1))))
    case.assertEqual(content_split(J_321), (1, J_321))
    case.assertEqual(content_split(IntPoly((6,))), (6, ONE))
    with case.assertRaises(ValueError):
        content_split(ZERO)


@make_test
def test_rat_to_int(case: TestCase) -> None:
    case.assertEqual(rat_to_int(RatPoly(IntPoly((4, 4)), 4)), IntPoly((1, 1)))
    with case.assertRaises(InexactDivision):
        rat_to_int(RatPoly(IntPoly((3,)), 2))


def test_rat_to_int_on_the_weight_five_accumulation():
    # 4 · Σ J_λ q^n(λ) / m(λ)! over the partitions of 4, common denominator 4
    numerator = (
        IntPoly((6, 6, 3, 1)) * 4
        + IntPoly((3, 3, 2, 1)).shift(1) * 4
        + IntPoly((3, 2, 1)).shift(2) * 2
        + IntPoly((2, 2, 2)).shift(3) * 2
        + IntPoly((1,)).shift(6)
    )
    assert rat_to_int(RatPoly(numerator, 4) * 4) == J_5


@make_test
def test_exact_divide(case: TestCase) -> None:
    case.assertEqual(exact_divide(IntPoly((1, 0, -1)), ONE_MINUS_Q), IntPoly((1, 1)))
    with case.assertRaises(InexactDivision):
        exact_divide(IntPoly((1, 1)), ONE_MINUS_Q)


@pytest.mark.parametrize("c", (2, 3, 7))
def test_exquo_ground(c):
    assert IntPoly((c, 2 * c)).exquo_ground(c) == IntPoly((1, 2))
    with pytest.raises(InexactDivision):
        IntPoly((c + 1, 1)).exquo_ground(c)
