"""
Exact polynomial arithmetic in one indeterminate q.

IntPoly wraps sympy's dense univariate representation over ZZ (coefficient
lists, highest degree first). The public API is ascending: ``coeffs[m]`` is
the coefficient of q**m.
"""
import math
from fractions import Fraction
from typing import Iterable
from typing import List
from typing import Tuple
from typing import Union

from sympy.polys.densearith import dup_add
from sympy.polys.densearith import dup_div
from sympy.polys.densearith import dup_lshift
from sympy.polys.densearith import dup_mul
from sympy.polys.densearith import dup_mul_ground
from sympy.polys.densearith import dup_neg
from sympy.polys.densearith import dup_pow
from sympy.polys.densearith import dup_quo_ground
from sympy.polys.densearith import dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_content
from sympy.polys.densetools import dup_eval
from sympy.polys.densetools import dup_shift
from sympy.polys.domains import ZZ

from jlambda.exceptions import InexactDivision
from jlambda.exceptions import NegativePowerResidue

Scalar = Union[int, Fraction]


class IntPoly:
    __slots__ = ("_rep",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        self._rep: List = dup_strip([ZZ(int(c)) for c in reversed(list(coeffs))])

    @classmethod
    def _wrap(cls, rep: List) -> "IntPoly":
        poly = cls.__new__(cls)
        poly._rep = dup_strip(rep)
        return poly

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPoly":
        if exponent < 0:
            raise ValueError(f"IntPoly exponents are non-negative, found {exponent}")
        return cls._wrap(dup_lshift([ZZ(coefficient)], exponent, ZZ))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        try:
            return cls(int(c) for c in text.split(","))
        except ValueError as e:
            raise ValueError(f"invalid coefficient text {text!r}: {e}") from None

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return tuple(int(c) for c in reversed(self._rep))

    @property
    def text(self) -> str:
        if not self._rep:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not self._rep

    @property
    def degree(self) -> int:
        if not self._rep:
            raise ValueError("the degree of the zero polynomial is undefined")
        return len(self._rep) - 1

    @property
    def order(self) -> int:
        if not self._rep:
            raise ValueError("the order of the zero polynomial is undefined")
        rep = self._rep
        for m, c in enumerate(reversed(rep)):
            if c:
                return m
        raise AssertionError("stripped representation has a nonzero coefficient")

    @property
    def leading(self) -> int:
        return int(self._rep[0]) if self._rep else 0

    @property
    def constant(self) -> int:
        return int(self._rep[-1]) if self._rep else 0

    def coefficient(self, m: int) -> int:
        """⟨q^m⟩P; zero outside the support."""
        if m < 0 or m >= len(self._rep):
            return 0
        return int(self._rep[len(self._rep) - 1 - m])

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q**k, k >= 0."""
        if k < 0:
            raise ValueError(f"IntPoly.shift needs k >= 0, use LaurentPoly for {k}")
        return IntPoly._wrap(dup_lshift(self._rep, k, ZZ))

    def drop_low(self, k: int) -> "IntPoly":
        """Divide by q**k, the k lowest coefficients must vanish."""
        if k and any(self._rep[-k:]):
            raise NegativePowerResidue(f"q^{k} does not divide {self.text}")
        return IntPoly._wrap(self._rep[:-k] if k else self._rep)

    def substitute_shift(self, a: int) -> "IntPoly":
        """P(q + a)."""
        return IntPoly._wrap(dup_shift(self._rep, ZZ(a), ZZ))

    def exquo_ground(self, c: int) -> "IntPoly":
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by 0")
        if any(x % c for x in self._rep):
            raise InexactDivision(f"{c} does not divide {self.text}")
        return IntPoly._wrap(dup_quo_ground(self._rep, ZZ(c), ZZ))

    def __call__(self, x: int) -> int:
        return int(dup_eval(self._rep, ZZ(x), ZZ))

    def __bool__(self) -> bool:
        return bool(self._rep)

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _as_intpoly(other)
        return IntPoly._wrap(dup_add(self._rep, other._rep, ZZ))

    __radd__ = __add__

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _as_intpoly(other)
        return IntPoly._wrap(dup_sub(self._rep, other._rep, ZZ))

    def __rsub__(self, other: int) -> "IntPoly":
        return _as_intpoly(other) - self

    def __neg__(self) -> "IntPoly":
        return IntPoly._wrap(dup_neg(self._rep, ZZ))

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly._wrap(dup_mul_ground(self._rep, ZZ(other), ZZ))
        return IntPoly._wrap(dup_mul(self._rep, other._rep, ZZ))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        return IntPoly._wrap(dup_pow(self._rep, exponent, ZZ))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._rep == other._rep

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly(({self.text}))"


def _as_intpoly(value: Union[IntPoly, int]) -> IntPoly:
    return IntPoly((value,)) if isinstance(value, int) else value


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))
Q_MINUS_ONE = IntPoly((-1, 1))
ONE_MINUS_Q = IntPoly((1, -1))


class LaurentPoly:
    """body * q**offset, canonical when the body has a nonzero constant slot."""

    __slots__ = ("body", "offset")

    def __init__(self, body: IntPoly, offset: int = 0) -> None:
        if body.is_zero():
            offset = 0
        else:
            low = body.order
            if low:
                body = body.drop_low(low)
                offset += low
        self.body = body
        self.offset = offset

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls(IntPoly((coefficient,)), exponent)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.body, self.offset + k)

    def _aligned(self, other: "LaurentPoly") -> Tuple[IntPoly, IntPoly, int]:
        if self.is_zero():
            return ZERO, other.body, other.offset
        if other.is_zero():
            return self.body, ZERO, self.offset
        low = min(self.offset, other.offset)
        return (
            self.body.shift(self.offset - low),
            other.body.shift(other.offset - low),
            low,
        )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b, low = self._aligned(other)
        return LaurentPoly(a + b, low)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b, low = self._aligned(other)
        return LaurentPoly(a - b, low)

    def __mul__(self, other: Union["LaurentPoly", IntPoly, int]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return LaurentPoly(self.body * other.body, self.offset + other.offset)
        return LaurentPoly(self.body * other, self.offset)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.body == other.body and self.offset == other.offset

    def __hash__(self) -> int:
        return hash((self.body, self.offset))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.body!r}, offset={self.offset})"


class RatPoly:
    """numerator / denominator with one shared positive integer denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: IntPoly, denominator: int = 1) -> None:
        if denominator == 0:
            raise ZeroDivisionError("RatPoly denominator is zero")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        if numerator.is_zero():
            denominator = 1
        else:
            g = math.gcd(int(dup_content(numerator._rep, ZZ)), denominator)
            if g > 1:
                numerator = IntPoly._wrap(dup_quo_ground(numerator._rep, ZZ(g), ZZ))
                denominator //= g
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def constant(cls, value: Scalar) -> "RatPoly":
        value = Fraction(value)
        return cls(IntPoly((value.numerator,)), value.denominator)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    @property
    def degree(self) -> int:
        return self.numerator.degree

    @property
    def order(self) -> int:
        return self.numerator.order

    def coefficient(self, m: int) -> Fraction:
        return Fraction(self.numerator.coefficient(m), self.denominator)

    def shift(self, k: int) -> "RatPoly":
        return RatPoly(self.numerator.shift(k), self.denominator)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        den = self.denominator * other.denominator // math.gcd(
            self.denominator, other.denominator
        )
        return RatPoly(
            self.numerator * (den // self.denominator)
            + other.numerator * (den // other.denominator),
            den,
        )

    def __neg__(self) -> "RatPoly":
        return RatPoly(-self.numerator, self.denominator)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: Union["RatPoly", IntPoly, Scalar]) -> "RatPoly":
        if isinstance(other, RatPoly):
            return RatPoly(
                self.numerator * other.numerator, self.denominator * other.denominator
            )
        if isinstance(other, IntPoly):
            return RatPoly(self.numerator * other, self.denominator)
        other = Fraction(other)
        return RatPoly(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            other = RatPoly(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return (
            self.numerator == other.numerator and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"RatPoly({self.numerator!r}, {self.denominator})"


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def q_analogue(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError(f"q_analogue needs n >= 0, found {n}")
    return IntPoly((1,) * n)


def finalize(poly: LaurentPoly) -> IntPoly:
    if poly.offset < 0 and not poly.is_zero():
        raise NegativePowerResidue(
            f"q^{poly.offset} survives in {poly.body.text} after cancellation"
        )
    return poly.body.shift(poly.offset) if not poly.is_zero() else ZERO


def content_split(poly: IntPoly) -> Tuple[int, IntPoly]:
    """Return (Δ, P/Δ) where Δ is the gcd of the coefficients."""
    if poly.is_zero():
        raise ValueError("the content of the zero polynomial is undefined")
    delta = int(dup_content(poly._rep, ZZ))
    return delta, IntPoly._wrap(dup_quo_ground(poly._rep, ZZ(delta), ZZ))


def rat_to_int(poly: RatPoly) -> IntPoly:
    if poly.denominator != 1:
        raise InexactDivision(
            f"{poly.numerator.text} keeps the denominator {poly.denominator}"
        )
    return poly.numerator


def exact_divide(poly: IntPoly, divisor: IntPoly) -> IntPoly:
    quotient, remainder = dup_div(poly._rep, divisor._rep, ZZ)
    if remainder:
        raise InexactDivision(f"{divisor.text} does not divide {poly.text}")
    return IntPoly._wrap(quotient)
