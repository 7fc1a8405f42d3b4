"""
Rational functions over the Laurent ring and the localization Lambda_S.

Lambda_S inverts every (1 - t_i).  Classes in Q / Lambda_S have no canonical
representative in several variables, so equality there is decided by
testing whether a difference lies in Lambda_S.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError
from .polyring import LaurentPoly, _exact, format_poly, gcd, parse_expression


class RatFunc:
    """A reduced fraction ``num / den`` of Laurent polynomials.

    The denominator is the unique associate with zero minimal exponents and
    a positive leading coefficient, so two equal rational functions have
    identical ``num`` and ``den``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("RatFunc(RatFunc, den) is ambiguous")
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, LaurentPoly):
            raise TypeError(f"numerator must be a LaurentPoly, got {type(num).__name__}")
        if den is None:
            den = LaurentPoly.one(num.mu)
        elif isinstance(den, int):
            den = LaurentPoly.constant(num.mu, den)
        if den.mu != num.mu:
            raise DimensionError(f"variable counts differ: {num.mu} vs {den.mu}")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, LaurentPoly.one(num.mu)
            return
        if not _reduced and not den.is_unit():
            g = gcd(num, den)
            if g != 1:
                num, den = _exact(num, g), _exact(den, g)
        unit, den = den.normalized()
        # unit is +-monomial; its inverse is bar-free: sign * t^-m
        self.num = num * unit ** -1
        self.den = den

    @classmethod
    def from_int(cls, mu: int, c: int) -> "RatFunc":
        return cls(LaurentPoly.constant(mu, c))

    @property
    def mu(self) -> int:
        return self.num.mu

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.mu != self.mu:
                raise DimensionError(f"variable counts differ: {self.mu} vs {other.mu}")
            return other
        if isinstance(other, LaurentPoly):
            if other.mu != self.mu:
                raise DimensionError(f"variable counts differ: {self.mu} vs {other.mu}")
            return RatFunc(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return RatFunc.from_int(self.mu, other)
        if isinstance(other, LambdaSElement):
            return other.value
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFunc(LaurentPoly.zero(self.mu))
        # cross-cancel before multiplying to keep supports small
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        num = _exact(self.num, g1) * _exact(other.num, g2)
        den = _exact(self.den, g2) * _exact(other.den, g1)
        return RatFunc(num, den, _reduced=True)

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num, _reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** -k
        return RatFunc(self.num ** k, self.den ** k, _reduced=True)

    def bar(self) -> "RatFunc":
        return RatFunc(self.num.bar(), self.den.bar(), _reduced=True)

    def in_lambda_s(self) -> bool:
        return in_lambda_s(self)

    def __str__(self) -> str:
        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({self.mu}, {str(self)!r})"


def add(x: RatFunc, y: RatFunc) -> RatFunc:
    return x + y


def mul(x: RatFunc, y: RatFunc) -> RatFunc:
    return x * y


def neg(x: RatFunc) -> RatFunc:
    return -x


def inv(x: RatFunc) -> RatFunc:
    return x.inv()


def bar(x: RatFunc) -> RatFunc:
    return x.bar()


def as_ratfunc(x, mu: int | None = None) -> RatFunc:
    """Coerce ints, Laurent polynomials and Lambda_S elements to RatFunc."""
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LambdaSElement):
        return x.value
    if isinstance(x, LaurentPoly):
        return RatFunc(x)
    if isinstance(x, int) and not isinstance(x, bool):
        if mu is None:
            raise TypeError("an integer needs an explicit variable count")
        return RatFunc.from_int(mu, x)
    raise TypeError(f"cannot interpret {x!r} as a rational function")


def _one_minus_t(mu: int, i: int) -> LaurentPoly:
    return 1 - LaurentPoly.var(mu, i)


def strip_inverted_factors(p: LaurentPoly) -> tuple[LaurentPoly, tuple[int, ...]]:
    """Divide out every power of (1 - t_i) from ``p``.

    Returns the cofactor and the multiplicity of each (1 - t_i).
    """
    powers = []
    for i in range(1, p.mu + 1):
        f = _one_minus_t(p.mu, i)
        k = 0
        while True:
            q = p.divide_exact(f)
            if q is None:
                break
            p, k = q, k + 1
        powers.append(k)
    return p, tuple(powers)


def in_lambda_s(x) -> bool:
    """Membership in Lambda_S = Lambda[(1 - t_i)^-1].

    The reduced denominator must be, up to +-monomial, a product of powers
    of the (1 - t_i).  Since numerators have integer coefficients, a
    leftover integer factor such as 2 in the denominator means the element
    is not in Lambda_S.
    """
    x = as_ratfunc(x)
    rest, _ = strip_inverted_factors(x.den)
    return rest.is_unit()


def qmod_equal(x, y) -> bool:
    """Equality of classes in Q / Lambda_S."""
    x, y = as_ratfunc(x), as_ratfunc(y, as_ratfunc(x).mu)
    if x.mu != y.mu:
        raise DimensionError(f"variable counts differ: {x.mu} vs {y.mu}")
    return in_lambda_s(x - y)


@dataclass(frozen=True)
class LambdaSElement:
    """A rational function known to lie in Lambda_S."""

    value: RatFunc

    def __post_init__(self):
        v = as_ratfunc(self.value)
        if not in_lambda_s(v):
            raise ValueError(f"{v} is not in Lambda_S")
        object.__setattr__(self, "value", v)

    @property
    def mu(self) -> int:
        return self.value.mu

    def __str__(self) -> str:
        return str(self.value)


# -- text ----------------------------------------------------------------------


def _wrap(p: LaurentPoly) -> str:
    s = format_poly(p)
    return f"({s})" if len(p) > 1 else s


def format_ratfunc(x: RatFunc) -> str:
    """Canonical text ``num / den``; factors with several terms are parenthesized."""
    if x.den == 1:
        return format_poly(x.num)
    return f"{_wrap(x.num)} / {_wrap(x.den)}"


def format_class(x: RatFunc) -> str:
    return f"{format_ratfunc(x)} mod Lambda_S"


def parse_ratfunc(text: str, mu: int) -> RatFunc:
    return as_ratfunc(parse_expression(text, mu), mu)
