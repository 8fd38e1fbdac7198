"""Exact univariate rational functions in one symbolic slot.

Numerator and denominator are sympy ``Poly`` objects over ``QQ``. Every
arithmetic result is reduced by the polynomial gcd and normalized so that
the denominator is monic, which makes equality a structural comparison.

Values at points come back as ``fractions.Fraction`` so that the rest of the
engine never sees sympy numbers.
"""
from __future__ import annotations

from fractions import Fraction
import logging
from typing import Any, Iterable, List, Sequence, Tuple

import sympy
from sympy import Poly, QQ
from sympy.polys.polyfuncs import interpolate

from errors import InputError, PoleError, UnsupportedOrderError
from exact import is_scalar, to_scalar

log = logging.getLogger(__name__)

EPS = sympy.Symbol("eps")


def _to_sympy(value: Any) -> sympy.Rational:
    f = to_scalar(value)
    return sympy.Rational(f.numerator, f.denominator)


def _to_fraction(value: Any) -> Fraction:
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def _poly(expr: Any) -> Poly:
    return Poly(expr, EPS, domain=QQ)


def poly_coefficients(p: Poly) -> List[Fraction]:
    """Coefficients lowest degree first; the zero polynomial gives []."""
    if p.is_zero:
        return []
    return [_to_fraction(c) for c in reversed(p.all_coeffs())]


def poly_from_coefficients(coeffs: Sequence[Any]) -> Poly:
    expr = sum((_to_sympy(c) * EPS ** i for i, c in enumerate(coeffs)), sympy.Integer(0))
    return _poly(expr)


def poly_eval(p: Poly, point: Any) -> Fraction:
    return _to_fraction(p.eval(_to_sympy(point)))


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num: Any, den: Any = 1) -> None:
        num = num if isinstance(num, Poly) else _poly(num)
        den = den if isinstance(den, Poly) else _poly(den)
        if den.is_zero:
            raise PoleError("ratfun", (), "zero denominator in rational function")
        if num.is_zero:
            self.num = _poly(0)
            self.den = _poly(1)
            return
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC()
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, value: Any) -> "RatFun":
        return cls(_to_sympy(value))

    @classmethod
    def var(cls) -> "RatFun":
        return cls(EPS)

    @classmethod
    def linear(cls, offset: Any, slope: Any) -> "RatFun":
        """offset + slope * eps"""
        return cls(_to_sympy(offset) + _to_sympy(slope) * EPS)

    @staticmethod
    def coerce(value: Any) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        if is_scalar(value):
            return RatFun.const(value)
        raise TypeError(f"cannot use {type(value).__name__} as a rational function")

    @property
    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise InputError(f"{self} is not constant")
        return poly_eval(self.num, 0)

    def __add__(self, other: Any) -> "RatFun":
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other: Any) -> "RatFun":
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "RatFun":
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "RatFun":
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RatFun":
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero:
            raise PoleError("ratfun", (), "division by the zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Any) -> "RatFun":
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "RatFun":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatFun(1) / (self ** (-n))
        return RatFun(self.num ** n, self.den ** n)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if is_scalar(other):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __ne__(self, other: Any) -> bool:
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant_value())
        return hash((tuple(poly_coefficients(self.num)), tuple(poly_coefficients(self.den))))

    def __repr__(self) -> str:
        return f"RatFun(({self.num.as_expr()})/({self.den.as_expr()}))"

    def derivative(self) -> "RatFun":
        n, d = self.num, self.den
        return RatFun(n.diff(EPS) * d - n * d.diff(EPS), d * d)

    def eval(self, point: Any) -> Fraction:
        return ratfun_eval(self, point)

    def limit(self, point: Any) -> Fraction:
        return ratfun_limit(self, point)

    def residue(self, point: Any) -> Fraction:
        return ratfun_residue(self, point)


def ratfun_eval(f: RatFun, point: Any) -> Fraction:
    p = _to_sympy(point)
    d = f.den.eval(p)
    if d == 0:
        raise PoleError("ratfun", (to_scalar(point),))
    return _to_fraction(f.num.eval(p) / d)


def ratfun_limit(f: RatFun, point: Any) -> Fraction:
    # stored form is already reduced, so a vanishing denominator is a genuine pole
    return ratfun_eval(f, point)


def _root_multiplicity(p: Poly, point: sympy.Rational) -> Tuple[int, Poly]:
    linear = _poly(EPS - point)
    order = 0
    while not p.is_zero and p.eval(point) == 0:
        p, rem = p.div(linear)
        if not rem.is_zero:
            break
        order += 1
    return order, p


def ratfun_residue(f: RatFun, point: Any) -> Fraction:
    p = _to_sympy(point)
    order, _ = _root_multiplicity(f.den, p)
    if order == 0:
        return Fraction(0)
    if order > 1:
        raise UnsupportedOrderError("ratfun", (to_scalar(point),), f"pole of order {order} at {point}")
    return _to_fraction(f.num.eval(p) / f.den.diff(EPS).eval(p))


def poly_interpolate(points: Iterable[Tuple[Any, Any]]) -> Poly:
    pts = [(to_scalar(x), to_scalar(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise InputError(f"repeated abscissa among {[str(x) for x in xs]}")
    if not pts:
        return _poly(0)
    log.debug("interpolating through %d points", len(pts))
    if len(pts) == 1:
        return _poly(_to_sympy(pts[0][1]))
    expr = interpolate([(_to_sympy(x), _to_sympy(y)) for x, y in pts], EPS)
    return _poly(sympy.expand(expr))


def poly_derivative(p: Poly) -> Poly:
    return p.diff(EPS)
