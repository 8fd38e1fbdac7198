"""q-deformed kernels f, g, h, t and the products built from them.

A context object carries the deformation parameter and evaluates the four
kernels. ``QContext`` is the trigonometric case; ``InvariantContext`` holds
the GL(3)-invariant analogs used for the q -> 1 correspondence. Both accept
Fraction or RatFun arguments, so the same formulas serve exact evaluation,
symbolic residues and the scaling path.
"""
from __future__ import annotations

from fractions import Fraction
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from errors import InputError, PoleError
from exact import is_scalar, to_scalar
from unipoly import RatFun

log = logging.getLogger(__name__)

KINDS = ("f", "g", "h", "t")


def _field(value: Any) -> Any:
    if isinstance(value, RatFun):
        return value
    return to_scalar(value)


class QContext:
    def __init__(self, q: Any) -> None:
        q = _field(q)
        if q == 0:
            raise InputError("q must be nonzero")
        if q * q == 1:
            raise InputError(f"q^2 = 1 makes the kernels degenerate (q = {q})")
        self.q = q
        self.qi = 1 / q
        self.c = q - self.qi

    @property
    def key(self) -> Optional[Tuple[str, Fraction]]:
        if isinstance(self.q, Fraction):
            return ("q", self.q)
        return None

    def __repr__(self) -> str:
        return f"QContext(q={self.q})"

    def shift(self, x: Any, power: int) -> Any:
        """x * q**power"""
        return x * self.q ** power

    def f(self, x: Any, y: Any) -> Any:
        if x == y:
            raise PoleError("f", (x, y))
        return (self.q * x - self.qi * y) / (x - y)

    def g(self, x: Any, y: Any) -> Any:
        if x == y:
            raise PoleError("g", (x, y))
        return self.c / (x - y)

    def h(self, x: Any, y: Any) -> Any:
        return (self.q * x - self.qi * y) / self.c

    def t(self, x: Any, y: Any) -> Any:
        if x == y or self.q * x == self.qi * y:
            raise PoleError("t", (x, y))
        return self.c * self.c / ((x - y) * (self.q * x - self.qi * y))

    def pprod(self, xs: Sequence[Any]) -> Any:
        return pprod(xs)

    def qnumber(self, n: int) -> Any:
        return (self.q ** n - self.qi ** n) / self.c

    def kernel(self, kind: str) -> Callable[[Any, Any], Any]:
        if kind not in KINDS:
            raise InputError(f"unknown kernel {kind!r}")
        return getattr(self, kind)


class InvariantContext:
    """GL(3)-invariant kernels with constant c; no pprod prefactors, q = 1."""

    def __init__(self, c: Any) -> None:
        c = _field(c)
        if c == 0:
            raise InputError("c must be nonzero")
        self.c = c
        self.q = Fraction(1)
        self.qi = Fraction(1)

    @property
    def key(self) -> Optional[Tuple[str, Fraction]]:
        if isinstance(self.c, Fraction):
            return ("c", self.c)
        return None

    def __repr__(self) -> str:
        return f"InvariantContext(c={self.c})"

    def shift(self, x: Any, power: int) -> Any:
        # additive image of x * q**power under q = 1 + eps*c/2
        return x + Fraction(power, 2) * self.c

    def f(self, x: Any, y: Any) -> Any:
        if x == y:
            raise PoleError("f0", (x, y))
        return (x - y + self.c) / (x - y)

    def g(self, x: Any, y: Any) -> Any:
        if x == y:
            raise PoleError("g0", (x, y))
        return self.c / (x - y)

    def h(self, x: Any, y: Any) -> Any:
        return (x - y + self.c) / self.c

    def t(self, x: Any, y: Any) -> Any:
        if x == y or x - y + self.c == 0:
            raise PoleError("t0", (x, y))
        return self.c * self.c / ((x - y) * (x - y + self.c))

    def pprod(self, xs: Sequence[Any]) -> Any:
        return Fraction(1)

    def qnumber(self, n: int) -> Any:
        return Fraction(n)

    def kernel(self, kind: str) -> Callable[[Any, Any], Any]:
        if kind not in KINDS:
            raise InputError(f"unknown kernel {kind!r}")
        return getattr(self, kind)


def qcontext(q: Any) -> QContext:
    return QContext(q)


def kfun(kind: str, x: Any, y: Any, ctx: Any) -> Any:
    return ctx.kernel(kind)(x, y)


def kfun_prod(kind: str, xs: Sequence[Any], ys: Sequence[Any], ctx: Any) -> Any:
    """Double product over all pairs; same-set calls include the diagonal."""
    fn = ctx.kernel(kind)
    out: Any = Fraction(1)
    for x in xs:
        for y in ys:
            out = out * fn(x, y)
    return out


def delta(kind: str, ws: Sequence[Any], ctx: Any) -> Any:
    """kind "D": prod_{j>k} g(w_j, w_k); kind "D'": prod_{j<k} g(w_j, w_k)."""
    if kind not in ("D", "D'"):
        raise InputError(f"unknown delta kind {kind!r}")
    out: Any = Fraction(1)
    n = len(ws)
    for j in range(n):
        for k in range(j + 1, n):
            if kind == "D":
                out = out * ctx.g(ws[k], ws[j])
            else:
                out = out * ctx.g(ws[j], ws[k])
    return out


def delta_n(ws: Sequence[Any], ctx: Any) -> Any:
    return delta("D", ws, ctx)


def delta_prime(ws: Sequence[Any], ctx: Any) -> Any:
    return delta("D'", ws, ctx)


def pprod(xs: Sequence[Any]) -> Any:
    out: Any = Fraction(1)
    for x in xs:
        out = out * x
    return out


def shifted(xs: Sequence[Any], power: int, ctx: Any) -> List[Any]:
    return [ctx.shift(x, power) for x in xs]


def c_h(cfg: Any) -> Any:
    """h(vC, vC) h(vC, uB) h(uB, uB) for any object carrying vC, uB and ctx."""
    ctx = cfg.ctx
    return (
        kfun_prod("h", cfg.vC, cfg.vC, ctx)
        * kfun_prod("h", cfg.vC, cfg.uB, ctx)
        * kfun_prod("h", cfg.uB, cfg.uB, ctx)
    )


def kfun_invariant(kind: str, x: Any, y: Any, c: Any) -> Any:
    return kfun(kind, x, y, InvariantContext(c))


def qnumber(n: int, ctx: Any) -> Any:
    return ctx.qnumber(n)


def scale(slope: Any) -> RatFun:
    """1 + eps * slope"""
    return RatFun.linear(1, slope)


def scaling_context(c: Any) -> QContext:
    """q = 1 + eps * c / 2"""
    c = to_scalar(c)
    if c == 0:
        raise InputError("c must be nonzero")
    return QContext(RatFun.linear(1, c / 2))


def scaling_substitute(kind: str, x_slope: Any, y_slope: Any, c: Any) -> RatFun:
    x_slope, y_slope = to_scalar(x_slope), to_scalar(y_slope)
    if x_slope == y_slope:
        raise InputError(f"scaling needs distinct slopes, got {x_slope} twice")
    ctx = scaling_context(c)
    return RatFun.coerce(kfun(kind, scale(x_slope), scale(y_slope), ctx))


def kernel_relations(x: Any, y: Any, ctx: QContext) -> List[Tuple[str, Any, Any]]:
    """The shift relations between kernels, plus the factorizations f = g h and t = g / h."""
    q, qi = ctx.q, ctx.qi
    xm2 = ctx.shift(x, -2)
    return [
        ("h(xq^-2,y) = q^-1/g(x,y)", ctx.h(xm2, y), qi / ctx.g(x, y)),
        ("g(x,yq^-2) = q/h(x,y)", ctx.g(x, ctx.shift(y, -2)), q / ctx.h(x, y)),
        ("g(xq^-2,x) = -q/x", ctx.g(xm2, x), -q / x),
        ("t(xq^-2,y) = q^2 t(y,x)", ctx.t(xm2, y), q * q * ctx.t(y, x)),
        ("t(x,yq^2) = q^-2 t(y,x)", ctx.t(x, ctx.shift(y, 2)), qi * qi * ctx.t(y, x)),
        ("f(xq^-2,y) = 1/f(y,x)", ctx.f(xm2, y), 1 / ctx.f(y, x)),
        ("h = f/g", ctx.h(x, y), ctx.f(x, y) / ctx.g(x, y)),
        ("t = g/h", ctx.t(x, y), ctx.g(x, y) / ctx.h(x, y)),
        ("g(x,y) = -g(y,x)", ctx.g(x, y), -ctx.g(y, x)),
        ("h(x,x) = x", ctx.h(x, x), x),
    ]
