from __future__ import annotations

from fractions import Fraction
import logging
import threading
from typing import Any, Dict, List, Optional, Sequence, Tuple

from errors import InputError
from exact import det_rows
from kernel import delta_n, delta_prime, kfun_prod, shifted
from unipoly import RatFun

log = logging.getLogger(__name__)

PLAIN = "plain"
LEFT = "l"
RIGHT = "r"
VARIANTS = (PLAIN, LEFT, RIGHT)

IzerginKey = Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...], str, Tuple[str, Fraction]]

CACHE_LOCK = threading.Lock()
_CACHE: Dict[IzerginKey, Any] = {}
_STATS = {"hits": 0, "misses": 0}


def check_branch(branch: str) -> str:
    if branch not in (LEFT, RIGHT):
        raise InputError(f"branch must be 'l' or 'r', got {branch!r}")
    return branch


def other(branch: str) -> str:
    return RIGHT if check_branch(branch) == LEFT else LEFT


def upper(branch: str) -> int:
    """Sign picked by a (l, r) pair written as -/+ : -1 on the left branch, +1 on the right."""
    return -1 if check_branch(branch) == LEFT else 1


def minus_q_pow(exponent: int, ctx: Any) -> Any:
    return (-ctx.q) ** exponent


def _izergin_key(xs: Sequence[Any], ys: Sequence[Any], variant: str, ctx: Any) -> Optional[IzerginKey]:
    ctx_key = getattr(ctx, "key", None)
    if ctx_key is None:
        return None
    if not all(isinstance(v, Fraction) for v in list(xs) + list(ys)):
        return None
    return (tuple(sorted(xs)), tuple(sorted(ys)), variant, ctx_key)


def _izergin_value(xs: Sequence[Any], ys: Sequence[Any], variant: str, ctx: Any) -> Any:
    n = len(xs)
    rows = []
    for x in xs:
        row = []
        for j, y in enumerate(ys):
            entry = ctx.g(x, y)
            for l, other_y in enumerate(ys):
                if l != j:
                    entry = entry * ctx.h(x, other_y)
            row.append(entry)
        rows.append(row)
    value = delta_prime(xs, ctx) * delta_n(ys, ctx) * det_rows(rows) if n else Fraction(1)
    if variant == LEFT:
        value = value * ctx.pprod(xs)
    elif variant == RIGHT:
        value = value * ctx.pprod(ys)
    return value


def izergin(xs: Sequence[Any], ys: Sequence[Any], variant: str, ctx: Any, use_cache: bool = True) -> Any:
    """Izergin determinant K(xs|ys), optionally multiplied by pprod(xs) ("l") or pprod(ys) ("r").

    Evaluated as D'(xs) D(ys) det[g(x_i, y_j) h(x_i, ys without y_j)], which equals
    D'(xs) D(ys) h(xs, ys) det[t(x_i, y_j)] and stays finite where h(x_i, y_j) = 0.
    """
    if variant not in VARIANTS:
        raise InputError(f"unknown Izergin variant {variant!r}")
    if len(xs) != len(ys):
        raise InputError(f"Izergin determinant needs equal sizes, got {len(xs)} and {len(ys)}")
    key = _izergin_key(xs, ys, variant, ctx) if use_cache else None
    if key is not None:
        with CACHE_LOCK:
            if key in _CACHE:
                _STATS["hits"] += 1
                return _CACHE[key]
    value = _izergin_value(list(xs), list(ys), variant, ctx)
    if key is not None:
        with CACHE_LOCK:
            _STATS["misses"] += 1
            _CACHE[key] = value
    return value


def izergin_cache_info() -> Dict[str, int]:
    with CACHE_LOCK:
        return {"size": len(_CACHE), "hits": _STATS["hits"], "misses": _STATS["misses"]}


def izergin_cache_clear() -> None:
    with CACHE_LOCK:
        _CACHE.clear()
        _STATS["hits"] = 0
        _STATS["misses"] = 0
    log.debug("izergin cache cleared")


def izergin_symbolic(
    xs: Sequence[Any], ys: Sequence[Any], variant: str, slot: Tuple[str, int], ctx: Any
) -> RatFun:
    """K with one argument replaced by the symbolic variable; slot is ("x", i) or ("y", j)."""
    side, index = slot
    xs, ys = list(xs), list(ys)
    target = xs if side == "x" else ys if side == "y" else None
    if target is None or not 0 <= index < len(target):
        raise InputError(f"bad symbolic slot {slot!r}")
    target[index] = RatFun.var()
    return RatFun.coerce(izergin(xs, ys, variant, ctx, use_cache=False))


def k_red_check(
    xs: Sequence[Any], ys: Sequence[Any], zs: Sequence[Any], branch: str, ctx: Any, form: int = 1
) -> Tuple[Any, Any]:
    """K({xs, zs q^-2}|{ys, zs}) (form 1) or K({xs, zs}|{ys, zs q^2}) (form 2) against (-q)^(-/+m) K(xs|ys)."""
    if form == 1:
        lhs = izergin(list(xs) + shifted(zs, -2, ctx), list(ys) + list(zs), branch, ctx)
    else:
        lhs = izergin(list(xs) + list(zs), list(ys) + shifted(zs, 2, ctx), branch, ctx)
    rhs = minus_q_pow(upper(branch) * len(zs), ctx) * izergin(xs, ys, branch, ctx)
    return lhs, rhs


def k_invers_check(xs: Sequence[Any], ys: Sequence[Any], branch: str, ctx: Any, form: int = 1) -> Tuple[Any, Any]:
    if form == 1:
        lhs = izergin(shifted(xs, -2, ctx), ys, branch, ctx)
    else:
        lhs = izergin(xs, shifted(ys, 2, ctx), branch, ctx)
    rhs = (
        minus_q_pow(upper(branch) * len(xs), ctx)
        / kfun_prod("f", ys, xs, ctx)
        * izergin(ys, xs, other(branch), ctx)
    )
    return lhs, rhs


def k_res_check(xs: Sequence[Any], ys: Sequence[Any], z: Any, branch: str, ctx: Any) -> Tuple[Fraction, Fraction]:
    """Residue at z' = z of K({xs, z}|{ys, z'}) against the reduced determinant it factors into."""
    zs = RatFun.var()
    full = izergin_symbolic(list(xs) + [z], list(ys) + [z], branch, ("y", len(ys)), ctx)
    lhs = full.residue(z)
    factor = (zs - z) * ctx.f(z, zs) * kfun_prod("f", [z], ys, ctx) * kfun_prod("f", xs, [z], ctx)
    rhs = RatFun.coerce(factor * izergin(xs, ys, branch, ctx)).limit(z)
    return lhs, rhs


def k_shift2_check(
    gamma_1: Sequence[Any], gamma_2: Sequence[Any], xi: Sequence[Any], branch: str, ctx: Any
) -> Tuple[Any, Any]:
    """K({gamma_1 q^-2, gamma_2}|xi) f(gamma_2, gamma_1) f(xi, gamma_1) against its block determinant."""
    gamma_1, gamma_2, xi = list(gamma_1), list(gamma_2), list(xi)
    m = len(xi)
    if len(gamma_1) + len(gamma_2) != m:
        raise InputError("block sizes must add up to the size of xi")
    lhs = (
        izergin(shifted(gamma_1, -2, ctx) + gamma_2, xi, branch, ctx)
        * kfun_prod("f", gamma_2, gamma_1, ctx)
        * kfun_prod("f", xi, gamma_1, ctx)
    )
    sign = Fraction((-1) ** m) * ctx.q ** upper(branch)
    rows = []
    for j, xj in enumerate(xi):
        rest = xi[:j] + xi[j + 1:]
        row = [sign * ctx.g(xj, gk) * kfun_prod("h", rest, [gk], ctx) for gk in gamma_1]
        row += [ctx.g(gk, xj) * kfun_prod("h", [gk], rest, ctx) for gk in gamma_2]
        rows.append(row)
    pp = ctx.pprod(gamma_1 + gamma_2) if branch == LEFT else ctx.pprod(xi)
    rhs = (
        pp
        * delta_prime(xi, ctx)
        * delta_n(gamma_1, ctx)
        * delta_n(gamma_2, ctx)
        * kfun_prod("g", gamma_2, gamma_1, ctx)
        * det_rows(rows)
    )
    return lhs, rhs


def permutation_check(
    xs: Sequence[Any], ys: Sequence[Any], variant: str, ctx: Any, shift: int = 1
) -> Tuple[Any, Any]:
    """K at the given order against K with xs reversed and ys rotated, both bypassing the cache."""
    ys = list(ys)
    k = shift % len(ys) if ys else 0
    lhs = izergin(xs, ys, variant, ctx, use_cache=False)
    rhs = izergin(list(reversed(list(xs))), ys[k:] + ys[:k], variant, ctx, use_cache=False)
    return lhs, rhs
