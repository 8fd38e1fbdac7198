"""Left- and right-hand sides of the partition-sum identities.

Every evaluator returns a ``(lhs, rhs)`` pair; the caller decides what to do
with a mismatch. Sums run over partitions in the order produced by
``partitions.enum_partitions``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Any, Callable, Dict, Iterator, List, Mapping, Sequence, Tuple

from errors import InputError
from exact import det_rows, exact_prod
from izergin import LEFT, RIGHT, izergin, minus_q_pow, other, upper
from kernel import delta_n, delta_prime, kfun_prod, shifted
from partitions import enum_partitions
from unipoly import RatFun

log = logging.getLogger(__name__)

PhiTable = Mapping[Any, Any]

COROLLARIES = ("1a", "1b", "2a", "2b", "3", "triv")
RESIDUE_CHECKS = ("l-at-beta", "l-at-betaq-2", "r-at-beta", "r-at-betaq-2")


def _phi_product(table: PhiTable, points: Sequence[Any]) -> Any:
    return exact_prod([table[p] for p in points])


def lemma1(gamma: Sequence[Any], alpha: Sequence[Any], beta: Sequence[Any], branch: str, ctx: Any) -> Tuple[Any, Any]:
    gamma, alpha, beta = list(gamma), list(alpha), list(beta)
    m1, m2 = len(alpha), len(beta)
    if len(gamma) != m1 + m2:
        raise InputError(f"|gamma| = {len(gamma)} must equal |alpha| + |beta| = {m1 + m2}")
    flip = other(branch)
    lhs: Any = Fraction(0)
    for g1, g2 in enum_partitions(gamma, (m1, m2)):
        lhs = lhs + izergin(g1, alpha, branch, ctx) * izergin(beta, g2, flip, ctx) * kfun_prod("f", g2, g1, ctx)
    rhs = (
        minus_q_pow(upper(branch) * m1, ctx)
        * kfun_prod("f", gamma, alpha, ctx)
        * izergin(shifted(alpha, -2, ctx) + beta, gamma, flip, ctx)
    )
    return lhs, rhs


def lemma2(
    gamma: Sequence[Any], xi: Sequence[Any], phi1: PhiTable, phi2: PhiTable, branch: str, ctx: Any
) -> Tuple[Any, Any]:
    gamma, xi = list(gamma), list(xi)
    m = len(gamma)
    if len(xi) != m:
        raise InputError(f"|gamma| = {m} and |xi| = {len(xi)} differ")
    for name, table in (("phi1", phi1), ("phi2", phi2)):
        if set(table) != set(gamma):
            raise InputError(f"{name} must be defined on exactly the points of gamma")
    lhs: Any = Fraction(0)
    for m1 in range(m + 1):
        for g1, g2 in enum_partitions(gamma, (m1, m - m1)):
            lhs = lhs + (
                izergin(shifted(g1, -2, ctx) + list(g2), xi, branch, ctx)
                * kfun_prod("f", xi, g1, ctx)
                * kfun_prod("f", g2, g1, ctx)
                * _phi_product(phi1, g1)
                * _phi_product(phi2, g2)
            )
    coeff = ctx.q ** upper(branch) * Fraction((-1) ** m)
    rows = []
    for j, xj in enumerate(xi):
        rest = xi[:j] + xi[j + 1:]
        rows.append([
            phi2[gk] * ctx.g(gk, xj) * kfun_prod("h", [gk], rest, ctx)
            + coeff * phi1[gk] * ctx.g(xj, gk) * kfun_prod("h", rest, [gk], ctx)
            for gk in gamma
        ])
    pp = ctx.pprod(gamma) if branch == LEFT else ctx.pprod(xi)
    rhs = pp * delta_prime(xi, ctx) * delta_n(gamma, ctx) * det_rows(rows)
    return lhs, rhs


def joint_partitions(
    alpha: Sequence[Any], beta: Sequence[Any]
) -> Iterator[Tuple[Tuple[Any, ...], Tuple[Any, ...], Tuple[Any, ...], Tuple[Any, ...]]]:
    """(alpha_1, alpha_2, beta_1, beta_2) with |alpha_1| = |beta_1|."""
    n = len(alpha)
    if len(beta) != n:
        raise InputError(f"|alpha| = {n} and |beta| = {len(beta)} differ")
    for k in range(n + 1):
        for a1, a2 in enum_partitions(alpha, (k, n - k)):
            for b1, b2 in enum_partitions(beta, (k, n - k)):
                yield a1, a2, b1, b2


def g_n(alpha: Sequence[Any], beta: Sequence[Any], ctx: Any) -> Any:
    """(-1)^n t(alpha, beta) h(alpha, alpha) h(beta, beta), diagonal terms included."""
    return (
        Fraction((-1) ** len(alpha))
        * kfun_prod("t", alpha, beta, ctx)
        * kfun_prod("h", alpha, alpha, ctx)
        * kfun_prod("h", beta, beta, ctx)
    )


def lemma3(alpha: Sequence[Any], beta: Sequence[Any], z: Any, ctx: Any) -> Tuple[Any, Any]:
    alpha, beta = list(alpha), list(beta)
    lhs: Any = Fraction(0)
    for a1, a2, b1, b2 in joint_partitions(alpha, beta):
        lhs = lhs + (
            ctx.q ** len(a1)
            * kfun_prod("f", b1, [z], ctx)
            * kfun_prod("f", b2, b1, ctx)
            * kfun_prod("f", a1, a2, ctx)
            * izergin(b1, a1, RIGHT, ctx)
            * izergin(a2, shifted(b2, -2, ctx), LEFT, ctx)
        )
    return lhs, lambda_right(alpha, beta, z, ctx)


def _triv_terms(alpha: List[Any], beta: List[Any], ratio: Any, ctx: Any) -> Tuple[Tuple[Any, ...], Tuple[Any, ...]]:
    """Per-partition K-products: K^(r)(b1|a1) K^(l)(a2|b2 q^-2) against q^(2 n2) p(alpha)/p(beta) K^(l)(b1|a1) K^(r)(a2|b2 q^-2)."""
    lhs, rhs = [], []
    for a1, a2, b1, b2 in joint_partitions(alpha, beta):
        b2s = shifted(b2, -2, ctx)
        lhs.append(izergin(b1, a1, RIGHT, ctx) * izergin(a2, b2s, LEFT, ctx))
        rhs.append(ctx.q ** (2 * len(a2)) * ratio * izergin(b1, a1, LEFT, ctx) * izergin(a2, b2s, RIGHT, ctx))
    return tuple(lhs), tuple(rhs)


def corollaries(alpha: Sequence[Any], beta: Sequence[Any], which: str, ctx: Any) -> Tuple[Any, Any]:
    if which not in COROLLARIES:
        raise InputError(f"unknown corollary {which!r}; expected one of {', '.join(COROLLARIES)}")
    alpha, beta = list(alpha), list(beta)
    q = ctx.q
    n = len(alpha)
    ratio = ctx.pprod(alpha) / ctx.pprod(beta)
    if which == "triv":
        return _triv_terms(alpha, beta, ratio, ctx)
    lhs: Any = Fraction(0)
    rhs: Any = Fraction(0)
    for a1, a2, b1, b2 in joint_partitions(alpha, beta):
        n1, n2 = len(a1), len(a2)
        ff = kfun_prod("f", b2, b1, ctx) * kfun_prod("f", a1, a2, ctx)
        if which in ("1b", "2b"):
            kk = izergin(b1, a1, LEFT, ctx) * izergin(a2, shifted(b2, -2, ctx), RIGHT, ctx)
        else:
            kk = izergin(b1, a1, RIGHT, ctx) * izergin(a2, shifted(b2, -2, ctx), LEFT, ctx)
        if which == "1b":
            weight = q ** (2 * n2)
        elif which == "2a":
            weight = q ** (2 * n1)
        elif which == "3":
            weight = q ** n1 * ctx.qnumber(n1)
        else:
            weight = Fraction(1)
        lhs = lhs + weight * ff * kk
    g = g_n(alpha, beta, ctx)
    if which in ("1a", "2b"):
        rhs = g
    elif which == "1b":
        rhs = g / ratio
    elif which == "2a":
        rhs = q ** (2 * n) * ratio * g
    else:
        rhs = (q ** (2 * n) * ratio - 1) / ctx.c * g
    return lhs, rhs


@dataclass(frozen=True)
class RowBlock:
    """A block of `rows` matrix rows; entry(i, x) is the value in row i at column point x."""

    rows: int
    entry: Callable[[int, Any], Any]

    def minor(self, points: Sequence[Any]) -> Any:
        return det_rows([[self.entry(i, x) for x in points] for i in range(self.rows)])


def genmat(block1: RowBlock, block2: RowBlock, xs: Sequence[Any], ctx: Any) -> Tuple[Any, Any]:
    xs = list(xs)
    a, b = block1.rows, block2.rows
    if a + b != len(xs):
        raise InputError(f"{a} + {b} rows cannot fill a {len(xs)}-column matrix")
    rows = [[block1.entry(i, x) for x in xs] for i in range(a)]
    rows += [[block2.entry(j, x) for x in xs] for j in range(b)]
    lhs = delta_n(xs, ctx) * det_rows(rows)
    rhs: Any = Fraction(0)
    for x1, x2 in enum_partitions(xs, (a, b)):
        rhs = rhs + (
            kfun_prod("g", x2, x1, ctx)
            * delta_n(x1, ctx) * block1.minor(x1)
            * delta_n(x2, ctx) * block2.minor(x2)
        )
    return lhs, rhs


def lambda_left(alpha: Sequence[Any], beta: Sequence[Any], z: Any, ctx: Any) -> Any:
    """Left side of the z-dependent identity after summing over the partitions of alpha."""
    alpha, beta = list(alpha), list(beta)
    n = len(beta)
    if len(alpha) != n:
        raise InputError(f"|alpha| = {len(alpha)} and |beta| = {n} differ")
    total: Any = Fraction(0)
    for n1 in range(n + 1):
        for b1, b2 in enum_partitions(beta, (n1, n - n1)):
            n2 = n - n1
            total = total + (
                Fraction((-1) ** n2)
                * ctx.q ** (n1 - n2)
                * kfun_prod("f", b1, [z], ctx)
                * kfun_prod("f", b2, b1, ctx)
                * kfun_prod("f", alpha, shifted(b2, -2, ctx), ctx)
                * izergin(shifted(b2, -4, ctx) + list(b1), alpha, RIGHT, ctx)
            )
    return total


def lambda_right(alpha: Sequence[Any], beta: Sequence[Any], z: Any, ctx: Any) -> Any:
    """q^n G_n(alpha|beta) h(alpha, z) g(beta, z)"""
    return (
        ctx.q ** len(alpha)
        * g_n(alpha, beta, ctx)
        * kfun_prod("h", alpha, [z], ctx)
        * kfun_prod("g", beta, [z], ctx)
    )


def lambda_pair(alpha: Sequence[Any], beta: Sequence[Any], z: Any, ctx: Any) -> Tuple[Any, Any]:
    return lambda_left(alpha, beta, z, ctx), lambda_right(alpha, beta, z, ctx)


def lambda_r_recursion(alpha: Sequence[Any], beta: Sequence[Any], z: Any, ctx: Any) -> Tuple[Any, Any]:
    """Right side built by peeling off (alpha_n, beta_n) one at a time, against the closed form."""
    alpha, beta = list(alpha), list(beta)
    value: Any = Fraction(1)
    for k in range(1, len(alpha) + 1):
        an, bn = alpha[k - 1], beta[k - 1]
        ar, br = alpha[:k - 1], beta[:k - 1]
        value = value * (
            -ctx.q * an * bn
            * ctx.t(an, bn) * ctx.h(an, z) * ctx.g(bn, z)
            * kfun_prod("t", [an], br, ctx) * kfun_prod("t", ar, [bn], ctx)
            * kfun_prod("h", [an], ar, ctx) * kfun_prod("h", ar, [an], ctx)
            * kfun_prod("h", [bn], br, ctx) * kfun_prod("h", br, [bn], ctx)
        )
    return value, lambda_right(alpha, beta, z, ctx)


def lambda_residue_checks(
    alpha: Sequence[Any], beta: Sequence[Any], z: Any, which: str, ctx: Any
) -> Tuple[Fraction, Fraction]:
    """Residue in alpha_n of one side of the identity against the coefficient times the n-1 case."""
    if which not in RESIDUE_CHECKS:
        raise InputError(f"unknown residue check {which!r}; expected one of {', '.join(RESIDUE_CHECKS)}")
    alpha, beta = list(alpha), list(beta)
    if not alpha or len(alpha) != len(beta):
        raise InputError("residue checks need |alpha| = |beta| >= 1")
    side, _, point = which.partition("-at-")
    family = lambda_left if side == "l" else lambda_right
    x = RatFun.var()
    a_rest, b_rest = alpha[:-1], beta[:-1]
    bn = beta[-1]
    full = RatFun.coerce(family(a_rest + [x], beta, z, ctx))
    reduced = family(a_rest, b_rest, z, ctx)
    if point == "beta":
        pole = bn
        coeff = (
            ctx.q * ctx.f(bn, x) * ctx.f(bn, z)
            * kfun_prod("f", b_rest, [bn], ctx) * kfun_prod("f", [x], a_rest, ctx)
        )
    else:
        pole = ctx.shift(bn, -2)
        coeff = ctx.f(x, pole) * kfun_prod("f", a_rest, [x], ctx) * kfun_prod("f", [bn], b_rest, ctx)
    residue = full.residue(pole)
    predicted = RatFun.coerce(coeff).residue(pole) * reduced
    log.debug("residue check %s at n=%d: %s vs %s", which, len(alpha), residue, predicted)
    return residue, predicted
