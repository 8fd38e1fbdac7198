"""Scalar products of a twisted on-shell vector with an ordinary one.

Three routes are implemented independently:

* ``scalar_sum``: the partition-sum formula over all four parameter sets with
  highest coefficients; valid off shell.
* ``scalar_intermediate``: the partially resummed form built from two smaller
  determinants and the brute-force G sum; needs on-shell data.
* ``scalar_det``: the (a+b)x(a+b) determinant, for twist ratios
  kappa3/kappa1 = 1 ("S1") or q^2 ("Sq2").

Columns of the determinant are the points of uB followed by those of vC (the
spectral point z sits between them for the T12 form factor).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Any, List, Sequence, Tuple

from bethe import BetheConfig, TwistVector, onshell_config, require_onshell
from errors import ContractError, InputError
from exact import det_rows, to_scalar
from izergin import LEFT, RIGHT, izergin, minus_q_pow, other, upper
from kernel import (
    InvariantContext,
    QContext,
    c_h,
    delta_n,
    delta_prime,
    kfun_prod,
    scale,
    scaling_context,
    shifted,
)
from partitions import enum_partitions
from unipoly import RatFun

log = logging.getLogger(__name__)

S1 = "S1"
SQ2 = "Sq2"
F12 = "F12"
WHICH = (S1, SQ2, F12)

U_COL = "u"
V_COL = "v"
Z_COL = "z"


@dataclass(frozen=True)
class HighestCoeffArgs:
    t: Tuple[Any, ...]
    x: Tuple[Any, ...]
    s: Tuple[Any, ...]
    y: Tuple[Any, ...]
    branch: str

    def __post_init__(self) -> None:
        for name in ("t", "x", "s", "y"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if len(self.t) != len(self.x) or len(self.s) != len(self.y):
            raise InputError("highest coefficient needs |t| = |x| and |s| = |y|")
        other(self.branch)


@dataclass(frozen=True)
class Column:
    point: Any
    kind: str


@dataclass(frozen=True)
class NMatrixSpec:
    which: str
    cfg: BetheConfig
    z: Any = None

    def __post_init__(self) -> None:
        if self.which not in WHICH:
            raise InputError(f"unknown matrix {self.which!r}")
        if (self.which == F12) != (self.z is not None):
            raise InputError("the spectral point is required for F12 and only for F12")

    @property
    def columns(self) -> List[Column]:
        cols = [Column(u, U_COL) for u in self.cfg.uB]
        if self.which == F12:
            cols.append(Column(self.z, Z_COL))
        cols += [Column(v, V_COL) for v in self.cfg.vC]
        return cols

    @property
    def points(self) -> List[Any]:
        return [c.point for c in self.columns]


def _sp(values: Sequence[Any], ctx: Any) -> Any:
    return ctx.pprod(list(values))


def highest_coeff(args: HighestCoeffArgs, rep: int, ctx: Any) -> Any:
    br, oth = args.branch, other(args.branch)
    t, x, s, y = list(args.t), list(args.x), list(args.s), list(args.y)
    a, b = len(t), len(s)
    total: Any = Fraction(0)
    if rep == 1:
        for w1, w2 in enum_partitions(x + s, (b, a)):
            total = total + (
                izergin(s, shifted(w1, 2, ctx), oth, ctx)
                * izergin(w2, t, br, ctx)
                * izergin(y, w1, br, ctx)
                * kfun_prod("f", w1, w2, ctx)
            )
        return minus_q_pow(upper(br) * b, ctx) * total
    if rep == 2:
        tm2 = shifted(t, -2, ctx)
        for e1, e2 in enum_partitions(y + tm2, (a, b)):
            total = total + (
                izergin(tm2, shifted(e1, 2, ctx), oth, ctx)
                * izergin(shifted(x, -2, ctx), e1, br, ctx)
                * izergin(e2, s, br, ctx)
                * kfun_prod("f", e1, e2, ctx)
            )
        return minus_q_pow(upper(br) * a, ctx) * kfun_prod("f", y, x, ctx) * kfun_prod("f", s, t, ctx) * total
    raise InputError(f"highest coefficient representation must be 1 or 2, got {rep!r}")


def check_sizes(cfg: BetheConfig, extra_u: int = 0) -> None:
    if len(cfg.uC) != len(cfg.uB) + extra_u or len(cfg.vC) != len(cfg.vB):
        raise InputError(
            f"set sizes |uC|={len(cfg.uC)} |uB|={len(cfg.uB)} |vC|={len(cfg.vC)} |vB|={len(cfg.vB)} do not match"
        )


def scalar_sum(cfg: BetheConfig) -> Any:
    check_sizes(cfg)
    ctx = cfg.ctx
    a, b = cfg.a, cfg.b
    r1, r3 = cfg.r1.value, cfg.r3.value
    total: Any = Fraction(0)
    terms = 0
    for k in range(a + 1):
        for uC1, uC2 in enum_partitions(cfg.uC, (k, a - k)):
            for uB1, uB2 in enum_partitions(cfg.uB, (k, a - k)):
                for n in range(b + 1):
                    for vC1, vC2 in enum_partitions(cfg.vC, (n, b - n)):
                        for vB1, vB2 in enum_partitions(cfg.vB, (n, b - n)):
                            weight = (
                                kfun_prod("f", uB2, uB1, ctx)
                                * kfun_prod("f", uC1, uC2, ctx)
                                * kfun_prod("f", vB1, vB2, ctx)
                                * kfun_prod("f", vC2, vC1, ctx)
                                * kfun_prod("f", vC1, uC1, ctx)
                                * kfun_prod("f", vB2, uB2, ctx)
                            )
                            rs = Fraction(1)
                            for u in uC2 + uB1:
                                rs = rs * r1(u)
                            for v in vC2 + vB1:
                                rs = rs * r3(v)
                            z_left = highest_coeff(HighestCoeffArgs(uC2, uB2, vC1, vB1, LEFT), 1, ctx)
                            z_right = highest_coeff(HighestCoeffArgs(uB1, uC1, vB2, vC2, RIGHT), 1, ctx)
                            total = total + weight * rs * z_left * z_right
                            terms += 1
    log.debug("scalar_sum a=%d b=%d: %d partition terms", a, b, terms)
    return total / (kfun_prod("f", cfg.vC, cfg.uC, ctx) * kfun_prod("f", cfg.vB, cfg.uB, ctx))


def _nu_generic(j: int, x: Any, r1x: Any, uC: Sequence[Any], uB: Sequence[Any], vC: Sequence[Any], ratio: Any, ctx: Any) -> Any:
    """N^(u) at row uC[j] and column x; r1x None drops the r1 term."""
    uj = uC[j]
    rest = list(uC[:j]) + list(uC[j + 1:])
    out = ratio * ctx.g(x, uj) * kfun_prod("h", [x], rest, ctx)
    if r1x is not None:
        sign = Fraction((-1) ** (len(uC) - 1))
        out = out + sign * ctx.g(uj, x) * r1x / kfun_prod("f", vC, [x], ctx) * kfun_prod("h", rest, [x], ctx)
    return out / kfun_prod("h", [x], uB, ctx)


def _nv_generic(j: int, x: Any, r3x: Any, vB: Sequence[Any], vC: Sequence[Any], uB: Sequence[Any], ctx: Any) -> Any:
    """N^(v) at row vB[j] and column x; r3x None drops the r3 term."""
    vj = vB[j]
    rest = list(vB[:j]) + list(vB[j + 1:])
    out = ctx.g(vj, x) * kfun_prod("h", rest, [x], ctx)
    if r3x is not None:
        sign = Fraction((-1) ** (len(vB) - 1))
        out = out + sign * ctx.g(x, vj) * r3x / kfun_prod("f", [x], uB, ctx) * kfun_prod("h", [x], rest, ctx)
    return out / kfun_prod("h", vC, [x], ctx)


def _nu_diagonal(j: int, uC: Sequence[Any], uB: Sequence[Any], vC: Sequence[Any], ratio: Any, r: Any, rp: Any, ctx: Any) -> Any:
    u = uC[j]
    rest = list(uC[:j]) + list(uC[j + 1:])
    bracket = -ctx.c * rp / r
    for ul in rest:
        bracket = bracket + (ctx.q + ctx.qi) * ul / (ctx.h(u, ul) * ctx.h(ul, u))
    for vi in vC:
        bracket = bracket + vi * ctx.t(vi, u)
    return ratio / u * kfun_prod("h", [u], uC, ctx) / kfun_prod("h", [u], uB, ctx) * bracket


def _nv_diagonal(j: int, vB: Sequence[Any], vC: Sequence[Any], uB: Sequence[Any], r: Any, rp: Any, ctx: Any) -> Any:
    v = vB[j]
    rest = list(vB[:j]) + list(vB[j + 1:])
    bracket = ctx.c * rp / r
    for vi in rest:
        bracket = bracket + (ctx.q + ctx.qi) * vi / (ctx.h(v, vi) * ctx.h(vi, v))
    for ul in uB:
        bracket = bracket + ul * ctx.t(v, ul)
    return 1 / v * kfun_prod("h", vB, [v], ctx) / kfun_prod("h", vC, [v], ctx) * bracket


def _require_trig(ctx: Any) -> None:
    if not isinstance(ctx, QContext):
        raise InputError("diagonal entries need a trigonometric context")


def n_entry(kind: str, row: int, col: int, spec: NMatrixSpec) -> Any:
    cfg = spec.cfg
    ctx = cfg.ctx
    column = spec.columns[col]
    x = column.point
    if kind == "u":
        if column.kind == U_COL and x == cfg.uC[row]:
            _require_trig(ctx)
            return _nu_diagonal(
                row, cfg.uC, cfg.uB, cfg.vC, cfg.kappa.k2 / cfg.kappa.k1,
                cfg.r1.value(x), cfg.r1.derivative(x), ctx,
            )
        r1x = cfg.r1.value(x) if column.kind in (U_COL, Z_COL) else None
        return _nu_generic(row, x, r1x, cfg.uC, cfg.uB, cfg.vC, cfg.kappa.k2 / cfg.kappa.k1, ctx)
    if kind == "v":
        if column.kind == V_COL and x == cfg.vB[row]:
            _require_trig(ctx)
            return _nv_diagonal(row, cfg.vB, cfg.vC, cfg.uB, cfg.r3.value(x), cfg.r3.derivative(x), ctx)
        r3x = cfg.r3.value(x) if column.kind in (V_COL, Z_COL) else None
        return _nv_generic(row, x, r3x, cfg.vB, cfg.vC, cfg.uB, ctx)
    raise InputError(f"row kind must be 'u' or 'v', got {kind!r}")


def n_matrix(spec: NMatrixSpec) -> List[List[Any]]:
    cols = spec.columns
    rows = []
    for j in range(len(spec.cfg.uC)):
        row = [n_entry("u", j, k, spec) for k in range(len(cols))]
        if spec.which == SQ2:
            row = [entry * c.point for entry, c in zip(row, cols)]
        rows.append(row)
    for j in range(len(spec.cfg.vB)):
        rows.append([n_entry("v", j, k, spec) for k in range(len(cols))])
    return rows


def check_twist(cfg: BetheConfig, which: str) -> None:
    """Raise ContractError unless the twist is normalized for the chosen representation."""
    kappa, q = cfg.kappa, cfg.ctx.q
    if kappa.k1 != 1:
        raise ContractError(f"normalize the twist to kappa1 = 1 (got {kappa.k1})")
    expected = {S1: Fraction(1), SQ2: q * q, F12: q}[which]
    if kappa.k3 != expected:
        raise ContractError(f"{which} needs kappa3 = {expected}, got {kappa.k3}")


def det_prefactor(spec: NMatrixSpec) -> Any:
    """Everything in front of det N for the chosen representation."""
    cfg, ctx = spec.cfg, spec.cfg.ctx
    pref = _sp(cfg.vB, ctx) * c_h(cfg)
    if spec.which != SQ2:
        pref = pref * _sp(cfg.uB, ctx)
    if spec.which == F12:
        z = spec.z
        pref = pref * z * kfun_prod("h", cfg.vC, [z], ctx) * kfun_prod("h", [z], cfg.uB, ctx)
    return pref * delta_prime(cfg.uC, ctx) * delta_prime(cfg.vB, ctx) * delta_n(spec.points, ctx)


def scalar_det(cfg: BetheConfig, which: str = S1) -> Any:
    if which not in (S1, SQ2):
        raise InputError(f"scalar product determinant must be S1 or Sq2, got {which!r}")
    check_sizes(cfg)
    check_twist(cfg, which)
    require_onshell(cfg)
    spec = NMatrixSpec(which, cfg)
    return det_prefactor(spec) * det_rows(n_matrix(spec))


def n_entry_k2_derivative(kind: str, row: int, col: int, spec: NMatrixSpec) -> Any:
    """d/dkappa2 of a generic entry with the sets fixed and the C-side r3 linear in kappa2."""
    cfg = spec.cfg
    ctx = cfg.ctx
    column = spec.columns[col]
    x = column.point
    if kind == "u":
        return _nu_generic(row, x, None, cfg.uC, cfg.uB, cfg.vC, 1 / cfg.kappa.k1, ctx)
    if kind == "v":
        if column.kind != V_COL:
            return Fraction(0)
        with_r = _nv_generic(row, x, cfg.r3.value(x), cfg.vB, cfg.vC, cfg.uB, ctx)
        without_r = _nv_generic(row, x, None, cfg.vB, cfg.vC, cfg.uB, ctx)
        return (with_r - without_r) / cfg.kappa.k2
    raise InputError(f"row kind must be 'u' or 'v', got {kind!r}")


def norm(cfg: BetheConfig) -> Any:
    """scalar_det(S1) of a vector with itself; diagonal entries need r' at every point."""
    if sorted(cfg.uC) != sorted(cfg.uB) or sorted(cfg.vC) != sorted(cfg.vB):
        raise InputError("the norm needs identical C and B sets")
    if cfg.kappa.as_tuple() != (1, 1, 1):
        raise ContractError("the norm is defined for the untwisted vector")
    cfg = cfg.with_sets(uC=tuple(cfg.uB), vC=tuple(cfg.vB))
    return scalar_det(cfg, S1)


def g_kappa(uB1: Sequence[Any], vC1: Sequence[Any], kappa: TwistVector, ctx: Any) -> Any:
    uB1, vC1 = list(uB1), list(vC1)
    n = len(uB1)
    if len(vC1) != n:
        raise InputError("G needs sets of equal size")
    ratio = kappa.k1 / kappa.k3
    total: Any = Fraction(0)
    for m in range(n + 1):
        for ui, uiv in enum_partitions(uB1, (m, n - m)):
            for vi, viv in enum_partitions(vC1, (m, n - m)):
                total = total + (
                    (ratio * ctx.q * ctx.q) ** m
                    * kfun_prod("f", ui, uiv, ctx)
                    * kfun_prod("f", viv, vi, ctx)
                    * izergin(uiv, viv, LEFT, ctx)
                    * izergin(vi, shifted(ui, -2, ctx), RIGHT, ctx)
                )
    return total


def g_closed(uB1: Sequence[Any], vC1: Sequence[Any], which: str, ctx: Any) -> Any:
    """Closed form of G at kappa1 = kappa3 ("1") or kappa3/kappa1 = q^2 ("q2")."""
    uB1, vC1 = list(uB1), list(vC1)
    base = (
        Fraction((-1) ** len(uB1))
        * kfun_prod("t", vC1, uB1, ctx)
        * kfun_prod("h", vC1, vC1, ctx)
        * kfun_prod("h", uB1, uB1, ctx)
    )
    if which == "1":
        return base * _sp(uB1, ctx) / _sp(vC1, ctx)
    if which == "q2":
        return base
    raise InputError(f"closed form must be '1' or 'q2', got {which!r}")


def l_det(gamma_u: Sequence[Any], gamma_v: Sequence[Any], cfg: BetheConfig) -> Any:
    """L over columns gamma = (gamma_u from uB, gamma_v from vC) and rows uC."""
    ctx = cfg.ctx
    gamma = list(gamma_u) + list(gamma_v)
    if len(gamma) != len(cfg.uC):
        raise InputError("L needs as many columns as uC has points")
    ratio = cfg.kappa.k2 / cfg.kappa.k1
    rows = []
    for j in range(len(cfg.uC)):
        row = []
        for k, x in enumerate(gamma):
            r1x = cfg.r1.value(x) if k < len(gamma_u) else None
            row.append(_nu_generic(j, x, r1x, cfg.uC, cfg.uB, cfg.vC, ratio, ctx) * kfun_prod("h", [x], cfg.uB, ctx))
        rows.append(row)
    return delta_prime(cfg.uC, ctx) * delta_n(gamma, ctx) * det_rows(rows)


def m_det(gamma_u: Sequence[Any], gamma_v: Sequence[Any], cfg: BetheConfig) -> Any:
    """M over columns gamma = (gamma_u from uB, gamma_v from vC) and rows vB."""
    ctx = cfg.ctx
    gamma = list(gamma_u) + list(gamma_v)
    if len(gamma) != len(cfg.vB):
        raise InputError("M needs as many columns as vB has points")
    rows = []
    for j in range(len(cfg.vB)):
        row = []
        for k, x in enumerate(gamma):
            r3x = cfg.r3.value(x) if k >= len(gamma_u) else None
            row.append(_nv_generic(j, x, r3x, cfg.vB, cfg.vC, cfg.uB, ctx) * kfun_prod("h", cfg.vC, [x], ctx))
        rows.append(row)
    return delta_prime(cfg.vB, ctx) * delta_n(gamma, ctx) * det_rows(rows)


def l_hat(gamma_u: Sequence[Any], gamma_v: Sequence[Any], cfg: BetheConfig) -> Any:
    gamma = list(gamma_u) + list(gamma_v)
    return l_det(gamma_u, gamma_v, cfg) / kfun_prod("h", gamma, cfg.uB, cfg.ctx)


def m_hat(gamma_u: Sequence[Any], gamma_v: Sequence[Any], cfg: BetheConfig) -> Any:
    gamma = list(gamma_u) + list(gamma_v)
    return m_det(gamma_u, gamma_v, cfg) / kfun_prod("h", cfg.vC, gamma, cfg.ctx)


def scalar_intermediate(cfg: BetheConfig) -> Any:
    check_sizes(cfg)
    require_onshell(cfg)
    ctx = cfg.ctx
    a, b = cfg.a, cfg.b
    total: Any = Fraction(0)
    for m in range(min(a, b) + 1):
        for uB1, uB2 in enum_partitions(cfg.uB, (m, a - m)):
            for vC1, vC2 in enum_partitions(cfg.vC, (m, b - m)):
                total = total + (
                    kfun_prod("f", vC2, uB2, ctx)
                    * kfun_prod("f", uB1, uB2, ctx)
                    * kfun_prod("f", vC2, vC1, ctx)
                    * _sp(uB2, ctx)
                    * _sp(vC1, ctx)
                    * g_kappa(uB1, vC1, cfg.kappa, ctx)
                    * l_det(uB2, vC1, cfg)
                    * m_det(uB1, vC2, cfg)
                )
    return _sp(cfg.vB, ctx) * total


def entry_limit_check(cfg: BetheConfig, pair: str, row: int, col: int, rprime: Any) -> Tuple[Fraction, Fraction]:
    """Limit of the generic entry as one column point runs into its row partner, against the diagonal formula.

    For pair "u" the row uC[row] = p stays put while uB[col] = p + eps and
    r1 = r1(p) + eps * rprime, with r1(p) read from the C side. For pair "v"
    the row vB[row] = p stays put while vC[col] = p + eps and r3 = r3(p) +
    eps * rprime, with r3(p) read from the B side. The other parameters are
    those of cfg.
    """
    ctx = cfg.ctx
    _require_trig(ctx)
    eps = RatFun.var()
    rprime = to_scalar(rprime)
    if pair == "u":
        p = cfg.uC[row]
        r = cfg.r1.value(p)
        x = p + eps
        uB = list(cfg.uB)
        uB[col] = x
        ratio = cfg.kappa.k2 / cfg.kappa.k1
        generic = _nu_generic(row, x, r + eps * rprime, cfg.uC, uB, cfg.vC, ratio, ctx)
        uB[col] = p
        diagonal = _nu_diagonal(row, cfg.uC, uB, cfg.vC, ratio, r, rprime, ctx)
    elif pair == "v":
        p = cfg.vB[row]
        r = cfg.r3.value(p)
        x = p + eps
        vC = list(cfg.vC)
        vC[col] = x
        generic = _nv_generic(row, x, r + eps * rprime, cfg.vB, vC, cfg.uB, ctx)
        vC[col] = p
        diagonal = _nv_diagonal(row, cfg.vB, vC, cfg.uB, r, rprime, ctx)
    else:
        raise InputError(f"pair must be 'u' or 'v', got {pair!r}")
    return RatFun.coerce(generic).limit(0), diagonal


@dataclass(frozen=True)
class ScalingLimit:
    s1: Fraction
    sq2: Fraction
    invariant: Fraction


def _slope_config(
    slopes: Tuple[Sequence[Any], Sequence[Any], Sequence[Any], Sequence[Any]], kappa: TwistVector, ctx: Any
) -> BetheConfig:
    uC, vC, uB, vB = ([scale(s) for s in group] for group in slopes)
    return onshell_config(uC, vC, uB, vB, kappa, ctx)


def scaling_limit_scalar(
    slopes: Tuple[Sequence[Any], Sequence[Any], Sequence[Any], Sequence[Any]], c: Any, kappa2: Any = 1
) -> ScalingLimit:
    """eps -> 0 limits of S1 and Sq2 along u = 1 + eps u', q = 1 + eps c/2, and the invariant determinant."""
    ctx = scaling_context(c)
    s1 = scalar_det(_slope_config(slopes, TwistVector(1, kappa2, 1), ctx), S1)
    sq2 = scalar_det(_slope_config(slopes, TwistVector(1, kappa2, ctx.q * ctx.q), ctx), SQ2)
    inv_ctx = InvariantContext(c)
    uC, vC, uB, vB = slopes
    inv = scalar_det(onshell_config(uC, vC, uB, vB, TwistVector(1, kappa2, 1), inv_ctx), S1)
    return ScalingLimit(RatFun.coerce(s1).limit(0), RatFun.coerce(sq2).limit(0), inv)


def scaling_entry_checks(
    slopes: Tuple[Sequence[Any], Sequence[Any], Sequence[Any], Sequence[Any]], c: Any, kappa2: Any = 1
) -> List[Tuple[str, Fraction, Fraction]]:
    """(label, eps -> 0 limit of the trigonometric entry, invariant entry) for every entry of N."""
    trig = NMatrixSpec(S1, _slope_config(slopes, TwistVector(1, kappa2, 1), scaling_context(c)))
    uC, vC, uB, vB = slopes
    inv = NMatrixSpec(S1, onshell_config(uC, vC, uB, vB, TwistVector(1, kappa2, 1), InvariantContext(c)))
    out = []
    for i, (trow, irow) in enumerate(zip(n_matrix(trig), n_matrix(inv))):
        for k, (te, ie) in enumerate(zip(trow, irow)):
            out.append((f"N[{i}][{k}]", RatFun.coerce(te).limit(0), ie))
    return out
