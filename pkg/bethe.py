"""Generalized-model data: Bethe parameter sets, twist and r-value tables.

r1 and r3 are free data read only at the points where formulas need them.
``onshell_config`` fills the C side from the twisted Bethe equations and the
B side from the untwisted ones; any further points (the spectral point of a
form factor) come in as extra entries.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from errors import ContractError, InputError
from exact import exact_prod, to_scalar
from kernel import kfun_prod
from partitions import Partition2
from unipoly import RatFun

log = logging.getLogger(__name__)

SIDE_C = "C"
SIDE_B = "B"


def _value(v: Any) -> Any:
    return v if isinstance(v, RatFun) else to_scalar(v)


@dataclass(frozen=True)
class TwistVector:
    k1: Any = Fraction(1)
    k2: Any = Fraction(1)
    k3: Any = Fraction(1)

    def __post_init__(self) -> None:
        for name in ("k1", "k2", "k3"):
            v = _value(getattr(self, name))
            if v == 0:
                raise InputError(f"twist component {name} must be nonzero")
            object.__setattr__(self, name, v)

    @classmethod
    def untwisted(cls) -> "TwistVector":
        return cls()

    def as_tuple(self) -> Tuple[Any, Any, Any]:
        return (self.k1, self.k2, self.k3)

    def with_k2(self, k2: Any) -> "TwistVector":
        return TwistVector(self.k1, k2, self.k3)


@dataclass(frozen=True)
class RTable:
    """Values of r1 or r3 at finitely many points, with optional derivatives."""

    values: Dict[Any, Any] = field(default_factory=dict)
    derivatives: Dict[Any, Any] = field(default_factory=dict)

    def __contains__(self, point: Any) -> bool:
        return point in self.values

    def points(self) -> List[Any]:
        return list(self.values)

    def value(self, point: Any) -> Any:
        try:
            return self.values[point]
        except KeyError:
            raise InputError(f"no r-value supplied at {point}") from None

    def derivative(self, point: Any) -> Any:
        try:
            return self.derivatives[point]
        except KeyError:
            raise InputError(f"no r' value supplied at {point}") from None

    def with_values(self, updates: Mapping[Any, Any], label: str = "update") -> "RTable":
        merged = _merge([("table", self.values), (label, updates)])
        return RTable(merged, dict(self.derivatives))


def _merge(sources: Iterable[Tuple[str, Optional[Mapping[Any, Any]]]]) -> Dict[Any, Any]:
    out: Dict[Any, Any] = {}
    origin: Dict[Any, str] = {}
    for label, table in sources:
        for point, value in (table or {}).items():
            value = _value(value)
            if point in out and out[point] != value:
                raise ContractError(
                    f"r-value at {point} is {out[point]} from {origin[point]} but {value} from {label}"
                )
            out[point] = value
            origin.setdefault(point, label)
    return out


@dataclass(frozen=True)
class BetheConfig:
    uC: Tuple[Any, ...]
    vC: Tuple[Any, ...]
    uB: Tuple[Any, ...]
    vB: Tuple[Any, ...]
    kappa: TwistVector
    r1: RTable
    r3: RTable
    ctx: Any

    def __post_init__(self) -> None:
        for name in ("uC", "vC", "uB", "vB"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @property
    def a(self) -> int:
        return len(self.uB)

    @property
    def b(self) -> int:
        return len(self.vB)

    def sets(self, side: str) -> Tuple[Tuple[Any, ...], Tuple[Any, ...]]:
        if side == SIDE_C:
            return self.uC, self.vC
        if side == SIDE_B:
            return self.uB, self.vB
        raise InputError(f"side must be 'C' or 'B', got {side!r}")

    def side_twist(self, side: str) -> TwistVector:
        self.sets(side)
        return self.kappa if side == SIDE_C else TwistVector.untwisted()

    def with_sets(self, **changes: Any) -> "BetheConfig":
        fields = {
            "uC": self.uC, "vC": self.vC, "uB": self.uB, "vB": self.vB,
            "kappa": self.kappa, "r1": self.r1, "r3": self.r3, "ctx": self.ctx,
        }
        fields.update(changes)
        return BetheConfig(**fields)


def onshell_r_values(
    us: Sequence[Any], vs: Sequence[Any], kappa: TwistVector, ctx: Any
) -> Tuple[Dict[Any, Any], Dict[Any, Any]]:
    """r1 on us and r3 on vs solving the (twisted) Bethe equations."""
    us, vs = list(us), list(vs)
    r1: Dict[Any, Any] = {}
    r3: Dict[Any, Any] = {}
    for j, u in enumerate(us):
        rest = us[:j] + us[j + 1:]
        r1[u] = (
            kappa.k2 / kappa.k1
            * kfun_prod("f", [u], rest, ctx)
            / kfun_prod("f", rest, [u], ctx)
            * kfun_prod("f", vs, [u], ctx)
        )
    for j, v in enumerate(vs):
        rest = vs[:j] + vs[j + 1:]
        r3[v] = (
            kappa.k2 / kappa.k3
            * kfun_prod("f", rest, [v], ctx)
            / kfun_prod("f", [v], rest, ctx)
            * kfun_prod("f", [v], us, ctx)
        )
    return r1, r3


def onshell_config(
    uC: Sequence[Any],
    vC: Sequence[Any],
    uB: Sequence[Any],
    vB: Sequence[Any],
    kappa: TwistVector,
    ctx: Any,
    extra_r1: Optional[Mapping[Any, Any]] = None,
    extra_r3: Optional[Mapping[Any, Any]] = None,
    rprime1: Optional[Mapping[Any, Any]] = None,
    rprime3: Optional[Mapping[Any, Any]] = None,
) -> BetheConfig:
    c1, c3 = onshell_r_values(uC, vC, kappa, ctx)
    b1, b3 = onshell_r_values(uB, vB, TwistVector.untwisted(), ctx)
    r1 = _merge([("C equations", c1), ("B equations", b1), ("extra entries", extra_r1)])
    r3 = _merge([("C equations", c3), ("B equations", b3), ("extra entries", extra_r3)])
    d1 = {p: _value(v) for p, v in (rprime1 or {}).items()}
    d3 = {p: _value(v) for p, v in (rprime3 or {}).items()}
    log.debug("on-shell config a=%d b=%d kappa=%s", len(uB), len(vB), kappa.as_tuple())
    return BetheConfig(uC, vC, uB, vB, kappa, RTable(r1, d1), RTable(r3, d3), ctx)


def retwist(cfg: BetheConfig, kappa: TwistVector) -> BetheConfig:
    """Same sets, C-side values regenerated for a new twist; B-side and extra entries kept."""
    c1, c3 = onshell_r_values(cfg.uC, cfg.vC, kappa, cfg.ctx)
    r1 = dict(cfg.r1.values)
    r3 = dict(cfg.r3.values)
    for table, updates, shared in ((r1, c1, cfg.uB), (r3, c3, cfg.vB)):
        for point, value in updates.items():
            if point in shared and table.get(point) != value:
                raise ContractError(f"{point} is shared with the B side; cannot retwist it")
            table[point] = value
    return BetheConfig(
        cfg.uC, cfg.vC, cfg.uB, cfg.vB, kappa,
        RTable(r1, dict(cfg.r1.derivatives)), RTable(r3, dict(cfg.r3.derivatives)), cfg.ctx,
    )


def tau(w: Any, side: str, cfg: BetheConfig, twisted: bool = False) -> Any:
    """Transfer-matrix eigenvalue at w on the given side; untwisted unless asked."""
    us, vs = cfg.sets(side)
    kappa = cfg.kappa if twisted else TwistVector.untwisted()
    ctx = cfg.ctx
    return (
        kappa.k1 * cfg.r1.value(w) * kfun_prod("f", us, [w], ctx)
        + kappa.k2 * kfun_prod("f", [w], us, ctx) * kfun_prod("f", vs, [w], ctx)
        + kappa.k3 * cfg.r3.value(w) * kfun_prod("f", [w], vs, ctx)
    )


def be_partition_check(
    cfg: BetheConfig, side: str, u_part: Partition2, v_part: Partition2
) -> Tuple[Tuple[Any, Any], Tuple[Any, Any]]:
    """Product form of the Bethe equations for one split of each set.

    Returns ((r1(u_I), r3(v_I)), (predicted r1, predicted r3)); the side is on
    shell for this split when the two pairs are equal.
    """
    us, vs = cfg.sets(side)
    if u_part.origin != us or v_part.origin != vs:
        raise InputError(f"partitions must split the {side}-side sets in their stored order")
    kappa = cfg.side_twist(side)
    ctx = cfg.ctx
    lhs = (
        exact_prod(cfg.r1.value(u) for u in u_part.first),
        exact_prod(cfg.r3.value(v) for v in v_part.first),
    )
    rhs = (
        (kappa.k2 / kappa.k1) ** len(u_part.first)
        * kfun_prod("f", u_part.first, u_part.second, ctx)
        / kfun_prod("f", u_part.second, u_part.first, ctx)
        * kfun_prod("f", vs, u_part.first, ctx),
        (kappa.k2 / kappa.k3) ** len(v_part.first)
        * kfun_prod("f", v_part.second, v_part.first, ctx)
        / kfun_prod("f", v_part.first, v_part.second, ctx)
        * kfun_prod("f", v_part.first, us, ctx),
    )
    return lhs, rhs


def require_onshell(cfg: BetheConfig) -> None:
    for side in (SIDE_C, SIDE_B):
        us, vs = cfg.sets(side)
        no_v = Partition2((), vs, vs)
        no_u = Partition2((), us, us)
        for j, u in enumerate(us):
            lhs, rhs = be_partition_check(cfg, side, Partition2((u,), us[:j] + us[j + 1:], us), no_v)
            if lhs[0] != rhs[0]:
                raise ContractError(f"{side}-side Bethe equation fails at u = {u}: r1 = {lhs[0]}, expected {rhs[0]}")
        for j, v in enumerate(vs):
            lhs, rhs = be_partition_check(cfg, side, no_u, Partition2((v,), vs[:j] + vs[j + 1:], vs))
            if lhs[1] != rhs[1]:
                raise ContractError(f"{side}-side Bethe equation fails at v = {v}: r3 = {lhs[1]}, expected {rhs[1]}")


def is_onshell(cfg: BetheConfig) -> bool:
    try:
        require_onshell(cfg)
    except ContractError:
        return False
    return True
