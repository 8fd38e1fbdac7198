from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from bethe import BetheConfig, TwistVector, onshell_config
from errors import InputError
from exact import scalar_parse
from kernel import QContext

DEFAULT_Q = "2"
DEFAULT_SEED = 7
DEFAULT_TRIALS = 5
DEFAULT_MAX_A = 3
DEFAULT_MAX_B = 3
DEFAULT_BOUND = 40
DEFAULT_REPORT = "reports/latest.jsonl"


@dataclass
class RunConfig:
    q: str = DEFAULT_Q
    kappa: List[str] = field(default_factory=lambda: ["1", "1", "1"])
    uC: List[str] = field(default_factory=list)
    vC: List[str] = field(default_factory=list)
    uB: List[str] = field(default_factory=list)
    vB: List[str] = field(default_factory=list)
    # r' at the row points: rprime1[i] belongs to uC[i], rprime3[i] to vB[i]
    rprime1: List[str] = field(default_factory=list)
    rprime3: List[str] = field(default_factory=list)
    z: Optional[str] = None
    r1_at_z: Optional[str] = None
    r3_at_z: Optional[str] = None
    c: str = "2"
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    max_a: int = DEFAULT_MAX_A
    max_b: int = DEFAULT_MAX_B
    threads: int = 1
    bound: int = DEFAULT_BOUND
    report: str = DEFAULT_REPORT


_LIST_FIELDS = {"kappa", "uC", "vC", "uB", "vB", "rprime1", "rprime3"}
_INT_FIELDS = {"seed", "trials", "max_a", "max_b", "threads", "bound"}
_OPTIONAL_FIELDS = {"z", "r1_at_z", "r3_at_z"}


def _coerce(name: str, value: Any) -> Any:
    if name in _LIST_FIELDS:
        if not isinstance(value, list):
            raise TypeError(f"{name} must be a list")
        return [str(v) for v in value]
    if name in _INT_FIELDS:
        if isinstance(value, bool):
            raise TypeError(f"{name} must be an integer")
        return int(value)
    if name in _OPTIONAL_FIELDS and value is None:
        return None
    return str(value)


def config_from_dict(data: Dict[str, Any]) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    kwargs = {k: _coerce(k, v) for k, v in data.items() if k in known}
    return RunConfig(**kwargs)


def load_config(path: str) -> RunConfig:
    p = Path(path)
    if not p.exists():
        return RunConfig()
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            return RunConfig()
        return config_from_dict(data)
    except Exception:
        return RunConfig()


def save_config(path: str, cfg: RunConfig) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(json.dumps(asdict(cfg), indent=2), encoding="utf-8")


def override(cfg: RunConfig, **flags: Any) -> RunConfig:
    """Flags that are not None win over the loaded values."""
    data = asdict(cfg)
    for k, v in flags.items():
        if v is not None:
            data[k] = v
    return config_from_dict(data)


def run_qcontext(cfg: RunConfig) -> QContext:
    return QContext(scalar_parse(cfg.q))


def run_twist(cfg: RunConfig) -> TwistVector:
    if len(cfg.kappa) != 3:
        raise InputError(f"kappa needs three components, got {len(cfg.kappa)}")
    return TwistVector(*(scalar_parse(k) for k in cfg.kappa))


def run_sets(cfg: RunConfig) -> Dict[str, Tuple[Any, ...]]:
    return {name: tuple(scalar_parse(v) for v in getattr(cfg, name)) for name in ("uC", "vC", "uB", "vB")}


def _paired(points: Tuple[Any, ...], values: List[str], name: str) -> Optional[Dict[Any, Any]]:
    if not values:
        return None
    if len(values) != len(points):
        raise InputError(f"{name} has {len(values)} entries for {len(points)} points")
    return {p: scalar_parse(v) for p, v in zip(points, values)}


def run_z(cfg: RunConfig) -> Optional[Any]:
    return scalar_parse(cfg.z) if cfg.z is not None else None


def run_bethe_config(cfg: RunConfig, ctx: Optional[Any] = None) -> BetheConfig:
    """On-shell configuration from the explicit arrays, with r1(z), r3(z) and r' entries when present."""
    ctx = ctx if ctx is not None else run_qcontext(cfg)
    sets = run_sets(cfg)
    z = run_z(cfg)
    extra_r1 = extra_r3 = None
    if z is not None:
        if cfg.r1_at_z is None or cfg.r3_at_z is None:
            raise InputError("a spectral point needs r1_at_z and r3_at_z")
        extra_r1 = {z: scalar_parse(cfg.r1_at_z)}
        extra_r3 = {z: scalar_parse(cfg.r3_at_z)}
    return onshell_config(
        sets["uC"], sets["vC"], sets["uB"], sets["vB"], run_twist(cfg), ctx,
        extra_r1, extra_r3,
        _paired(sets["uC"], cfg.rprime1, "rprime1"),
        _paired(sets["vB"], cfg.rprime3, "rprime3"),
    )
