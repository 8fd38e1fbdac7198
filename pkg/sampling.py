from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import logging
import random
from typing import Any, Dict, List, Optional, Sequence

from bethe import BetheConfig, TwistVector, onshell_config
from errors import SamplingError

log = logging.getLogger(__name__)

DEFAULT_BOUND = 40
DEFAULT_MAX_TRIES = 2000
SHIFT_POWERS = (-2, -1, 0, 1, 2)


def clashes(x: Fraction, y: Fraction, q: Fraction) -> bool:
    """True when y = x * q^(2k) for some k in -2..2."""
    return any(y == x * q ** (2 * k) for k in SHIFT_POWERS)


def guard_ok(x: Fraction, pool: Sequence[Fraction], q: Fraction) -> bool:
    if x == 0:
        return False
    return not any(clashes(x, p, q) for p in pool)


@dataclass
class Sampler:
    """Seeded rationals for one case; points drawn by fresh() avoid each other and their q^(2k) shifts."""

    seed: int
    suite: str
    index: int
    q: Fraction
    bound: int = DEFAULT_BOUND
    max_tries: int = DEFAULT_MAX_TRIES
    pool: List[Fraction] = field(default_factory=list)
    slope_pool: List[Fraction] = field(default_factory=list)
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.rng = random.Random(f"{self.seed}:{self.suite}:{self.index}")

    def rational(self) -> Fraction:
        num = 0
        while num == 0:
            num = self.rng.randint(-self.bound, self.bound)
        return Fraction(num, self.rng.randint(1, self.bound))

    def value(self) -> Fraction:
        """Nonzero rational with no guard; for r-values and function tables."""
        return self.rational()

    def fresh(self) -> Fraction:
        for _ in range(self.max_tries):
            x = self.rational()
            if guard_ok(x, self.pool, self.q):
                self.pool.append(x)
                return x
        raise SamplingError(
            f"no admissible point after {self.max_tries} tries (pool of {len(self.pool)}, bound {self.bound})"
        )

    def points(self, n: int) -> List[Fraction]:
        return [self.fresh() for _ in range(n)]

    def fresh_slope(self, c: Fraction) -> Fraction:
        """Slope u' of u = 1 + eps u'; slopes avoid each other and their shifts by c and 2c."""
        banned = {k * c for k in SHIFT_POWERS}
        for _ in range(self.max_tries):
            x = self.rational()
            if all(x - p not in banned for p in self.slope_pool):
                self.slope_pool.append(x)
                return x
        raise SamplingError(f"no admissible slope after {self.max_tries} tries")

    def slopes(self, n: int, c: Fraction) -> List[Fraction]:
        return [self.fresh_slope(c) for _ in range(n)]

    def table(self, points: Sequence[Any]) -> Dict[Any, Fraction]:
        return {p: self.value() for p in points}


def random_config(
    sampler: Sampler,
    a: int,
    b: int,
    kappa: TwistVector,
    ctx: Any,
    extra_u: int = 0,
    z: Optional[Fraction] = None,
    rprime: bool = False,
) -> BetheConfig:
    """On-shell configuration with guarded points; z, when given, gets random r1 and r3 entries."""
    uC = sampler.points(a + extra_u)
    vC = sampler.points(b)
    uB = sampler.points(a)
    vB = sampler.points(b)
    extra_r1: Optional[Dict[Any, Fraction]] = None
    extra_r3: Optional[Dict[Any, Fraction]] = None
    if z is not None:
        extra_r1 = {z: sampler.value()}
        extra_r3 = {z: sampler.value()}
    rprime1 = sampler.table(uC) if rprime else None
    rprime3 = sampler.table(vB) if rprime else None
    log.debug("sampled config a=%d b=%d (%d points in pool)", a, b, len(sampler.pool))
    return onshell_config(uC, vC, uB, vB, kappa, ctx, extra_r1, extra_r3, rprime1, rprime3)
