"""Form factors of diagonal and off-diagonal monodromy entries.

Twisted form factors follow from the scalar product through the difference of
transfer-matrix eigenvalues. The ordinary T22 form factor is the kappa2
derivative of that product at kappa2 = 1 with the Bethe sets held fixed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Any, List

from bethe import SIDE_B, SIDE_C, BetheConfig, TwistVector, require_onshell, retwist, tau
from errors import ContractError, InputError
from exact import det_rows
from kernel import kfun_prod
from scalarprod import (
    F12,
    S1,
    SQ2,
    NMatrixSpec,
    check_sizes,
    check_twist,
    det_prefactor,
    n_entry_k2_derivative,
    n_matrix,
    scalar_det,
    scalar_sum,
)
from unipoly import poly_derivative, poly_eval, poly_interpolate

log = logging.getLogger(__name__)

FF22 = "FF22"
FF22_TWISTED = "FF22_twisted"
FF33_Q2 = "FF33_q2"
FF12_Q = "FF12_q"
KINDS = (FF22, FF22_TWISTED, FF33_Q2, FF12_Q)

ROUTE_DET = "det"
ROUTE_SUM = "sum"


@dataclass(frozen=True)
class FormFactorRequest:
    which: str
    z: Any
    cfg: BetheConfig

    def __post_init__(self) -> None:
        if self.which not in KINDS:
            raise InputError(f"unknown form factor {self.which!r}")


def _tau_difference(z: Any, cfg: BetheConfig) -> Any:
    return tau(z, SIDE_C, cfg, twisted=True) - tau(z, SIDE_B, cfg)


def twisted_ff(req: FormFactorRequest, route: str = ROUTE_DET) -> Any:
    cfg = req.cfg
    kappa = cfg.kappa
    if req.which == FF22_TWISTED:
        check_twist(cfg, S1)
        shift, which = kappa.k2 - 1, S1
    elif req.which == FF33_Q2:
        check_twist(cfg, SQ2)
        if kappa.k2 != 1:
            raise ContractError(f"{FF33_Q2} needs kappa2 = 1, got {kappa.k2}")
        shift, which = kappa.k3 - 1, SQ2
    else:
        raise InputError(f"twisted_ff computes {FF22_TWISTED} or {FF33_Q2}, not {req.which}")
    if shift == 0:
        raise InputError(f"{req.which} divides by a twist component equal to 1")
    if route == ROUTE_DET:
        s = scalar_det(cfg, which)
    elif route == ROUTE_SUM:
        require_onshell(cfg)
        s = scalar_sum(cfg)
    else:
        raise InputError(f"route must be {ROUTE_DET!r} or {ROUTE_SUM!r}, got {route!r}")
    return _tau_difference(req.z, cfg) / shift * s


def _require_ff22_twist(cfg: BetheConfig) -> None:
    if cfg.kappa.k1 != 1 or cfg.kappa.k3 != 1:
        raise ContractError("the T22 form factor needs kappa1 = kappa3 = 1")


def ff22_samples(cfg: BetheConfig) -> List[Any]:
    """kappa2 sample points for the interpolation; one more than the degree in kappa2."""
    return [Fraction(k) for k in range(1, cfg.a + cfg.b + 3)]


def ff22(z: Any, cfg: BetheConfig) -> Fraction:
    _require_ff22_twist(cfg)
    points = []
    for k2 in ff22_samples(cfg):
        sample = retwist(cfg, cfg.kappa.with_k2(k2))
        points.append((k2, _tau_difference(z, sample) * scalar_det(sample, S1)))
    poly = poly_interpolate(points)
    log.debug("ff22 interpolant of degree %d through %d samples", poly.degree(), len(points))
    return poly_eval(poly_derivative(poly), 1)


def ff22_analytic(z: Any, cfg: BetheConfig) -> Any:
    """Product rule on (tau_kappa - tau) * S1 with one differentiated row of N at a time."""
    _require_ff22_twist(cfg)
    if set(cfg.uC) & set(cfg.uB) or set(cfg.vC) & set(cfg.vB):
        raise InputError("the analytic T22 form factor needs C and B sets without common points")
    cfg = retwist(cfg, TwistVector.untwisted())
    ctx = cfg.ctx
    spec = NMatrixSpec(S1, cfg)
    matrix = n_matrix(spec)
    a = len(cfg.uC)
    dtau = kfun_prod("f", [z], cfg.uC, ctx) * kfun_prod("f", cfg.vC, [z], ctx)
    ddet: Any = Fraction(0)
    for i in range(len(matrix)):
        kind, row = ("u", i) if i < a else ("v", i - a)
        replaced = list(matrix)
        replaced[i] = [n_entry_k2_derivative(kind, row, k, spec) for k in range(len(matrix[i]))]
        ddet = ddet + det_rows(replaced)
    return dtau * scalar_det(cfg, S1) + _tau_difference(z, cfg) * det_prefactor(spec) * ddet


def ff12_twisted(z: Any, cfg: BetheConfig) -> Any:
    check_sizes(cfg, extra_u=1)
    check_twist(cfg, F12)
    require_onshell(cfg)
    spec = NMatrixSpec(F12, cfg, z)
    return det_prefactor(spec) * det_rows(n_matrix(spec))


def form_factor(req: FormFactorRequest, route: str = ROUTE_DET) -> Any:
    if req.which == FF22:
        return ff22(req.z, req.cfg)
    if req.which == FF12_Q:
        return ff12_twisted(req.z, req.cfg)
    return twisted_ff(req, route)
