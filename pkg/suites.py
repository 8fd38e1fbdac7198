"""Verification suites driven by ``verifier.py verify``.

A suite builder turns a RunConfig into a list of cases. All random data is
drawn while building, one seeded Sampler per case, so results do not depend
on how many worker threads evaluate the cases afterwards.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
import logging
import time
from typing import Any, Callable, Dict, List, Tuple

from bethe import SIDE_B, SIDE_C, TwistVector, be_partition_check
from errors import EngineError
from exact import scalar_parse
from formfactor import (
    FF22_TWISTED,
    FF33_Q2,
    FormFactorRequest,
    ff12_twisted,
    ff22,
    ff22_analytic,
    twisted_ff,
)
from identities import (
    COROLLARIES,
    RESIDUE_CHECKS,
    RowBlock,
    corollaries,
    genmat,
    lambda_pair,
    lambda_r_recursion,
    lambda_residue_checks,
    lemma1,
    lemma2,
    lemma3,
)
from izergin import LEFT, RIGHT, VARIANTS, k_invers_check, k_red_check, k_res_check, k_shift2_check, permutation_check
from kernel import KINDS, QContext, kernel_relations, kfun_invariant, scaling_substitute
from partitions import enum_all_pairs, parity_scalar, partition_sign
from report import ERROR, VerificationReport, outcome
from run_config import RunConfig, run_qcontext, run_twist
from sampling import Sampler, random_config
from scalarprod import (
    S1,
    SQ2,
    HighestCoeffArgs,
    entry_limit_check,
    g_closed,
    g_kappa,
    highest_coeff,
    scalar_det,
    scalar_intermediate,
    scalar_sum,
    scaling_entry_checks,
    scaling_limit_scalar,
)

log = logging.getLogger(__name__)

BRANCHES = (LEFT, RIGHT)
KAPPA2_VALUES = (Fraction(1), Fraction(5, 3))
TWISTED_KAPPA2 = Fraction(5, 3)
KERNEL_POINTS = 50
SCALING_POINTS = 20
ALT_Q = Fraction(3, 2)


@dataclass
class Case:
    name: str
    sizes: Dict[str, int]
    check: Callable[[], Tuple[Any, Any]]


@dataclass
class CaseBook:
    """Collects the cases of one suite and hands out one seeded sampler per case."""

    suite: str
    run: RunConfig
    cases: List[Case] = field(default_factory=list)
    counter: int = 0

    @property
    def ctx(self) -> QContext:
        return run_qcontext(self.run)

    @property
    def reach(self) -> int:
        return max(self.run.max_a, self.run.max_b) + 1

    @property
    def kappa2(self) -> Fraction:
        """kappa2 / kappa1 of the run twist."""
        kappa = run_twist(self.run)
        return kappa.k2 / kappa.k1

    @property
    def kappa2_grid(self) -> Tuple[Fraction, ...]:
        k2 = self.kappa2
        return KAPPA2_VALUES if k2 in KAPPA2_VALUES else KAPPA2_VALUES + (k2,)

    @property
    def twisted_kappa2(self) -> Fraction:
        # cases that need kappa2 != 1
        return TWISTED_KAPPA2 if self.kappa2 == 1 else self.kappa2

    def sampler(self, q: Any = None) -> Sampler:
        s = Sampler(self.run.seed, self.suite, self.counter, q if q is not None else self.ctx.q, self.run.bound)
        self.counter += 1
        return s

    def add(self, name: str, sizes: Dict[str, int], check: Callable[[], Tuple[Any, Any]]) -> None:
        self.cases.append(Case(f"{self.suite}/{name}#{len(self.cases)}", sizes, check))


def _relations(x: Any, y: Any, ctx: QContext) -> Tuple[Any, Any]:
    rel = kernel_relations(x, y, ctx)
    return tuple(r[1] for r in rel), tuple(r[2] for r in rel)


def kernel_cases(book: CaseBook) -> None:
    for q in (book.ctx.q, ALT_Q):
        ctx = QContext(q)
        for _ in range(KERNEL_POINTS):
            x, y = book.sampler(q).points(2)
            book.add(f"relations q={q}", {}, partial(_relations, x, y, ctx))


def izergin_cases(book: CaseBook) -> None:
    ctx, n_max = book.ctx, book.reach
    for _ in range(book.run.trials):
        for branch in BRANCHES:
            for n in range(n_max + 1):
                for m in range(1, n_max + 1):
                    for form in (1, 2):
                        s = book.sampler()
                        xs, ys, zs = s.points(n), s.points(n), s.points(m)
                        book.add(f"k-red{form} {branch}", {"n": n, "m": m}, partial(k_red_check, xs, ys, zs, branch, ctx, form))
            for n in range(1, n_max + 2):
                for form in (1, 2):
                    s = book.sampler()
                    xs, ys = s.points(n), s.points(n)
                    book.add(f"k-invers{form} {branch}", {"n": n}, partial(k_invers_check, xs, ys, branch, ctx, form))
            for n in range(1, n_max + 1):
                s = book.sampler()
                xs, ys, z = s.points(n - 1), s.points(n - 1), s.fresh()
                book.add(f"k-res {branch}", {"n": n}, partial(k_res_check, xs, ys, z, branch, ctx))
            for m in range(1, n_max + 2):
                s = book.sampler()
                m1 = s.rng.randint(0, m)
                g1, g2, xi = s.points(m1), s.points(m - m1), s.points(m)
                book.add(f"k-shift2 {branch}", {"m": m, "m1": m1}, partial(k_shift2_check, g1, g2, xi, branch, ctx))
        for variant in VARIANTS:
            for n in range(1, n_max + 2):
                s = book.sampler()
                book.add(f"permutation {variant}", {"n": n}, partial(permutation_check, s.points(n), s.points(n), variant, ctx))


def _kernel_blocks(alpha: List[Any], beta: List[Any], ctx: Any) -> Tuple[RowBlock, RowBlock]:
    return (
        RowBlock(len(alpha), lambda i, x: ctx.g(x, alpha[i])),
        RowBlock(len(beta), lambda j, x: ctx.h(beta[j], x)),
    )


def _genmat(alpha: List[Any], beta: List[Any], xs: List[Any], ctx: Any) -> Tuple[Any, Any]:
    block1, block2 = _kernel_blocks(alpha, beta, ctx)
    return genmat(block1, block2, xs, ctx)


def _perm_signs(xs: List[Any], ctx: Any) -> Tuple[Any, Any]:
    parts = list(enum_all_pairs(xs))
    return tuple(partition_sign(p, ctx) for p in parts), tuple(parity_scalar(p) for p in parts)


def lemma_cases(book: CaseBook) -> None:
    ctx, n_max = book.ctx, book.reach
    for _ in range(book.run.trials):
        for branch in BRANCHES:
            for total in range(n_max + 2):
                for m1 in range(total + 1):
                    s = book.sampler()
                    gamma, alpha, beta = s.points(total), s.points(m1), s.points(total - m1)
                    book.add(f"lemma1 {branch}", {"m1": m1, "m2": total - m1}, partial(lemma1, gamma, alpha, beta, branch, ctx))
            for m in range(n_max + 1):
                s = book.sampler()
                gamma, xi = s.points(m), s.points(m)
                phi1, phi2 = s.table(gamma), s.table(gamma)
                book.add(f"lemma2 {branch}", {"m": m}, partial(lemma2, gamma, xi, phi1, phi2, branch, ctx))
        for n in range(n_max + 1):
            s = book.sampler()
            alpha, beta, z = s.points(n), s.points(n), s.fresh()
            book.add("lemma3", {"n": n}, partial(lemma3, alpha, beta, z, ctx))
            for which in COROLLARIES:
                s = book.sampler()
                alpha, beta = s.points(n), s.points(n)
                book.add(f"corollary {which}", {"n": n}, partial(corollaries, alpha, beta, which, ctx))
        for a in range(n_max):
            for b in range(n_max):
                s = book.sampler()
                alpha, beta, xs = s.points(a), s.points(b), s.points(a + b)
                book.add("genmat", {"a": a, "b": b}, partial(_genmat, alpha, beta, xs, ctx))
    for n in range(1, 7):
        xs = book.sampler().points(n)
        book.add("perm-delta", {"n": n}, partial(_perm_signs, xs, ctx))


def appendix_cases(book: CaseBook) -> None:
    ctx, n_max = book.ctx, book.reach
    for _ in range(book.run.trials):
        for n in range(n_max + 2):
            s = book.sampler()
            alpha, beta, z = s.points(n), s.points(n), s.fresh()
            book.add("lambda l=r", {"n": n}, partial(lambda_pair, alpha, beta, z, ctx))
            book.add("lambda-r recursion", {"n": n}, partial(lambda_r_recursion, alpha, beta, z, ctx))
        for n in range(1, n_max + 1):
            for which in RESIDUE_CHECKS:
                s = book.sampler()
                alpha, beta, z = s.points(n), s.points(n), s.fresh()
                book.add(f"residue {which}", {"n": n}, partial(lambda_residue_checks, alpha, beta, z, which, ctx))


def _both_reps(args: HighestCoeffArgs, ctx: Any) -> Tuple[Any, Any]:
    return highest_coeff(args, 1, ctx), highest_coeff(args, 2, ctx)


def hc_cases(book: CaseBook) -> None:
    ctx, n_max = book.ctx, book.reach
    for _ in range(book.run.trials):
        for branch in BRANCHES:
            for a in range(n_max + 1):
                for b in range(n_max + 1):
                    s = book.sampler()
                    args = HighestCoeffArgs(s.points(a), s.points(a), s.points(b), s.points(b), branch)
                    book.add(f"rep1=rep2 {branch}", {"a": a, "b": b}, partial(_both_reps, args, ctx))


def _three_routes(cfg: Any, which: str) -> Tuple[Any, Any]:
    s = scalar_sum(cfg)
    return (s, s), (scalar_intermediate(cfg), scalar_det(cfg, which))


def _g_forms(uB1: List[Any], vC1: List[Any], ctx: Any) -> Tuple[Any, Any]:
    lhs = (g_kappa(uB1, vC1, TwistVector(1, 1, 1), ctx), g_kappa(uB1, vC1, TwistVector(1, 1, ctx.q * ctx.q), ctx))
    return lhs, (g_closed(uB1, vC1, "1", ctx), g_closed(uB1, vC1, "q2", ctx))


def _partition_checks(cfg: Any) -> Tuple[Any, Any]:
    lhs, rhs = [], []
    for side in (SIDE_C, SIDE_B):
        us, vs = cfg.sets(side)
        for up in enum_all_pairs(us):
            for vp in enum_all_pairs(vs):
                left, right = be_partition_check(cfg, side, up, vp)
                lhs.append(left)
                rhs.append(right)
    return tuple(lhs), tuple(rhs)


def _det_permuted(cfg: Any, which: str) -> Tuple[Any, Any]:
    permuted = cfg.with_sets(
        uC=tuple(reversed(cfg.uC)), vC=tuple(reversed(cfg.vC)),
        uB=tuple(reversed(cfg.uB)), vB=tuple(reversed(cfg.vB)),
    )
    return scalar_det(cfg, which), scalar_det(permuted, which)


def props_cases(book: CaseBook) -> None:
    ctx = book.ctx
    q2 = ctx.q * ctx.q
    for _ in range(book.run.trials):
        for a in range(book.run.max_a + 1):
            for b in range(book.run.max_b + 1):
                for k2 in book.kappa2_grid:
                    for which, kappa in ((S1, TwistVector(1, k2, 1)), (SQ2, TwistVector(1, k2, q2))):
                        cfg = random_config(book.sampler(), a, b, kappa, ctx)
                        book.add(f"routes {which} k2={k2}", {"a": a, "b": b}, partial(_three_routes, cfg, which))
                cfg = random_config(book.sampler(), a, b, TwistVector(1, book.twisted_kappa2, 1), ctx)
                book.add("det permutation", {"a": a, "b": b}, partial(_det_permuted, cfg, S1))
                book.add("bethe partitions", {"a": a, "b": b}, partial(_partition_checks, cfg))
        for n in range(4):
            s = book.sampler()
            book.add("G closed forms", {"n": n}, partial(_g_forms, s.points(n), s.points(n), ctx))


def _q1_kernels(xs: List[Any], ys: List[Any], c: Any) -> Tuple[Any, Any]:
    lhs = tuple(scaling_substitute(kind, x, y, c).limit(0) for x, y in zip(xs, ys) for kind in KINDS)
    rhs = tuple(kfun_invariant(kind, x, y, c) for x, y in zip(xs, ys) for kind in KINDS)
    return lhs, rhs


def _scaling_scalar(slopes: Tuple[List[Any], ...], c: Any, k2: Any) -> Tuple[Any, Any]:
    lim = scaling_limit_scalar(slopes, c, k2)
    return (lim.s1, lim.s1), (lim.sq2, lim.invariant)


def _scaling_entries(slopes: Tuple[List[Any], ...], c: Any, k2: Any) -> Tuple[Any, Any]:
    checks = scaling_entry_checks(slopes, c, k2)
    return tuple(t for _, t, _ in checks), tuple(i for _, _, i in checks)


def limit_cases(book: CaseBook) -> None:
    ctx = book.ctx
    c = scalar_parse(book.run.c)
    for _ in range(book.run.trials):
        for pair, a, b in (("u", 1, 0), ("u", 2, 1), ("v", 0, 1), ("v", 1, 2)):
            s = book.sampler()
            cfg = random_config(s, a, b, TwistVector(1, book.twisted_kappa2, 1), ctx)
            last = (a if pair == "u" else b) - 1
            book.add(f"diag-entry {pair}", {"a": a, "b": b}, partial(entry_limit_check, cfg, pair, last, last, s.value()))
        for a, b in ((0, 0), (1, 0), (0, 1), (1, 1)):
            s = book.sampler()
            slopes = (s.slopes(a, c), s.slopes(b, c), s.slopes(a, c), s.slopes(b, c))
            book.add("q1-scalar", {"a": a, "b": b}, partial(_scaling_scalar, slopes, c, book.twisted_kappa2))
            book.add("q1-entries", {"a": a, "b": b}, partial(_scaling_entries, slopes, c, book.twisted_kappa2))
    s = book.sampler()
    xs, ys = [], []
    for _ in range(SCALING_POINTS):
        s.slope_pool.clear()
        xs.append(s.fresh_slope(c))
        ys.append(s.fresh_slope(c))
    book.add("q1-kernels", {"points": SCALING_POINTS}, partial(_q1_kernels, xs, ys, c))


def _ff_routes(req: FormFactorRequest) -> Tuple[Any, Any]:
    return twisted_ff(req, "det"), twisted_ff(req, "sum")


def _ff22_routes(z: Any, cfg: Any) -> Tuple[Any, Any]:
    return ff22(z, cfg), ff22_analytic(z, cfg)


def _ff12_permuted(z: Any, cfg: Any) -> Tuple[Any, Any]:
    permuted = cfg.with_sets(
        uC=tuple(reversed(cfg.uC)), vC=tuple(reversed(cfg.vC)),
        uB=tuple(reversed(cfg.uB)), vB=tuple(reversed(cfg.vB)),
    )
    return ff12_twisted(z, cfg), ff12_twisted(z, permuted)


def _vacuum(z: Any, cfg: Any, twisted_cfg: Any) -> Tuple[Any, Any]:
    return (ff22(z, cfg), twisted_ff(FormFactorRequest(FF22_TWISTED, z, twisted_cfg))), (Fraction(1), Fraction(1))


def formfactor_cases(book: CaseBook) -> None:
    ctx = book.ctx
    q = ctx.q
    max_a, max_b = min(book.run.max_a, 2), min(book.run.max_b, 2)
    for _ in range(book.run.trials):
        for a in range(max_a + 1):
            for b in range(max_b + 1):
                for which, kappa in ((FF33_Q2, TwistVector(1, 1, q * q)), (FF22_TWISTED, TwistVector(1, book.twisted_kappa2, 1))):
                    s = book.sampler()
                    z = s.fresh()
                    req = FormFactorRequest(which, z, random_config(s, a, b, kappa, ctx, z=z))
                    book.add(f"{which} det=sum", {"a": a, "b": b}, partial(_ff_routes, req))
                s = book.sampler()
                z = s.fresh()
                cfg = random_config(s, a, b, TwistVector(1, 1, 1), ctx, z=z)
                book.add("ff22 interpolation=analytic", {"a": a, "b": b}, partial(_ff22_routes, z, cfg))
                s = book.sampler()
                z = s.fresh()
                cfg = random_config(s, a, b, TwistVector(1, book.twisted_kappa2, q), ctx, extra_u=1, z=z)
                book.add("ff12 permutation", {"a": a, "b": b}, partial(_ff12_permuted, z, cfg))
        s = book.sampler()
        z = s.fresh()
        vac = random_config(s, 0, 0, TwistVector(1, 1, 1), ctx, z=z)
        vac_twisted = random_config(s, 0, 0, TwistVector(1, s.value() ** 2 + 1, 1), ctx, z=z)
        book.add("vacuum", {}, partial(_vacuum, z, vac, vac_twisted))


SUITES: Dict[str, Callable[[CaseBook], None]] = {
    "kernel": kernel_cases,
    "izergin": izergin_cases,
    "lemmas": lemma_cases,
    "appendix": appendix_cases,
    "hc": hc_cases,
    "props": props_cases,
    "limits": limit_cases,
    "formfactor": formfactor_cases,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def build_cases(suite: str, run: RunConfig) -> List[Tuple[str, Case]]:
    names = list(SUITES) if suite == "all" else [suite]
    out: List[Tuple[str, Case]] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        book = CaseBook(name, run)
        SUITES[name](book)
        log.debug("suite %s: %d cases", name, len(book.cases))
        out.extend((name, c) for c in book.cases)
    return out


def execute(suite: str, case: Case, seed: int) -> VerificationReport:
    rec = VerificationReport(suite=suite, case=case.name, seed=seed, sizes=dict(case.sizes))
    t0 = time.perf_counter()
    try:
        lhs, rhs = case.check()
        rec.lhs, rec.rhs, rec.status = outcome(lhs, rhs)
    except EngineError as e:
        rec.status = ERROR
        rec.message = f"{type(e).__name__}: {e}"
    except Exception as e:
        rec.status = ERROR
        rec.message = f"unexpected {type(e).__name__}: {e}"
    rec.wall_ms = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def run_cases(cases: List[Tuple[str, Case]], seed: int, threads: int = 1) -> List[VerificationReport]:
    """Evaluate cases on a worker pool; results come back in submission order."""
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        futures = [pool.submit(execute, suite, case, seed) for suite, case in cases]
        return [f.result() for f in futures]


def run_suite(suite: str, run: RunConfig) -> List[VerificationReport]:
    return run_cases(build_cases(suite, run), run.seed, run.threads)
