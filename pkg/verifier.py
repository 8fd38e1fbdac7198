from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from errors import EngineError
from formfactor import FF22_TWISTED, FF33_Q2, FormFactorRequest, ff12_twisted, ff22, twisted_ff
from report import STATUS_ICONS, FAIL, PASS, failure_lines, format_value, summary_table, write_report_files
from run_config import RunConfig, load_config, override, run_bethe_config, run_z
from scalarprod import S1, SQ2, scalar_det, scalar_intermediate, scalar_sum
from suites import SUITE_NAMES, build_cases, run_cases

log = logging.getLogger("verifier")

DEFAULT_CONFIG = "verifier_config.json"

SCALAR_METHODS: Dict[str, Callable[[Any, Any], Any]] = {
    "sum": lambda cfg, z: scalar_sum(cfg),
    "intermediate": lambda cfg, z: scalar_intermediate(cfg),
    "det1": lambda cfg, z: scalar_det(cfg, S1),
    "detq2": lambda cfg, z: scalar_det(cfg, SQ2),
}
FF_METHODS: Dict[str, Callable[[Any, Any], Any]] = {
    "ff22": lambda cfg, z: ff22(z, cfg),
    "ff22t": lambda cfg, z: twisted_ff(FormFactorRequest(FF22_TWISTED, z, cfg)),
    "ff33q2": lambda cfg, z: twisted_ff(FormFactorRequest(FF33_Q2, z, cfg)),
    "ff12q": lambda cfg, z: ff12_twisted(z, cfg),
}
LIMIT_KINDS = ("q1-kernels", "q1-scalar", "diag-entry")


def _split(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [t.strip() for t in text.split(",") if t.strip()]


def resolve_run(args: argparse.Namespace) -> RunConfig:
    cfg = load_config(args.config)
    return override(
        cfg,
        q=args.q,
        kappa=_split(args.kappa),
        seed=args.seed,
        trials=getattr(args, "trials", None),
        max_a=getattr(args, "max_a", None),
        max_b=getattr(args, "max_b", None),
        threads=getattr(args, "threads", None),
        bound=getattr(args, "bound", None),
        report=getattr(args, "report", None),
        uC=_split(getattr(args, "uC", None)),
        vC=_split(getattr(args, "vC", None)),
        uB=_split(getattr(args, "uB", None)),
        vB=_split(getattr(args, "vB", None)),
        z=getattr(args, "z", None),
        r1_at_z=getattr(args, "r1_at_z", None),
        r3_at_z=getattr(args, "r3_at_z", None),
    )


def _finish(records: List[Any], run: RunConfig) -> int:
    print(summary_table(records))
    failures = failure_lines(records)
    if failures:
        print("")
        for line in failures:
            print(line)
    latest_path, stamped_path = write_report_files(records, run.report)
    print("")
    print("Report written:")
    print(f"   - {latest_path}")
    print(f"   - {stamped_path}")
    return 0 if not failures else 1


def cmd_verify(args: argparse.Namespace) -> int:
    run = resolve_run(args)
    log.info("verify %s with seed %d on %d thread(s)", args.suite, run.seed, run.threads)
    cases = build_cases(args.suite, run)
    return _finish(run_cases(cases, run.seed, run.threads), run)


def cmd_limit(args: argparse.Namespace) -> int:
    run = resolve_run(args)
    prefix = f"limits/{args.kind}"
    cases = [(s, c) for s, c in build_cases("limits", run) if c.name.startswith(prefix)]
    return _finish(run_cases(cases, run.seed, run.threads), run)


def cmd_eval(args: argparse.Namespace) -> int:
    table = SCALAR_METHODS if args.what == "scalar" else FF_METHODS
    methods = _split(args.methods) or list(table)
    unknown = [m for m in methods if m not in table]
    if unknown:
        print(f"{STATUS_ICONS[FAIL]} unknown {args.what} method(s): {', '.join(unknown)}")
        return 2
    try:
        run = resolve_run(args)
        cfg = run_bethe_config(run)
        z = run_z(run)
        values = [(m, table[m](cfg, z)) for m in methods]
    except EngineError as e:
        print(f"{STATUS_ICONS[FAIL]} {type(e).__name__}: {e}")
        return 2
    width = max(len(m) for m, _ in values)
    for m, v in values:
        print(f"{m.ljust(width)}  {format_value(v)}")
    if len(values) < 2:
        return 0
    same = all(v == values[0][1] for _, v in values[1:])
    print(f"{STATUS_ICONS[PASS if same else FAIL]} {'equal' if same else 'differ'}")
    return 0 if same else 1


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", default=DEFAULT_CONFIG, help="JSON run configuration")
    p.add_argument("--q", default=None, help="deformation parameter, e.g. 2 or 3/2")
    p.add_argument("--kappa", default=None, help="twist as k1,k2,k3; verify and limit take k2/k1 into their kappa2 grids")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--verbose", action="store_true")


def _batch(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-a", dest="max_a", type=int, default=None)
    p.add_argument("--max-b", dest="max_b", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--bound", type=int, default=None, help="numerator/denominator bound of sampled points")
    p.add_argument("--report", default=None, help="path of the latest JSONL report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verifier", description="Exact checks for GL(3) trigonometric Bethe vectors")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    _common(verify)
    _batch(verify)
    verify.set_defaults(func=cmd_verify)

    ev = sub.add_parser("eval", help="evaluate one configuration by several methods")
    ev.add_argument("what", choices=("scalar", "formfactor"))
    ev.add_argument("--methods", default=None, help="comma list; all methods of the kind when omitted")
    for name in ("uC", "vC", "uB", "vB"):
        ev.add_argument(f"--{name}", default=None, help="comma list of rationals")
    ev.add_argument("--z", default=None)
    ev.add_argument("--r1-at-z", dest="r1_at_z", default=None)
    ev.add_argument("--r3-at-z", dest="r3_at_z", default=None)
    _common(ev)
    ev.set_defaults(func=cmd_eval)

    lim = sub.add_parser("limit", help="run one family of limit checks")
    lim.add_argument("kind", choices=LIMIT_KINDS)
    _common(lim)
    _batch(lim)
    lim.set_defaults(func=cmd_limit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
