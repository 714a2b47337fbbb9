"""Command-line front end: point evaluation, bound inspection, verification.

Exit codes: 0 all checks pass / evaluation ok, 1 violation or evaluation
failure, 2 usage error.  Output files default into $BESSELBOUNDS_OUT (or
the working directory).  CSV output is deterministic byte for byte: 17
significant digits, comma separators, LF line endings.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass

from . import __version__
from . import catalog as cat
from .core import (
    AccuracyError,
    DomainError,
    EvalContext,
    QuantityKind,
    dual_path_checks,
    eval_I,
    eval_K,
    evaluation_path,
    quantity,
)
from .harness import SUITE_NAMES, VerifyConfig, run_suite

__all__ = ["main", "CliConfig", "FigureSpec", "FIGURES"]

_FN_TAGS = ("I", "K") + tuple(k.value for k in QuantityKind)
# which base functions feed each quantity (for the path report)
_NEEDS_I = {"y", "phiI", "phiP", "P", "omega", "deltaI", "w", "u", "lambda",
            "b2hat", "ns", "iratio", "I"}
_NEEDS_K = {"z", "phiK", "phiP", "P", "omega", "deltaK", "q", "t", "veff",
            "kratio", "K"}


@dataclass(frozen=True)
class CliConfig:
    """One parsed invocation; grid counts >= 2 enforced at parse time."""

    command: str
    fn: str | None = None
    nu: float = 0.0
    x: float = 1.0
    quantity: str | None = None
    status: str | None = None
    bound_ids: tuple[str, ...] = ()
    suite: str = "all"
    figure_id: str | None = None
    out: str | None = None
    json_path: str | None = None
    target_rel_err: float = 1e-12
    seed: int = VerifyConfig.seed
    pairs: int = VerifyConfig.random_pairs
    x_grid: tuple[float, float, int, str] = (1e-3, 100.0, 200, "log")
    inject_error: bool = False


@dataclass(frozen=True)
class FigureSpec:
    """One reproducible data figure: a quantity plus bound columns."""

    figure_id: str
    quantity: QuantityKind
    nu: float
    x_max: float
    bound_ids: tuple[str, ...]
    points: int = 400


FIGURES = {
    "fig1": FigureSpec("fig1", QuantityKind.PHI_I, 1.0, 10.0,
                       ("turan8_lower", "turan8_upper", "turan11_upper",
                        "turan16_lower", "turan16_upper")),
    "fig2": FigureSpec("fig2", QuantityKind.PHI_K, 2.0, 10.0,
                       ("turan18_lower", "turan18_upper", "turan20_lower",
                        "turan20_upper")),
    "fig3": FigureSpec("fig3", QuantityKind.PHI_P, 1.0, 6.0,
                       ("turan26_lower", "turan26_upper")),
}


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _out_path(name: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    base = os.environ.get("BESSELBOUNDS_OUT", ".")
    return os.path.join(base, name)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_eval(cfg: CliConfig) -> int:
    fn = "lambda" if cfg.fn == "lam" else cfg.fn
    try:
        ctx = EvalContext(cfg.nu, cfg.x)
        if fn == "I":
            v = eval_I(ctx, cfg.target_rel_err)
        elif fn == "K":
            v = eval_K(ctx, cfg.target_rel_err)
        else:
            v = quantity(QuantityKind(fn), ctx)
    except (DomainError, AccuracyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    paths = []
    if fn in _NEEDS_I:
        paths.append(f"I={evaluation_path('I', cfg.nu, cfg.x)}")
    if fn in _NEEDS_K:
        paths.append(f"K={evaluation_path('K', cfg.nu, cfg.x)}")
    if not paths:
        paths.append("arithmetic")
    print(f"{fn}(nu={cfg.nu:g}, x={cfg.x:g}) = {_fmt(v.value)}")
    print(f"rel_error_bound = {v.rel_error_bound:.3e}")
    print(f"paths: {', '.join(paths)}")
    return 0


def cmd_bounds_at(cfg: CliConfig) -> int:
    q = QuantityKind(cfg.quantity)
    statuses = (cfg.status,) if cfg.status else ("proved", "conjecture", "refuted")
    evs = cat.applicable(q, cfg.nu, cfg.x, statuses=statuses)
    if not evs:
        print(f"no cataloged bounds apply to {q.value} at nu={cfg.nu:g}, x={cfg.x:g}")
        return 0
    lo, hi = cat.best_bounds(q, cfg.nu, cfg.x)
    try:
        true = quantity(q, EvalContext(cfg.nu, cfg.x))
        print(f"{q.value}(nu={cfg.nu:g}, x={cfg.x:g}) = {_fmt(true.value)}")
    except (DomainError, AccuracyError) as exc:
        print(f"{q.value} not evaluable here ({exc})")
    print(f"{'id':24} {'side':5} {'status':10} {'value':>24}  best")
    for ev in sorted(evs, key=lambda e: (e.side, e.id)):
        mark = ""
        if lo is not None and ev.id == lo.id and ev.side == "lower":
            mark = "<-- best lower"
        if hi is not None and ev.id == hi.id and ev.side == "upper":
            mark = "<-- best upper"
        print(f"{ev.id:24} {ev.side:5} {ev.status:10} {_fmt(ev.value):>24}  {mark}")
    return 0


def cmd_bounds_list(cfg: CliConfig) -> int:
    rows = cat.catalog_rows()
    if cfg.status:
        rows = [r for r in rows if r["status"] == cfg.status]
    if cfg.quantity:
        rows = [r for r in rows if r["quantity"] == cfg.quantity]
    if cfg.bound_ids:
        missing = set(cfg.bound_ids) - {r["id"] for r in cat.catalog_rows()}
        if missing:
            print(f"error: unknown bound id(s): {', '.join(sorted(missing))}", file=sys.stderr)
            return 1
        rows = [r for r in rows if r["id"] in cfg.bound_ids]
    for r in rows:
        guard = "  [guarded]" if r["guard_note"] else ""
        print(f"{r['id']:24} {r['quantity']:7} {r['side']:5} {r['status']:10} "
              f"domain: {r['domain']:42} {r['formula']}{guard}")
    if cfg.json_path:
        path = _out_path("catalog.json", cfg.json_path)
        with open(path, "w", newline="\n") as f:
            json.dump(rows, f, indent=2)
            f.write("\n")
        print(f"catalog written to {path}")
    return 0


def cmd_verify(cfg: CliConfig) -> int:
    lo, hi, n, scale = cfg.x_grid
    vcfg = VerifyConfig(seed=cfg.seed, random_pairs=cfg.pairs,
                        x_points=n, x_lo=lo, x_hi=hi, scale=scale)
    t0 = time.perf_counter()
    report = run_suite(cfg.suite, vcfg)
    dt = time.perf_counter() - t0
    path = _out_path(f"verify_{cfg.suite}.json", cfg.out)
    try:
        with open(path, "w", newline="\n") as f:
            json.dump(report.to_json_dict(), f, indent=2)
            f.write("\n")
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return 1
    s = report.summary
    print(f"suite={cfg.suite} checks={len(report.checks)} "
          f"pass={s['pass']} fail={s['fail']} info={s['info']} ({dt:.1f}s)")
    for c in report.checks:
        if c.status == "fail":
            print(f"FAIL {c.check_id}: max_violation={c.max_violation:.3e} "
                  f"tolerance={c.tolerance:.3e}")
            for w in c.witnesses[:3]:
                print(f"     witness {w.bound_id} nu={w.nu:g} x={w.x:g} "
                      f"bound={w.bound_value:.9g} true={w.true_value:.9g} margin={w.margin:.3e}")
    print(f"report written to {path}")
    return 0 if report.passed else 1


def cmd_figure(cfg: CliConfig) -> int:
    spec = FIGURES[cfg.figure_id]
    path = _out_path(f"{spec.figure_id}.csv", cfg.out)
    header = ["x", spec.quantity.value] + list(spec.bound_ids)
    try:
        with open(path, "w", newline="\n") as f:
            f.write(",".join(header) + "\n")
            for k in range(1, spec.points + 1):
                x = k * spec.x_max / spec.points
                row = [_fmt(x), _fmt(quantity(spec.quantity, EvalContext(spec.nu, x)).value)]
                for bid in spec.bound_ids:
                    row.append(_fmt(cat.evaluate_bound(bid, spec.nu, x).value))
                f.write(",".join(row) + "\n")
    except OSError as exc:
        print(f"error: cannot write figure data: {exc}", file=sys.stderr)
        return 1
    print(f"{spec.figure_id}: {spec.points} rows written to {path}")
    return 0


def cmd_selftest(cfg: CliConfig) -> int:
    """Closed-form checks; runs in well under a second."""
    t0 = time.perf_counter()
    failures = []
    perturb = 1.0 + (1e-6 if cfg.inject_error else 0.0)
    xs = (0.3, 1.0, 2.5, 7.0, 20.0)
    for x in xs:
        got = eval_I(EvalContext(0.5, x)).value * perturb
        want = math.sqrt(2.0 / (math.pi * x)) * math.sinh(x)
        if abs(got - want) > 1e-12 * want:
            failures.append(f"I(1/2, {x:g}): {got!r} != {want!r}")
        gotk = eval_K(EvalContext(0.5, x)).value * perturb
        wantk = math.sqrt(0.5 * math.pi / x) * math.exp(-x)
        if abs(gotk - wantk) > 1e-12 * wantk:
            failures.append(f"K(1/2, {x:g}): {gotk!r} != {wantk!r}")
        ks = eval_K(EvalContext(2.3, x)).value
        km = eval_K(EvalContext(-2.3, x)).value
        if abs(ks - km) > 1e-12 * ks:
            failures.append(f"K symmetry at x={x:g}")
        y = quantity(QuantityKind.Y, EvalContext(1.0, x)).value
        z = quantity(QuantityKind.Z, EvalContext(1.0, x)).value
        p = quantity(QuantityKind.P, EvalContext(1.0, x)).value
        if abs(y - z - 1.0 / p) * p > 1e-10:
            failures.append(f"Wronskian at x={x:g}")
    worst_overlap = max(d for _, d in dual_path_checks())
    if worst_overlap > 1e-11:
        failures.append(f"path overlap disagreement {worst_overlap:.3e}")
    print(f"besselbounds {__version__} selftest "
          f"({(time.perf_counter()-t0)*1e3:.0f} ms)")
    print("evaluation paths: I: series, asymptotic; "
          "K: reflection, quadrature, asymptotic; ratios: continued fraction + quotient")
    if failures:
        for msg in failures:
            print(f"FAIL {msg}")
        return 1
    print(f"all closed-form checks pass (worst path-overlap diff {worst_overlap:.2e})")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _parse_x_grid(text: str) -> tuple[float, float, int, str]:
    """START:END:COUNT[:log|lin] with COUNT >= 2 and 0 < START < END."""
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise argparse.ArgumentTypeError("expected START:END:COUNT[:log|lin]")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    scale = parts[3] if len(parts) == 4 else "log"
    if scale not in ("log", "lin", "linear"):
        raise argparse.ArgumentTypeError("scale must be 'log' or 'lin'")
    if n < 2:
        raise argparse.ArgumentTypeError("grid count must be >= 2")
    if not (0.0 < lo < hi):
        raise argparse.ArgumentTypeError("need 0 < START < END")
    return lo, hi, n, ("linear" if scale.startswith("lin") else "log")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="besselbounds",
        description="Certified modified-Bessel evaluation and Turan-type bound verification.")
    p.add_argument("--version", action="version", version=f"besselbounds {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate I, K or a derived quantity at (nu, x)")
    pe.add_argument("--fn", required=True, choices=_FN_TAGS + ("lam",))
    pe.add_argument("--nu", type=float, required=True)
    pe.add_argument("--x", type=float, required=True)
    pe.add_argument("--target-rel-err", type=float, default=1e-12, dest="target_rel_err")
    pe.set_defaults(run=cmd_eval)

    pb = sub.add_parser("bounds", help="inspect the bounds catalog")
    bsub = pb.add_subparsers(dest="bounds_command", required=True)
    pba = bsub.add_parser("at", help="evaluate applicable bounds at a point")
    pba.add_argument("--quantity", required=True,
                     choices=tuple(k.value for k in QuantityKind))
    pba.add_argument("--nu", type=float, required=True)
    pba.add_argument("--x", type=float, required=True)
    pba.add_argument("--status", choices=("proved", "conjecture", "refuted"))
    pba.set_defaults(run=cmd_bounds_at)
    pbl = bsub.add_parser("list", help="dump catalog metadata")
    pbl.add_argument("--status", choices=("proved", "conjecture", "refuted"))
    pbl.add_argument("--quantity", choices=tuple(k.value for k in QuantityKind))
    pbl.add_argument("--id", action="append", default=[], dest="bound_ids",
                     help="restrict to specific bound ids (repeatable)")
    pbl.add_argument("--json", nargs="?", const="catalog.json", default=None,
                     dest="json_path", help="also write the catalog as JSON (optional path)")
    pbl.set_defaults(run=cmd_bounds_list)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--suite", default="all", choices=SUITE_NAMES)
    pv.add_argument("--out", default=None)
    pv.add_argument("--seed", type=int, default=VerifyConfig.seed)
    pv.add_argument("--pairs", type=int, default=VerifyConfig.random_pairs,
                    help="random pairs per order for the concavity checks")
    pv.add_argument("--x-grid", type=_parse_x_grid, default=(1e-3, 100.0, 200, "log"),
                    dest="x_grid", metavar="START:END:COUNT[:log|lin]",
                    help="sweep grid for the validity/conjecture suites")
    pv.set_defaults(run=cmd_verify)

    pf = sub.add_parser("figure", help="write figure data as CSV")
    pf.add_argument("figure_id", choices=tuple(FIGURES))
    pf.add_argument("--out", default=None)
    pf.set_defaults(run=cmd_figure)

    ps = sub.add_parser("selftest", help="quick closed-form sanity checks")
    ps.add_argument("--inject-error", action="store_true", dest="inject_error",
                    help=argparse.SUPPRESS)  # test hook: perturbs the evaluator
    ps.set_defaults(run=cmd_selftest)
    return p


def _to_config(args: argparse.Namespace) -> CliConfig:
    get = lambda name, default: getattr(args, name, default)
    command = args.command
    if command == "bounds":
        command = f"bounds {args.bounds_command}"
    return CliConfig(
        command=command,
        fn=get("fn", None),
        nu=get("nu", 0.0),
        x=get("x", 1.0),
        quantity=get("quantity", None),
        status=get("status", None),
        bound_ids=tuple(get("bound_ids", [])),
        suite=get("suite", "all"),
        figure_id=get("figure_id", None),
        out=get("out", None),
        json_path=get("json_path", None),
        target_rel_err=get("target_rel_err", 1e-12),
        seed=get("seed", VerifyConfig.seed),
        pairs=get("pairs", VerifyConfig.random_pairs),
        x_grid=get("x_grid", (1e-3, 100.0, 200, "log")),
        inject_error=get("inject_error", False),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.run(_to_config(args))
    except (DomainError, AccuracyError, cat.UnknownBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
