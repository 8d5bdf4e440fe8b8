"""Command-line front end.

Subcommands:

* ``eval`` — probe a symbol at explicit points, JSON report.
* ``scan`` — sup-scan a symbol along a region boundary path, CSV rows.
* ``experiment`` — run a packaged experiment from a JSON spec; JSON report
  plus CSV sidecars for any embedded scans.
* ``identities`` — randomized checks of the algebraic identities the kernel
  formulas rest on; pass/fail table.

Exit codes: 0 success, 1 error (bad input, violated precondition), 2 success
with numeric warnings (e.g. roundoff-dominated finite differences) or with
failed experiment checks.  Reports embed the spec echo, seed, tolerances,
library version and wall-clock time.  With identical configuration and seed
the CSV/JSON payloads are byte-identical regardless of ``--jobs`` (only
``wall_clock_seconds`` in JSON varies).
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence

import numpy as np

from . import __version__
from ._hot import ACTIVE_IMPL
from .conditions import MeasureM, PathSampler, probe_point, sup_scan
from .errors import ContractError, DomainError, PoleError
from .kernels import (
    decomposition_check,
    magic_formula_check,
    norm_sq_blaschke_series,
    norm_sq_fd,
    s_function,
)
from .quadrature import QuadratureConfig, QuadratureError
from .regions import parse_region
from .reports import dump_json, parse_complex, scan_csv_text, to_jsonable
from .experiments import SYMBOL_REGISTRY_NAMES, registry_symbol, run_experiment
from .symbols import BlaschkeData, OuterLogDensity, SingularAtoms, Symbol, symbol_from_spec

_MAP_CHUNK = 16


class _UsageError(Exception):
    """Raised instead of argparse's SystemExit so main() can return 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


# --------------------------------------------------------------------------
# shared plumbing
# --------------------------------------------------------------------------


def _load_symbol(spec_text: str) -> tuple[Symbol, object]:
    """Resolve ``--symbol`` to (symbol, echo): registry name, inline JSON
    object, or path to a JSON file."""
    if spec_text in SYMBOL_REGISTRY_NAMES:
        return registry_symbol(spec_text), spec_text
    if spec_text.lstrip().startswith("{"):
        spec = json.loads(spec_text)
    else:
        with open(spec_text, "r", encoding="utf-8") as handle:
            spec = json.load(handle)
    return symbol_from_spec(spec), spec


def _quad_from(args: argparse.Namespace) -> Optional[QuadratureConfig]:
    if getattr(args, "tol", None) is None:
        return None
    return QuadratureConfig(tolerance=args.tol)


def _tolerances(args: argparse.Namespace) -> dict:
    quad = _quad_from(args)
    return {"quadrature_tol": (quad or QuadratureConfig()).tolerance}


def _emit(report: dict, out: Optional[str]) -> None:
    if out:
        dump_json(report, out)
    else:
        sys.stdout.write(dump_json(report))


def _run_mapped(fn: Callable, jobs: int, call: Callable[[Callable], object]):
    """Invoke ``call`` with an ordered map function honouring ``--jobs``."""
    if jobs <= 1:
        return call(map)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return call(lambda f, xs: pool.map(f, xs, chunksize=_MAP_CHUNK))


# --------------------------------------------------------------------------
# eval
# --------------------------------------------------------------------------


def _cmd_eval(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    sym, echo = _load_symbol(args.symbol)
    points = [(text, parse_complex(text)) for text in args.z]
    offenders = [text for text, z in points if abs(z) >= 1.0]
    if offenders:
        print(
            "error: eval requires |z| < 1; offending points: "
            + ", ".join(offenders),
            file=sys.stderr,
        )
        return 1
    quad = _quad_from(args)
    M = MeasureM.from_symbol(sym)
    probes = [probe_point(M, z, args.m, sym=sym, quad=quad) for _, z in points]
    report = {
        "command": "eval",
        "spec_echo": {"symbol": echo, "z": [t for t, _ in points], "m": args.m},
        "seed": args.seed,
        "tolerances": _tolerances(args),
        "version": __version__,
        "impl": ACTIVE_IMPL,
        "wall_clock_seconds": time.perf_counter() - started,
        "probes": [to_jsonable(p) for p in probes],
    }
    _emit(report, args.out)
    return 2 if any(p.warning for p in probes) else 0


# --------------------------------------------------------------------------
# scan
# --------------------------------------------------------------------------


def _cmd_scan(args: argparse.Namespace) -> int:
    sym, _ = _load_symbol(args.symbol)
    region = parse_region(args.region)
    sampler = PathSampler(
        x_start=args.x_start,
        x_end=args.x_end,
        count=args.count,
        levels=args.levels,
        extend_factor=args.extend_factor,
        side=args.side,
        inward=args.inward,
    )
    quad = _quad_from(args)
    M = MeasureM.from_symbol(sym)
    report = _run_mapped(
        sup_scan,
        args.jobs,
        lambda map_fn: sup_scan(
            M, region, args.m, sampler, quad=quad, sym=sym, map_fn=map_fn
        ),
    )
    csv_text = scan_csv_text(report.probes)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    print(
        f"scan: {len(report.probes)} probes, sup_value={report.sup_value:.6g}, "
        f"bounded={report.sup_bounded}, localized_to_zero={report.localized_to_zero}",
        file=sys.stderr,
    )
    return 2 if any(p.warning for p in report.probes) else 0


# --------------------------------------------------------------------------
# experiment
# --------------------------------------------------------------------------


def _scan_summary(scan, csv_path: Optional[str]) -> dict:
    summary = {
        field.name: to_jsonable(getattr(scan, field.name))
        for field in dataclasses.fields(scan)
        if field.name != "probes"
    }
    summary["n_probes"] = len(scan.probes)
    summary["csv"] = csv_path
    return summary


def _cmd_experiment(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.spec.lstrip().startswith("{"):
        spec = json.loads(args.spec)
    else:
        with open(args.spec, "r", encoding="utf-8") as handle:
            spec = json.load(handle)
    quad = _quad_from(args)
    result = _run_mapped(
        run_experiment,
        args.jobs,
        lambda map_fn: run_experiment(spec, quad=quad, map_fn=map_fn),
    )
    sidecars: list[Optional[str]] = []
    for index, scan in enumerate(result.scans):
        path = None
        if args.out:
            stem = args.out[:-5] if args.out.endswith(".json") else args.out
            path = f"{stem}.scan{index}.csv"
            with open(path, "w", encoding="utf-8", newline="") as handle:
                handle.write(scan_csv_text(scan.probes))
        sidecars.append(path)
    report = {
        "command": "experiment",
        "experiment": result.name,
        "spec_echo": to_jsonable(result.spec_echo),
        "seed": args.seed,
        "tolerances": _tolerances(args),
        "version": __version__,
        "impl": ACTIVE_IMPL,
        "wall_clock_seconds": time.perf_counter() - started,
        "scans": [
            _scan_summary(scan, path) for scan, path in zip(result.scans, sidecars)
        ],
        "scalars": to_jsonable(result.scalars),
        "checks": [to_jsonable(check) for check in result.checks],
        "passed": result.passed,
    }
    _emit(report, args.out)
    if not result.passed:
        failed = ", ".join(c.name for c in result.checks if not c.passed)
        print(f"experiment checks failed: {failed}", file=sys.stderr)
        return 2
    warned = any(p.warning for scan in result.scans for p in scan.probes)
    return 2 if warned else 0


# --------------------------------------------------------------------------
# identities
# --------------------------------------------------------------------------


def _disk_sample(rng: np.random.Generator, radius: float) -> complex:
    r = radius * np.sqrt(rng.uniform())
    theta = rng.uniform(-np.pi, np.pi)
    return complex(r * np.cos(theta), r * np.sin(theta))


def _random_symbol(rng: np.random.Generator) -> Symbol:
    zeros = tuple(_disk_sample(rng, 0.9) for _ in range(rng.integers(1, 3)))
    atoms: tuple = ()
    if rng.uniform() < 0.5:
        atoms = ((float(rng.uniform(-np.pi, np.pi)), float(rng.uniform(0.05, 0.5))),)
    return Symbol(
        blaschke=BlaschkeData(zeros),
        singular=SingularAtoms(atoms),
        outer=OuterLogDensity.zero(),
    )


def _disk_samples(rng: np.random.Generator, count: int, radius: float) -> np.ndarray:
    r = radius * np.sqrt(rng.uniform(size=count))
    theta = rng.uniform(-np.pi, np.pi, size=count)
    return r * np.exp(1j * theta)


def identity_magic(rng: np.random.Generator, count: int) -> float:
    """Max absolute two-sided error of the product-kernel identity."""
    worst = 0.0
    for a, z in zip(_disk_samples(rng, count, 0.95), _disk_samples(rng, count, 0.95)):
        lhs, rhs = magic_formula_check(complex(a), complex(z))
        worst = max(worst, abs(lhs - rhs))
    return worst


def identity_decomposition(rng: np.random.Generator, count: int) -> float:
    """Max relative error of the product-symbol norm decomposition."""
    worst = 0.0
    for _ in range(count):
        b1 = _random_symbol(rng)
        b2 = _random_symbol(rng)
        z = _disk_sample(rng, 0.95)
        lhs, rhs = decomposition_check(b1, b2, z)
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0))
    return worst


def identity_s_series(count: int, terms: int = 10_000) -> float:
    """Max |closed form − partial series| for S on [0.05, 1]."""
    xs = np.linspace(0.05, 1.0, min(max(count, 2), 2001))
    y = 1.0 - xs
    term = np.ones_like(xs)
    acc = np.zeros_like(xs)
    for n in range(1, terms + 1):
        acc += term / (2.0 * n)
        term *= y
    closed = np.array([s_function(float(x)) for x in xs])
    return float(np.max(np.abs(acc - closed)))


def identity_series_vs_fd(
    rng: np.random.Generator, count: int, m: int
) -> float:
    """Max relative error, exact derivative-norm series vs finite differences,
    for random 3-zero Blaschke products at random |z| ≤ 0.9."""
    worst = 0.0
    for _ in range(count):
        zeros = tuple(_disk_sample(rng, 0.85) for _ in range(3))
        sym = Symbol(
            blaschke=BlaschkeData(zeros),
            singular=SingularAtoms(()),
            outer=OuterLogDensity.zero(),
        )
        z = _disk_sample(rng, 0.9)
        exact = norm_sq_blaschke_series(sym.blaschke, z, m)
        fd = norm_sq_fd(sym, z, m)
        worst = max(worst, abs(fd.value - exact) / max(abs(exact), 1.0))
    return worst


def _cmd_identities(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise _UsageError("--count must be >= 1")
    started = time.perf_counter()
    rng = np.random.default_rng(args.seed)
    fd_count = min(args.count, 50)
    rows = [
        ("magic_formula", args.count, identity_magic(rng, args.count), 1e-14),
        (
            "decomposition",
            args.count,
            identity_decomposition(rng, args.count),
            1e-12,
        ),
        (
            "s_function_series",
            min(max(args.count, 2), 2001),
            identity_s_series(args.count),
            1e-10,
        ),
        (
            "series_vs_fd_m1",
            fd_count,
            identity_series_vs_fd(rng, fd_count, 1),
            1e-6,
        ),
        (
            "series_vs_fd_m2",
            fd_count,
            identity_series_vs_fd(rng, fd_count, 2),
            1e-4,
        ),
    ]
    width = max(len(name) for name, *_ in rows)
    print(f"{'identity':<{width}}  {'samples':>8}  {'max_error':>12}  {'threshold':>10}  status")
    failed = []
    for name, samples, err, threshold in rows:
        ok = err <= threshold
        if not ok:
            failed.append(name)
        print(
            f"{name:<{width}}  {samples:>8}  {err:>12.3e}  {threshold:>10.0e}  "
            f"{'PASS' if ok else 'FAIL'}"
        )
    if args.out:
        dump_json(
            {
                "command": "identities",
                "spec_echo": {"count": args.count},
                "seed": args.seed,
                "tolerances": {name: threshold for name, _, _, threshold in rows},
                "version": __version__,
                "impl": ACTIVE_IMPL,
                "wall_clock_seconds": time.perf_counter() - started,
                "results": [
                    {
                        "name": name,
                        "samples": samples,
                        "max_error": err,
                        "threshold": threshold,
                        "passed": err <= threshold,
                    }
                    for name, samples, err, threshold in rows
                ],
            },
            args.out,
        )
    if failed:
        print("identity check failed: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="output path (default: stdout)")
    sub.add_argument("--tol", type=float, help="quadrature tolerance override")
    sub.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub.add_argument("--seed", type=int, default=0, help="seed recorded in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hbkern",
        description="Reproducing-kernel boundary probes for inner-outer symbols.",
    )
    parser.add_argument("--version", action="version", version=f"hbkern {__version__}")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = subs.add_parser(
        "eval", help="probe a symbol at explicit points (JSON report)"
    )
    p_eval.add_argument(
        "--symbol",
        required=True,
        help="registry name, inline JSON, or path to a symbol spec",
    )
    p_eval.add_argument(
        "--z",
        action="append",
        required=True,
        metavar="A+BI",
        help="evaluation point 'a+bi' (repeatable); requires |z| < 1",
    )
    p_eval.add_argument("--m", type=int, default=0, help="derivative order")
    _add_common(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_scan = subs.add_parser(
        "scan", help="sup-scan along a region boundary path (CSV rows)"
    )
    p_scan.add_argument("--symbol", required=True)
    p_scan.add_argument(
        "--region",
        required=True,
        help="region spec, e.g. 'nt:c=1' or 'rho:power:c=1,gamma=2'",
    )
    p_scan.add_argument("--m", type=int, default=0)
    p_scan.add_argument("--x-start", type=float, default=PathSampler.x_start)
    p_scan.add_argument("--x-end", type=float, default=PathSampler.x_end)
    p_scan.add_argument("--count", type=int, default=PathSampler.count)
    p_scan.add_argument("--levels", type=int, default=PathSampler.levels)
    p_scan.add_argument(
        "--extend-factor", type=float, default=PathSampler.extend_factor
    )
    p_scan.add_argument("--side", choices=("upper", "lower"), default=PathSampler.side)
    p_scan.add_argument("--inward", type=float, default=PathSampler.inward)
    _add_common(p_scan)
    p_scan.set_defaults(handler=_cmd_scan)

    p_exp = subs.add_parser(
        "experiment", help="run a packaged experiment from a JSON spec"
    )
    p_exp.add_argument(
        "--spec",
        required=True,
        help="inline JSON or path; e.g. '{\"experiment\": \"theorem_c\"}'",
    )
    _add_common(p_exp)
    p_exp.set_defaults(handler=_cmd_experiment)

    p_id = subs.add_parser(
        "identities", help="randomized checks of the kernel-formula identities"
    )
    p_id.add_argument("--count", type=int, default=1000, help="samples per identity")
    _add_common(p_id)
    p_id.set_defaults(handler=_cmd_identities)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (
        ContractError,
        DomainError,
        PoleError,
        QuadratureError,
        json.JSONDecodeError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
