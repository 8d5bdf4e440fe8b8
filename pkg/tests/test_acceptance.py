"""The acceptance gate: eleven quantitative criteria, one test each.

Every test prints a single ``criterion NN PASS`` line with the measured
extremal value (visible with ``-s`` or ``-rA``); ``pytest -v`` likewise gives
one PASSED/FAILED line per criterion.  Tolerances here are contractual —
do not loosen them to make a failing build green.
"""

import json
import math
import time

import numpy as np
import pytest

from hbkern.cli import (
    _disk_sample,
    identity_decomposition,
    identity_magic,
    identity_s_series,
    identity_series_vs_fd,
    main,
)
from hbkern.conditions import MeasureM, localized_value
from hbkern.experiments import TheoremCSpec, registry_symbol, run_theorem_c
from hbkern.kernels import (
    norm_sq,
    norm_sq_blaschke_series,
    norm_sq_fd,
    s_function,
    zero_free_identity_values,
)
from hbkern.regions import (
    ApproachRegion,
    RhoFunction,
    boundary_path,
    calc_lemma_check,
    estimate_check,
    in_sector_S,
)
from hbkern.symbols import BlaschkeData, OuterLogDensity, SingularAtoms, Symbol

SEED = 20260815


def _report(n: int, detail: str) -> None:
    print(f"criterion {n:02d} PASS — {detail}")


def _blaschke(zeros) -> Symbol:
    return Symbol(
        blaschke=BlaschkeData(tuple(zeros)),
        singular=SingularAtoms(()),
        outer=OuterLogDensity.zero(),
    )


def test_criterion_01_magic_formula():
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    worst = identity_magic(rng, 100_000)
    elapsed = time.perf_counter() - start
    assert worst <= 1e-14
    assert elapsed < 1.0
    _report(1, f"1e5 samples, max |lhs-rhs| = {worst:.3e}, {elapsed:.2f}s")


def test_criterion_02_kernel_norm_consistency():
    rng = np.random.default_rng(SEED + 1)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(200):
        sym = _blaschke(
            _disk_sample(rng, 0.9) for _ in range(int(rng.integers(1, 11)))
        )
        for _ in range(100):
            z = _disk_sample(rng, 0.95)
            direct = norm_sq(sym, z)
            series = norm_sq_blaschke_series(sym.blaschke, z, 0)
            worst = max(worst, abs(direct - series) / max(abs(direct), abs(series)))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-10
    assert elapsed < 10.0
    _report(2, f"200 products x 100 z, max rel err = {worst:.3e}, {elapsed:.2f}s")


def test_criterion_03_higher_order_cross_check():
    sym = _blaschke([0j, 0j])
    grid = np.linspace(-0.9, 0.9, 20)
    worst_fd = worst_series = 0.0
    for re in grid:
        for im in grid:
            z = complex(re, im)
            if abs(z) > 0.9:
                continue
            worst_fd = max(worst_fd, abs(norm_sq_fd(sym, z, 1).value - 1.0))
            worst_series = max(
                worst_series, abs(norm_sq_blaschke_series(sym.blaschke, z, 1) - 1.0)
            )
    assert worst_fd <= 1e-6
    assert worst_series <= 1e-12
    rng = np.random.default_rng(SEED + 2)
    worst_m1 = identity_series_vs_fd(rng, 50, 1)
    worst_m2 = identity_series_vs_fd(rng, 50, 2)
    assert worst_m1 <= 1e-6
    assert worst_m2 <= 1e-4
    _report(
        3,
        "b=z^2 m=1 grid: fd err "
        f"{worst_fd:.3e}, series err {worst_series:.3e}; random m=1 "
        f"{worst_m1:.3e}, m=2 {worst_m2:.3e}",
    )


def test_criterion_04_s_function_series():
    worst = identity_s_series(2001, terms=10_000)
    assert worst <= 1e-10
    assert s_function(1.0) == 0.5
    xs = np.linspace(0.001, 1.0, 2001)
    floor = min(s_function(float(x)) for x in xs)
    assert floor >= 0.5
    _report(4, f"series vs closed form {worst:.3e}; S(1) = 1/2; min S = {floor:.6f}")


def test_criterion_05_zero_free_identity():
    rng = np.random.default_rng(SEED + 3)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 4))
        atoms = tuple(
            (float(t), float(mu))
            for t, mu in zip(
                rng.uniform(-math.pi, math.pi, n), rng.uniform(0.05, 0.5, n)
            )
        )
        sym = Symbol(
            blaschke=BlaschkeData(()),
            singular=SingularAtoms(atoms),
            outer=OuterLogDensity.constant(math.exp(-rng.uniform(0.1, 1.0))),
        )
        for _ in range(100):
            lhs, rhs = zero_free_identity_values(sym, _disk_sample(rng, 0.9))
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
    assert worst <= 1e-8
    _report(5, f"100 symbols x 100 z, max rel err = {worst:.3e}")


def test_criterion_06_decomposition_formula():
    rng = np.random.default_rng(SEED + 4)
    worst = identity_decomposition(rng, 10_000)
    assert worst <= 1e-12
    _report(6, f"1e4 symbol pairs, max rel err = {worst:.3e}")


def test_criterion_07_localization_estimate():
    rng = np.random.default_rng(SEED + 5)
    violations = 0
    n = 0
    while n < 100_000:
        z = _disk_sample(rng, 0.999)
        w = _disk_sample(rng, 1.0)
        if z == 0 or (w != 0 and in_sector_S(z, w)):
            continue
        n += 1
        violations += not estimate_check(z, w).holds
    assert violations == 0
    _report(7, "1e5 admissible (z, w) pairs, zero violations")


def test_criterion_08_counterexample_reproduction():
    start = time.perf_counter()
    rep = run_theorem_c(TheoremCSpec())
    elapsed = time.perf_counter() - start
    by_name = {c.name: c for c in rep.checks}
    ratio = rep.scalars["ratio_partial_sums"][-1]
    assert abs(ratio - 1.0 / 15.0) <= 1e-12  # (a)
    assert by_name["ratio_sum_geometric"].passed
    assert by_name["sup_stable_under_doubling"].passed  # (b)
    sups = rep.scalars["sup_condition_levels"]
    assert all(math.isfinite(s) for s in sups)
    assert abs(sups[1] - sups[0]) <= 0.10 * sups[0]
    disc = rep.scalars["discrepancies"]  # (c)
    assert set(disc) == {8, 9, 10, 11, 12}
    assert all(1.9 <= d.real <= 2.1 for d in disc.values())
    assert by_name["discrepancy_window"].passed
    assert all(v >= 1.0 for v in rep.scalars["localized_at_probes"].values())  # (d)
    assert by_name["localized_at_probes_ge_1"].passed
    assert by_name["special_terms_le_5"].passed  # (e)
    assert rep.scalars["strata_sups"]["special_pair"] <= 5.0
    assert rep.passed
    assert elapsed < 60.0
    _report(
        8,
        f"ratio sum -> 1/15 ({ratio:.17g}), sup stable "
        f"({sups[0]:.6f} vs {sups[1]:.6f}), discrepancy -> 2, "
        f"localized >= 1, special pair <= 5; {elapsed:.2f}s",
    )


def test_criterion_09_calculus_lemma():
    rng = np.random.default_rng(SEED + 6)
    violations = 0
    for _ in range(10_000):
        rho = RhoFunction.power(float(rng.uniform(0.1, 2.0)), float(rng.uniform(2.0, 4.0)))
        x_star = float(rng.uniform(1e-4, 0.1))
        x = float(rng.uniform(0.0, 1.0)) * x_star
        if not 0.0 < x < x_star:
            continue
        violations += not calc_lemma_check(rho, x, x_star).holds
    assert violations == 0
    _report(9, "1e4 random (x, x*) with power gauges, zero violations")


def test_criterion_10_nontangential_collapse():
    sym = registry_symbol("tangential_cluster")
    M = MeasureM.from_symbol(sym)
    path = boundary_path(ApproachRegion.nontangential(1.0), 0.24, 1e-4, 12)
    vals = [localized_value(M, z, 0) for z in path]
    assert all(later <= earlier for earlier, later in zip(vals, vals[1:]))
    ratio = vals[-1] / vals[0]
    assert ratio < 1e-3
    _report(10, f"localized monotone along 12-point path, final/first = {ratio:.3e}")


def test_criterion_11_scan_determinism(tmp_path, capsys):
    argv = [
        "scan",
        "--symbol",
        "theorem_c_default",
        "--region",
        "nt:c=1",
        "--count",
        "40",
        "--levels",
        "2",
        "--m",
        "1",
    ]
    outs = []
    for jobs, name in ((1, "a.csv"), (4, "b.csv")):
        path = tmp_path / name
        assert main(argv + ["--jobs", str(jobs), "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[1]
    _report(11, f"--jobs 1 vs --jobs 4: byte-identical CSV ({len(outs[0])} bytes)")
