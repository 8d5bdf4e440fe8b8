"""Benchmark the compiled hot loops against the pure-NumPy fallback.

Times each kernel-level primitive on realistic workloads (tangential atom
families, dense scan batches) and prints a table with the speedup.  Run:

    python3 benchmarks/bench_hot.py [--repeats 5]

The two implementations are imported side by side, so this works regardless
of which one the package itself selected at import time.  If the compiled
extension is unavailable, the script reports fallback timings only.
"""
from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from hbkern._hot import fallback

try:
    from hbkern._hot import _core
except ImportError:  # pragma: no cover - benchmark is informational
    _core = None


def _atom_family(n: int) -> dict:
    xs = 0.25 ** np.arange(1, n + 1)
    return {
        "a_omr": xs**2,
        "a_theta": xs.copy(),
        "masses": xs**4,
        "a_re": (1 - xs**2) * np.cos(xs),
        "a_im": (1 - xs**2) * np.sin(xs),
    }


def _workloads() -> list[tuple[str, str, tuple, dict, int]]:
    fam30 = _atom_family(30)
    fam400 = _atom_family(400)
    z = dict(z_omr=1e-6, z_theta=1e-3)
    big_thetas = np.linspace(-np.pi, np.pi, 4096, endpoint=False)
    big_masses = np.full(4096, 1e-3)
    return [
        (
            "powered_atom_sum (30 atoms, m=0)",
            "powered_atom_sum",
            (fam30["a_omr"], fam30["a_theta"], fam30["masses"], z["z_omr"], z["z_theta"], 0),
            {},
            20000,
        ),
        (
            "powered_atom_sum (400 atoms, m=2)",
            "powered_atom_sum",
            (fam400["a_omr"], fam400["a_theta"], fam400["masses"], z["z_omr"], z["z_theta"], 2),
            {},
            5000,
        ),
        (
            "poisson_power_weights (4096 nodes)",
            "poisson_power_weights",
            (big_thetas, z["z_omr"], z["z_theta"], 1),
            {},
            2000,
        ),
        (
            "herglotz_atom_sum (4096 atoms)",
            "herglotz_atom_sum",
            (big_thetas, big_masses, z["z_omr"], z["z_theta"]),
            {},
            2000,
        ),
        (
            "cauchy_power_atom_sum (4096 atoms)",
            "cauchy_power_atom_sum",
            (big_thetas, big_masses, z["z_omr"], z["z_theta"], 2),
            {},
            2000,
        ),
        (
            "blaschke_norm_series_m0 (400 zeros)",
            "blaschke_norm_series_m0",
            (
                fam400["a_re"],
                fam400["a_im"],
                fam400["a_omr"],
                fam400["a_theta"],
                0.9,
                0.1,
                1 - abs(complex(0.9, 0.1)),
                float(np.angle(complex(0.9, 0.1))),
            ),
            {},
            5000,
        ),
    ]


def _time_call(fn, args, kwargs, loops: int, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(loops):
            fn(*args, **kwargs)
        best = min(best, (time.perf_counter() - start) / loops)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--scale", type=float, default=1.0, help="loop-count multiplier")
    args = parser.parse_args()

    rows = []
    for label, name, call_args, call_kwargs, loops in _workloads():
        loops = max(1, int(loops * args.scale))
        pure_fn = getattr(fallback, name)
        t_pure = _time_call(pure_fn, call_args, call_kwargs, loops, args.repeats)
        if _core is not None:
            comp_fn = getattr(_core, name)
            got_pure = pure_fn(*call_args, **call_kwargs)
            got_comp = comp_fn(*call_args, **call_kwargs)
            diff = np.max(np.abs(np.asarray(got_pure) - np.asarray(got_comp)))
            scale = max(1.0, float(np.max(np.abs(np.asarray(got_pure)))))
            assert diff / scale < 1e-12, f"{name}: implementations disagree ({diff})"
            t_comp = _time_call(comp_fn, call_args, call_kwargs, loops, args.repeats)
        else:
            t_comp = float("nan")
        rows.append((label, t_pure, t_comp))

    width = max(len(label) for label, *_ in rows)
    header = f"{'workload':<{width}}  {'pure (µs)':>10}  {'compiled (µs)':>13}  {'speedup':>7}"
    print(header)
    print("-" * len(header))
    for label, t_pure, t_comp in rows:
        if _core is None or not np.isfinite(t_comp):
            print(f"{label:<{width}}  {t_pure * 1e6:>10.2f}  {'n/a':>13}  {'n/a':>7}")
        else:
            print(
                f"{label:<{width}}  {t_pure * 1e6:>10.2f}  {t_comp * 1e6:>13.2f}  "
                f"{t_pure / t_comp:>6.1f}x"
            )
    if _core is None:
        print("\ncompiled extension not available; showing fallback timings only")
    if rows:
        med = statistics.median(
            t_pure / t_comp for _, t_pure, t_comp in rows if np.isfinite(t_comp)
        ) if _core is not None else float("nan")
        if np.isfinite(med):
            print(f"\nmedian speedup: {med:.1f}x (impl agreement checked to 1e-12)")


if __name__ == "__main__":
    main()
