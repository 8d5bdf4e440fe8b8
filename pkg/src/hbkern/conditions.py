"""Boundary-condition functionals of the symbol measure at ``zeta = 1``.

Every symbol carries a positive measure on the closed disk,

    M = sum_n (1 - |a_n|^2) delta_{a_n}  +  nu  +  (-log|b|) dm,

combining the Blaschke zeros (with kernel-mass weights), the singular atoms
and the outer density.  The order-``m`` boundary condition at 1 is the
finiteness of

    J_m(z) = integral dM(w) / |1 - conj(w) z|^{2m+2}

uniformly over an approach region; its localized variant restricts the
integral to the sector ``S_z`` / arc ``E_z`` attached to the probe point.
The complement is controlled by the sector estimate
``1/|1 - conj(w) z| <= 4/|1 - w|``, so boundedness questions concentrate in
the localized part (its collapse to 0 is what distinguishes non-tangential
cones from tangential regions).

Scans evaluate the functionals on nested families of boundary samples and
report sup trends plus heuristic limit verdicts; ``limit_probe`` grades any
value sequence for Cauchy behaviour.  All point evaluations run through the
cancellation-free polar forms of :mod:`hbkern.points`, so probes with
``1 - |z|`` near machine epsilon stay meaningful.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import _hot
from .errors import ContractError, DomainError, PoleError
from .kernels import KernelProbe, norm_sq_blaschke_series, norm_sq_fd, zero_free_norm_sq
from .points import DiskPoint, abs2_one_minus_conj_mul, polar_parts, wrap_angle
from .quadrature import QuadratureConfig, integrate_circle
from .regions import ApproachRegion, Arc, arc_E
from .symbols import OuterLogDensity, Symbol

__all__ = [
    "MeasureM",
    "PathSampler",
    "ScanReport",
    "LimitVerdict",
    "condition_value",
    "localized_value",
    "complement_value",
    "family_l1_bound",
    "sup_scan",
    "limit_probe",
]

_TAU = 2.0 * math.pi

#: Verdict thresholds shared by scans and the acceptance experiments:
#: sup growth below 10% across a density doubling counts as bounded, and a
#: localized trend ending below 1e-3 of its first value counts as collapsed.
SUP_GROWTH_THRESHOLD = 0.10
COLLAPSE_RATIO = 1e-3


# --------------------------------------------------------------------------
# the symbol measure
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MeasureM:
    """Positive measure on the closed disk driving the boundary conditions.

    ``disk_atoms`` are ``(point, mass)`` pairs inside the open disk,
    ``circle_atoms`` are ``(theta, mass)`` pairs on the circle and
    ``density`` contributes ``-log|b| dm >= 0``.
    """

    disk_atoms: tuple[tuple[complex, float], ...] = ()
    circle_atoms: tuple[tuple[float, float], ...] = ()
    density: OuterLogDensity = field(default_factory=OuterLogDensity.zero)

    def __post_init__(self) -> None:
        da = []
        for p, mass in self.disk_atoms:
            if not (mass > 0.0 and math.isfinite(mass)):
                raise ContractError(f"disk atom mass must be positive, got {mass}")
            omr, theta = polar_parts(p)
            if omr <= 0.0:
                raise ContractError(f"disk atom must lie in the open disk: {p!r}")
            da.append((omr, theta, mass))
        ca = sorted((wrap_angle(t), float(mass)) for t, mass in self.circle_atoms)
        for (t0, _), (t1, _) in zip(ca, ca[1:]):
            if t0 == t1:
                raise ContractError(f"duplicate circle atom at theta = {t0}")
        for _, mass in ca:
            if not (mass > 0.0 and math.isfinite(mass)):
                raise ContractError(f"circle atom mass must be positive, got {mass}")
        arrays = {
            "_da_omr": np.array([a[0] for a in da]),
            "_da_theta": np.array([a[1] for a in da]),
            "_da_mass": np.array([a[2] for a in da]),
            "_ca_theta": np.array([t for t, _ in ca]),
            "_ca_mass": np.array([mass for _, mass in ca]),
        }
        for name, arr in arrays.items():
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_symbol(cls, sym: Symbol) -> "MeasureM":
        disk = tuple(
            (a, float(polar_parts(a)[0] * (2.0 - polar_parts(a)[0])))
            for a in sym.blaschke.zeros
        )
        return cls(
            disk_atoms=disk,
            circle_atoms=sym.singular.atoms,
            density=sym.outer,
        )

    @property
    def n_disk(self) -> int:
        return len(self.disk_atoms)

    @property
    def n_circle(self) -> int:
        return len(self.circle_atoms)


# --------------------------------------------------------------------------
# point evaluations
# --------------------------------------------------------------------------


def _check_point(M: MeasureM, z: complex) -> tuple[float, float]:
    omr, zt = polar_parts(z)
    if omr < 0.0:
        raise DomainError("condition functionals are defined on the closed disk")
    if omr == 0.0:
        for t, _ in M.circle_atoms:
            if t == zt:
                raise PoleError(f"evaluation on the circle atom at theta = {t}")
    return omr, zt


def _arc_indicator(arc: Arc, thetas: np.ndarray) -> np.ndarray:
    span = arc.span()
    rel = np.remainder(np.asarray(thetas, dtype=float) - arc.lo, _TAU)
    return ((rel > 0.0) & (rel < span)).astype(float)


def _density_integral(
    M: MeasureM,
    omr: float,
    zt: float,
    m: int,
    quad: QuadratureConfig | None,
    arc: Arc | None = None,
    complement: bool = False,
) -> float:
    """``integral (-log|b|) / |1 - conj(zeta) z|^{2m+2} dm`` over the whole
    circle, an arc, or an arc complement (panels snap to the arc endpoints,
    so arc + complement telescopes to the full integral)."""
    if M.density.is_zero:
        return 0.0
    if arc is not None and arc.empty:
        if not complement:
            return 0.0
        arc = None  # complement of an empty arc is the whole circle
    breakpoints: tuple[float, ...] = ()
    if arc is not None:
        pieces = arc.intervals()
        breakpoints = tuple(e for piece in pieces for e in piece)

    def integrand(thetas: np.ndarray) -> np.ndarray:
        w = _hot.poisson_power_weights(np.ascontiguousarray(thetas), omr, zt, m)
        vals = -M.density.values(thetas) * w
        if arc is not None:
            ind = _arc_indicator(arc, thetas)
            vals = vals * ((1.0 - ind) if complement else ind)
        return vals

    res = integrate_circle(
        integrand,
        quad,
        centers=(0.0, zt) + M.density.centers(),
        breakpoints=breakpoints,
    )
    return res.value.real


def condition_value(
    M: MeasureM, z: complex, m: int, quad: QuadratureConfig | None = None
) -> float:
    """``J_m(z) = integral dM(w) / |1 - conj(w) z|^{2m+2}`` on the closed disk.

    ``|z| = 1`` is allowed away from circle atoms (the disk-atom sum stays
    finite because ``|1 - conj(a) z| >= 1 - |a| > 0``); landing exactly on a
    circle atom raises :class:`PoleError`, and a divergent density integral
    surfaces as the quadrature budget error.
    """
    if m < 0:
        raise ContractError(f"order must be >= 0, got m={m}")
    omr, zt = _check_point(M, z)
    total = 0.0
    if M.n_disk:
        total += _hot.powered_atom_sum(
            M._da_omr, M._da_theta, M._da_mass, omr, zt, m  # type: ignore[attr-defined]
        )
    if M.n_circle:
        total += _hot.powered_atom_sum(
            np.zeros(M.n_circle), M._ca_theta, M._ca_mass, omr, zt, m  # type: ignore[attr-defined]
        )
    total += _density_integral(M, omr, zt, m, quad)
    return total


def _restricted_atom_sum(
    omr_arr: np.ndarray,
    theta_arr: np.ndarray,
    mass_arr: np.ndarray,
    keep: np.ndarray,
    z_omr: float,
    z_theta: float,
    m: int,
) -> float:
    if not keep.any():
        return 0.0
    idx = np.flatnonzero(keep)
    return _hot.powered_atom_sum(
        np.ascontiguousarray(omr_arr[idx]),
        np.ascontiguousarray(theta_arr[idx]),
        np.ascontiguousarray(mass_arr[idx]),
        z_omr,
        z_theta,
        m,
    )


def localized_value(
    M: MeasureM, z: complex, m: int, quad: QuadratureConfig | None = None
) -> float:
    """The condition integral restricted to the sector ``S_z`` (disk part)
    and arc ``E_z`` (circle part); identically 0 for real ``z``, where the
    localization sets are empty."""
    if m < 0:
        raise ContractError(f"order must be >= 0, got m={m}")
    omr, zt = _check_point(M, z)
    if z == 0:
        return 0.0
    arc = arc_E(z)
    if arc.empty:
        return 0.0
    total = 0.0
    if M.n_disk:
        keep = _arc_indicator(arc, M._da_theta) > 0.0  # type: ignore[attr-defined]
        total += _restricted_atom_sum(
            M._da_omr, M._da_theta, M._da_mass, keep, omr, zt, m  # type: ignore[attr-defined]
        )
    if M.n_circle:
        keep = _arc_indicator(arc, M._ca_theta) > 0.0  # type: ignore[attr-defined]
        total += _restricted_atom_sum(
            np.zeros(M.n_circle), M._ca_theta, M._ca_mass, keep, omr, zt, m  # type: ignore[attr-defined]
        )
    total += _density_integral(M, omr, zt, m, quad, arc=arc)
    return total


def complement_value(
    M: MeasureM, z: complex, m: int, quad: QuadratureConfig | None = None
) -> float:
    """The condition integral over the complement of ``S_z`` and ``E_z``.

    ``localized_value + complement_value`` telescopes to ``condition_value``
    (shared arc breakpoints keep the quadrature panels aligned)."""
    if m < 0:
        raise ContractError(f"order must be >= 0, got m={m}")
    omr, zt = _check_point(M, z)
    if z == 0:
        return condition_value(M, z, m, quad)
    arc = arc_E(z)
    if arc.empty:
        return condition_value(M, z, m, quad)
    total = 0.0
    if M.n_disk:
        keep = _arc_indicator(arc, M._da_theta) == 0.0  # type: ignore[attr-defined]
        total += _restricted_atom_sum(
            M._da_omr, M._da_theta, M._da_mass, keep, omr, zt, m  # type: ignore[attr-defined]
        )
    if M.n_circle:
        keep = _arc_indicator(arc, M._ca_theta) == 0.0  # type: ignore[attr-defined]
        total += _restricted_atom_sum(
            np.zeros(M.n_circle), M._ca_theta, M._ca_mass, keep, omr, zt, m  # type: ignore[attr-defined]
        )
    total += _density_integral(M, omr, zt, m, quad, arc=arc, complement=True)
    return total


def _l1_norm_at(
    M: MeasureM, z: complex, m: int, quad: QuadratureConfig | None = None
) -> float:
    """L^1(M)-norm of ``w -> |1 - conj(w) z|^{-(2m+2)}`` by a generic scalar
    fold over the measure components.

    Mathematically identical to :func:`condition_value`; deliberately avoids
    the vectorized kernels so the two paths cross-check each other.
    """
    z_omr, z_theta = _check_point(M, z)
    power = m + 1
    total = 0.0
    for p, mass in M.disk_atoms:
        w_omr, w_theta = polar_parts(p)
        d2 = abs2_one_minus_conj_mul(w_omr, w_theta, z_omr, z_theta)
        total += mass / d2**power
    for t, mass in M.circle_atoms:
        d2 = abs2_one_minus_conj_mul(0.0, t, z_omr, z_theta)
        total += mass / d2**power
    if not M.density.is_zero:

        def integrand(thetas: np.ndarray) -> np.ndarray:
            p = z_omr
            rr = 1.0 - z_omr
            s = np.sin(0.5 * (z_theta - thetas))
            d2 = p * p + 4.0 * rr * s * s
            return -M.density.values(thetas) / d2**power

        total += integrate_circle(
            integrand, quad, centers=(0.0, z_theta) + M.density.centers()
        ).value.real
    return total


# --------------------------------------------------------------------------
# samplers and scans
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PathSampler:
    """Nested boundary samples of an approach region, ordered toward 1.

    Level 0 places ``count`` geometrically spaced points on the region's
    boundary curve between angles ``x_start`` and ``x_end`` (descending, so
    successive points approach the boundary point 1).  Each further level
    doubles the density by inserting log-midpoints — levels are nested, so
    per-level sups can only grow — and, when ``extend_factor > 1``, also
    extends the path by a geometric tail down to ``x_end / extend_factor``
    per level.  Extension is what exposes unbounded growth; densification
    alone stabilises finite sups.
    """

    x_start: float = 0.24
    x_end: float = 1e-4
    count: int = 64
    levels: int = 2
    extend_factor: float = 1.0
    side: str = "upper"
    inward: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 < self.x_end < self.x_start):
            raise ContractError("need 0 < x_end < x_start")
        if self.count < 2 or self.levels < 1:
            raise ContractError("need count >= 2 and levels >= 1")
        if self.extend_factor < 1.0:
            raise ContractError("extend_factor must be >= 1")
        if self.side not in ("upper", "lower"):
            raise ContractError(f"side must be 'upper' or 'lower', got {self.side!r}")
        if self.inward < 0.0:
            raise ContractError("inward shift must be >= 0")

    def level_angles(self) -> list[np.ndarray]:
        logs = list(
            np.linspace(math.log(self.x_start), math.log(self.x_end), self.count)
        )
        out = [np.exp(np.array(logs))]
        for _ in range(1, self.levels):
            mids = [(a + b) / 2.0 for a, b in zip(logs, logs[1:])]
            logs = sorted(logs + mids, reverse=True)
            if self.extend_factor > 1.0:
                lo_old = logs[-1]
                lo_new = lo_old - math.log(self.extend_factor)
                step = abs(logs[-2] - logs[-1])
                tail = list(np.arange(lo_old - step, lo_new - 1e-12, -step))
                if not tail or tail[-1] > lo_new:
                    tail.append(lo_new)
                logs = logs + tail
            out.append(np.exp(np.array(sorted(logs, reverse=True))))
        return out

    def level_points(self, region: ApproachRegion) -> list[list[DiskPoint]]:
        sgn = 1.0 if self.side == "upper" else -1.0
        out = []
        for angles in self.level_angles():
            pts = [
                DiskPoint(region.gauge(float(x)) + self.inward, sgn * float(x))
                for x in angles
            ]
            out.append(pts)
        return out


@dataclass(frozen=True)
class ScanReport:
    """Scan outcome: per-level sups, trends along the finest path, verdicts.

    ``sup_value`` is the condition sup over the finest (largest) sample
    level; nesting makes the per-level sups non-decreasing, so the
    ``sup_bounded`` verdict — finest sup within ``threshold`` relative growth
    of the previous level's — cannot be gamed by resampling.
    ``localized_to_zero`` and ``limit_exists`` grade the finest-level value
    sequences along the path toward 1; all three are heuristic verdicts and
    carry the thresholds and evidence they were graded with.
    """

    m: int
    level_sizes: tuple[int, ...]
    sup_condition: tuple[float, ...]
    sup_localized: tuple[float, ...]
    sup_value: float
    sup_bounded: bool
    growth_last: float
    threshold: float
    trend_condition: tuple[float, ...]
    trend_localized: tuple[float, ...]
    localized_to_zero: bool
    collapse_ratio: float
    limit_exists: Optional[bool]
    probes: tuple[KernelProbe, ...]


def _probe_point(
    args: tuple[MeasureM, Optional[Symbol], complex, int, Optional[QuadratureConfig]]
) -> KernelProbe:
    M, sym, z, m, quad = args
    cond = condition_value(M, z, m, quad)
    loc = localized_value(M, z, m, quad)
    # Keep z as given: polar-carrying points preserve 1 - |z| exactly for
    # report columns even when it sits below machine epsilon.
    if sym is None:
        return KernelProbe(z=z, m=m, condition_value=cond, localized_value=loc)
    fd = norm_sq_fd(sym, z, m, quad)
    series = (
        norm_sq_blaschke_series(sym.blaschke, z, m) if sym.is_blaschke_only else None
    )
    zf = zero_free_norm_sq(sym, z, quad) if (sym.is_zero_free and m == 0) else None
    return KernelProbe(
        z=z,
        m=m,
        norm_sq_fd=fd.value,
        fd_error_est=fd.error_estimate,
        norm_sq_series=series,
        norm_sq_zero_free=zf,
        condition_value=cond,
        localized_value=loc,
        warning=fd.warning,
    )


def probe_point(
    M: MeasureM,
    z: complex,
    m: int,
    *,
    sym: Optional[Symbol] = None,
    quad: Optional[QuadratureConfig] = None,
) -> KernelProbe:
    """Evaluate every applicable quantity at one point.

    Always fills the condition and localized columns from ``M``; when ``sym``
    is given adds the finite-difference norm (with its error estimate), the
    exact series norm for pure Blaschke symbols, and the closed-form norm for
    zero-free symbols at ``m = 0``.
    """
    return _probe_point((M, sym, z, m, quad))


def _condition_at(
    args: tuple[MeasureM, complex, int, Optional[QuadratureConfig]]
) -> float:
    M, z, m, quad = args
    return condition_value(M, z, m, quad)


def _localized_at(
    args: tuple[MeasureM, complex, int, Optional[QuadratureConfig]]
) -> float:
    M, z, m, quad = args
    return localized_value(M, z, m, quad)


def sup_scan(
    M: MeasureM,
    region: ApproachRegion,
    m: int,
    sampler: PathSampler,
    quad: QuadratureConfig | None = None,
    sym: Symbol | None = None,
    map_fn: Callable = map,
    threshold: float = SUP_GROWTH_THRESHOLD,
) -> ScanReport:
    """Evaluate the condition functionals over nested boundary samples.

    Coarser levels contribute only their sups; the finest level also yields
    full per-point probes (with kernel norms when ``sym`` is given: FD
    always, series/zero-free when the factorization allows) and the value
    trends along the path.  ``map_fn`` lets callers fan the independent
    point evaluations out to a process pool; results are reduced in path
    order, so the report is identical for any pool size.
    """
    levels = sampler.level_points(region)
    sup_cond: list[float] = []
    sup_loc: list[float] = []
    # Coarser levels need only the sups; compute full probes on the finest.
    for pts in levels[:-1]:
        vals = list(map_fn(_condition_at, [(M, z, m, quad) for z in pts]))
        locs = list(map_fn(_localized_at, [(M, z, m, quad) for z in pts]))
        sup_cond.append(max(vals))
        sup_loc.append(max(locs))
    finest = levels[-1]
    probes = tuple(map_fn(_probe_point, [(M, sym, z, m, quad) for z in finest]))
    trend_cond = tuple(p.condition_value for p in probes)
    trend_loc = tuple(p.localized_value for p in probes)
    sup_cond.append(max(trend_cond))
    sup_loc.append(max(trend_loc))
    if len(sup_cond) >= 2 and sup_cond[-2] > 0.0:
        growth = (sup_cond[-1] - sup_cond[-2]) / sup_cond[-2]
    else:
        growth = 0.0 if len(sup_cond) < 2 else math.inf
    first_loc, last_loc = trend_loc[0], trend_loc[-1]
    collapsed = last_loc <= COLLAPSE_RATIO * first_loc or (
        first_loc == 0.0 and last_loc == 0.0
    )
    limit_exists: Optional[bool] = None
    if len(trend_cond) >= 6:
        limit_exists = limit_probe(trend_cond).converged
    return ScanReport(
        m=m,
        level_sizes=tuple(len(p) for p in levels),
        sup_condition=tuple(sup_cond),
        sup_localized=tuple(sup_loc),
        sup_value=sup_cond[-1],
        sup_bounded=growth < threshold,
        growth_last=growth,
        threshold=threshold,
        trend_condition=trend_cond,
        trend_localized=trend_loc,
        localized_to_zero=collapsed,
        collapse_ratio=COLLAPSE_RATIO,
        limit_exists=limit_exists,
        probes=probes,
    )


def family_l1_bound(
    M: MeasureM,
    region: ApproachRegion,
    m: int,
    sampler: PathSampler,
    quad: QuadratureConfig | None = None,
) -> float:
    """Sup over the sampled region of the L^1(M)-norms of the kernel family
    ``w -> (1 - conj(w) z)^{-(m+1)}`` (squared norms, matching the condition
    functional).

    By definition this coincides with the :func:`sup_scan` condition sup
    over the same samples; it is computed by an independent scalar fold so
    the two paths cross-check each other at full precision.
    """
    finest = sampler.level_points(region)[-1]
    return max(_l1_norm_at(M, z, m, quad) for z in finest)


# --------------------------------------------------------------------------
# limit grading
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class LimitVerdict:
    converged: bool
    estimate: complex
    diffs: tuple[float, ...]


def limit_probe(
    values: Sequence[complex], rel_tol: float = 1e-3, decay: float = 0.9
) -> LimitVerdict:
    """Grade a sequence of path values for convergence (heuristic verdict).

    Requires at least 6 values.  Converged means the last three successive
    absolute differences each decay by a factor <= ``decay`` (zero diffs
    count as decayed) and the final difference is below
    ``rel_tol * (1 + |last value|)``.  The estimate is the last value and
    the full difference sequence is returned as evidence.
    """
    if len(values) < 6:
        raise ContractError(f"limit_probe needs >= 6 values, got {len(values)}")
    vals = [complex(v) for v in values]
    diffs = tuple(abs(b - a) for a, b in zip(vals, vals[1:]))
    d1, d2, d3 = diffs[-3], diffs[-2], diffs[-1]
    decays = (d2 <= decay * d1 or d2 == 0.0) and (d3 <= decay * d2 or d3 == 0.0)
    small = d3 < rel_tol * (1.0 + abs(vals[-1]))
    return LimitVerdict(converged=bool(decays and small), estimate=vals[-1], diffs=diffs)
