"""Approach regions, localization arcs and the sector estimate at ``zeta = 1``.

Two families of regions control how probe points approach the boundary point
``1``:

    Gamma(c):    1 - |z| > c |arg z|      non-tangential cone, c > 0
    Omega_rho:   1 - |z| > rho(|arg z|)   tangential whenever rho(x)/x -> 0

``rho`` comes from a small registry: ``power`` (``rho(x) = c x^gamma``,
``gamma >= 1``) and ``table`` (monotone samples, linear interpolation).

Localization near 1 attaches to every ``z`` with ``arg z != 0`` an open
circle arc and the sector over it:

    E_z = { e^{it} : t between arg(z)/2 and 2 arg(z) }     (reflected for
    S_z = { r e^{it} : 0 < r <= 1, e^{it} in E_z }          negative arg z)

For ``w`` outside ``S_z`` and ``E_z`` the kernel denominator is controlled by
the boundary distance of ``w`` alone:

    1 / |1 - conj(w) z|  <=  4 / |1 - w|,

and points on the boundary curve of ``Omega_rho`` stay uniformly far from
boundary arcs further out: ``2 |e^{i x*} - z| >= rho(x*)`` for
``z = (1 - rho(x)) e^{i x}``, ``0 < x < x*``, in the range where the slope of
``rho`` stays below 1/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, DomainError
from .points import DiskPoint, abs2_one_minus_conj_mul, polar_parts, wrap_angle

__all__ = [
    "RhoFunction",
    "ApproachRegion",
    "Arc",
    "InequalityCheck",
    "contains",
    "boundary_path",
    "radial_path",
    "arc_E",
    "in_sector_S",
    "estimate_check",
    "calc_lemma_check",
    "parse_region",
    "load_rho_table",
]

_TAU = 2.0 * math.pi


# --------------------------------------------------------------------------
# rho registry
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RhoFunction:
    """Boundary-gauge function ``rho: [0, pi] -> [0, 1)`` with ``rho(0) = 0``.

    ``power``: ``rho(x) = c x^gamma`` with ``c > 0`` and ``gamma >= 1``.
    ``table``: linear interpolation of monotone samples ``(x_i, rho_i)``
    starting at ``(0, 0)``; constant extrapolation beyond the last sample.
    """

    kind: str
    c: float = 1.0
    gamma: float = 1.0
    xs: tuple[float, ...] = ()
    values: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.kind == "power":
            if self.c <= 0.0:
                raise ContractError(f"power rho needs c > 0, got c={self.c}")
            if self.gamma < 1.0:
                raise ContractError(f"power rho needs gamma >= 1, got gamma={self.gamma}")
        elif self.kind == "table":
            xs, vals = self.xs, self.values
            if len(xs) != len(vals) or len(xs) < 2:
                raise ContractError("table rho needs >= 2 samples of equal length")
            if xs[0] != 0.0 or vals[0] != 0.0:
                raise ContractError("table rho must start at (0, 0)")
            if any(x1 <= x0 for x0, x1 in zip(xs, xs[1:])):
                raise ContractError("table rho abscissae must be strictly increasing")
            if any(v1 < v0 for v0, v1 in zip(vals, vals[1:])):
                raise ContractError("table rho values must be non-decreasing")
            if any(v < 0.0 for v in vals):
                raise ContractError("table rho values must be non-negative")
        else:
            raise ContractError(f"unknown rho kind {self.kind!r} (expected power|table)")

    @classmethod
    def power(cls, c: float, gamma: float) -> "RhoFunction":
        return cls(kind="power", c=float(c), gamma=float(gamma))

    @classmethod
    def table(cls, xs, values) -> "RhoFunction":
        return cls(
            kind="table",
            xs=tuple(float(x) for x in xs),
            values=tuple(float(v) for v in values),
        )

    def __call__(self, x: float) -> float:
        if x < 0.0:
            raise DomainError(f"rho is defined for x >= 0, got {x}")
        if self.kind == "power":
            return self.c * x**self.gamma
        return float(np.interp(x, self.xs, self.values))

    def max_slope(self, x_hi: float) -> float:
        """Largest slope of ``rho`` on ``(0, x_hi]`` (exact for the registry)."""
        if self.kind == "power":
            # c * gamma * x^(gamma-1) is non-decreasing for gamma >= 1.
            return self.c * self.gamma * x_hi ** (self.gamma - 1.0)
        slope = 0.0
        for x0, x1, v0, v1 in zip(self.xs, self.xs[1:], self.values, self.values[1:]):
            if x0 >= x_hi:
                break
            slope = max(slope, (v1 - v0) / (x1 - x0))
        return slope

    def is_tangential(self) -> bool:
        """True when ``rho(x)/x -> 0`` at ``0`` (slope vanishing at the origin)."""
        if self.kind == "power":
            return self.gamma > 1.0
        first = (self.values[1] - self.values[0]) / (self.xs[1] - self.xs[0])
        last = (self.values[-1] - self.values[-2]) / (self.xs[-1] - self.xs[-2])
        return first == 0.0 or first < 0.5 * last


# --------------------------------------------------------------------------
# approach regions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ApproachRegion:
    """Approach region anchored at the boundary point 1.

    ``kind="nt"`` is the cone ``Gamma(c)``; ``kind="rho"`` is ``Omega_rho``.
    """

    kind: str
    c: float = 1.0
    rho: RhoFunction | None = None

    def __post_init__(self) -> None:
        if self.kind == "nt":
            if self.c <= 0.0:
                raise ContractError(f"Gamma(c) needs c > 0, got c={self.c}")
        elif self.kind == "rho":
            if self.rho is None:
                raise ContractError("Omega_rho region needs a rho function")
        else:
            raise ContractError(f"unknown region kind {self.kind!r} (expected nt|rho)")

    @classmethod
    def nontangential(cls, c: float = 1.0) -> "ApproachRegion":
        return cls(kind="nt", c=float(c))

    @classmethod
    def from_rho(cls, rho: RhoFunction) -> "ApproachRegion":
        return cls(kind="rho", rho=rho)

    def gauge(self, x: float) -> float:
        """The boundary gauge: ``c x`` for cones, ``rho(x)`` otherwise."""
        if self.kind == "nt":
            return self.c * x
        assert self.rho is not None
        return self.rho(x)


def contains(region: ApproachRegion, z: complex) -> bool:
    """Strict membership ``1 - |z| > gauge(|arg z|)``."""
    omr, theta = polar_parts(z)
    return omr > region.gauge(abs(theta))


def boundary_path(
    region: ApproachRegion,
    x_start: float,
    x_end: float,
    count: int,
    side: str = "upper",
    inward: float = 0.0,
) -> list[DiskPoint]:
    """Geometrically spaced points on the boundary curve of the region.

    Returns ``z_k = (1 - gauge(x_k) - inward) e^{+- i x_k}`` for ``x_k``
    descending geometrically from ``x_start`` to ``x_end``.  ``inward`` steps
    the points radially into the region (used by probes whose integrands are
    defined only in the open disk).
    """
    if not (0.0 < x_end < x_start < 0.5 * math.pi):
        raise ContractError(
            f"need 0 < x_end < x_start < pi/2, got x_start={x_start}, x_end={x_end}"
        )
    if count < 2:
        raise ContractError(f"need count >= 2, got {count}")
    if side not in ("upper", "lower"):
        raise ContractError(f"side must be 'upper' or 'lower', got {side!r}")
    if region.gauge(x_start) + inward >= 1.0:
        raise ContractError(
            f"gauge({x_start}) = {region.gauge(x_start)} leaves the unit disk"
        )
    sgn = 1.0 if side == "upper" else -1.0
    ratio = x_end / x_start
    pts = []
    for k in range(count):
        x = x_start * ratio ** (k / (count - 1))
        pts.append(DiskPoint(region.gauge(x) + inward, sgn * x))
    return pts


def radial_path(r_start: float, r_end: float, count: int) -> list[DiskPoint]:
    """Real points ``r_k`` with ``1 - r_k`` geometrically spaced.

    ``radial_path(0.9, 0.9999, 4)`` gives ``0.9, 0.99, 0.999, 0.9999``.
    """
    if not (0.0 <= r_start < r_end < 1.0):
        raise ContractError(
            f"need 0 <= r_start < r_end < 1, got r_start={r_start}, r_end={r_end}"
        )
    if count < 2:
        raise ContractError(f"need count >= 2, got {count}")
    omr_start = 1.0 - r_start
    omr_end = 1.0 - r_end
    ratio = omr_end / omr_start
    return [DiskPoint(omr_start * ratio ** (k / (count - 1)), 0.0) for k in range(count)]


# --------------------------------------------------------------------------
# localization arcs and sectors
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Arc:
    """Open arc ``{e^{it} : lo < t < hi}`` on the unit circle.

    ``hi`` may exceed ``pi`` (the arc then wraps through the negative real
    axis); the span is always < 2 pi.  ``intervals`` exposes the arc as one or
    two sub-intervals of ``(-pi, pi]`` for quadrature splitting.
    """

    lo: float = 0.0
    hi: float = 0.0
    empty: bool = True

    def span(self) -> float:
        return 0.0 if self.empty else self.hi - self.lo

    def contains(self, t: float) -> bool:
        if self.empty:
            return False
        return 0.0 < (t - self.lo) % _TAU < self.hi - self.lo

    def intervals(self) -> tuple[tuple[float, float], ...]:
        if self.empty:
            return ()
        lo = wrap_angle(self.lo)
        hi = lo + (self.hi - self.lo)
        if hi <= math.pi:
            return ((lo, hi),)
        return ((-math.pi, hi - _TAU), (lo, math.pi))


def arc_E(z: complex) -> Arc:
    """Localization arc of ``z``: angles between ``arg(z)/2`` and ``2 arg z``.

    Empty for real ``z`` (no localization on the axis of approach) and for
    ``arg z = pi``; undefined at ``z = 0``.
    """
    if z == 0:
        raise DomainError("arc_E is undefined at z = 0")
    _, theta = polar_parts(z)
    if theta == 0.0 or abs(theta) >= math.pi:
        return Arc()
    if theta > 0.0:
        return Arc(0.5 * theta, 2.0 * theta, empty=False)
    return Arc(2.0 * theta, 0.5 * theta, empty=False)


def in_sector_S(z: complex, w: complex) -> bool:
    """True iff ``w`` lies in the open sector over ``E_z`` (any radius > 0)."""
    if w == 0:
        return False
    return arc_E(z).contains(polar_parts(w)[1])


# --------------------------------------------------------------------------
# inequality probes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class InequalityCheck:
    lhs: float
    rhs: float
    holds: bool
    note: str = ""


def estimate_check(z: complex, w: complex) -> InequalityCheck:
    """Check ``1/|1 - conj(w) z| <= 4/|1 - w|`` for admissible ``(z, w)``.

    Admissible means ``z`` in the open disk, ``w`` in the closed disk and
    ``w`` outside ``S_z`` and ``E_z``; inadmissible pairs raise
    :class:`ContractError`.  At ``w = 1`` the right side is infinite and the
    check holds vacuously (flagged in ``note``).
    """
    z_omr, z_theta = polar_parts(z)
    w_omr, w_theta = polar_parts(w)
    if z_omr <= 0.0:
        raise ContractError(f"z must lie in the open disk, got |z| = {1.0 - z_omr}")
    if w_omr < 0.0:
        raise ContractError(f"w must lie in the closed disk, got |w| = {1.0 - w_omr}")
    if z != 0 and w != 0 and arc_E(z).contains(w_theta):
        raise ContractError("w lies in the localization sector/arc of z")
    lhs = 1.0 / math.sqrt(abs2_one_minus_conj_mul(w_omr, w_theta, z_omr, z_theta))
    dist_w = math.sqrt(abs2_one_minus_conj_mul(w_omr, w_theta, 0.0, 0.0))
    if dist_w == 0.0:
        return InequalityCheck(lhs, math.inf, True, note="rhs infinite at w = 1")
    return InequalityCheck(lhs, 4.0 / dist_w, lhs <= 4.0 / dist_w)


def calc_lemma_check(rho: RhoFunction, x: float, x_star: float) -> InequalityCheck:
    """Check ``2 |e^{i x*} - z| >= rho(x*)`` for ``z = (1 - rho(x)) e^{i x}``.

    Requires ``0 < x < x_star`` and the slope of ``rho`` below 1/2 up to
    ``x_star`` (the smallness regime in which the bound is asserted); a
    steeper gauge raises :class:`ContractError` with the measured slope.
    """
    if not (0.0 < x < x_star):
        raise ContractError(f"need 0 < x < x_star, got x={x}, x_star={x_star}")
    slope = rho.max_slope(x_star)
    if not slope < 0.5:
        raise ContractError(
            f"rho slope {slope:.6g} on (0, {x_star}] is not below 1/2; "
            "the two-point bound is asserted only in that regime"
        )
    rx = rho(x)
    if rx >= 1.0:
        raise ContractError(f"rho({x}) = {rx} leaves the unit disk")
    # |e^{i x*} - (1 - rho) e^{i x}|^2 = rho^2 + 4 (1 - rho) sin^2((x* - x)/2)
    s = math.sin(0.5 * (x_star - x))
    lhs = 2.0 * math.sqrt(rx * rx + 4.0 * (1.0 - rx) * s * s)
    rhs = rho(x_star)
    return InequalityCheck(lhs, rhs, lhs >= rhs)


# --------------------------------------------------------------------------
# region spec strings
# --------------------------------------------------------------------------


def load_rho_table(path: str) -> RhoFunction:
    """Load a table rho from a two-column text file (``x,rho`` per line)."""
    xs: list[float] = []
    vals: list[float] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                raise ContractError(f"bad rho table line: {line!r}")
            try:
                x, v = float(parts[0]), float(parts[1])
            except ValueError:
                if xs:
                    raise ContractError(f"bad rho table line: {line!r}") from None
                continue  # tolerate a header line
            xs.append(x)
            vals.append(v)
    return RhoFunction.table(xs, vals)


def parse_region(spec: str) -> ApproachRegion:
    """Parse a region spec string.

    Formats: ``nt:c=<float>``, ``rho:power:c=<float>,gamma=<float>``,
    ``rho:table:<path>``.
    """
    parts = spec.split(":")
    try:
        if parts[0] == "nt" and len(parts) == 2:
            kv = _parse_kv(parts[1])
            return ApproachRegion.nontangential(kv["c"])
        if parts[0] == "rho" and len(parts) >= 3:
            if parts[1] == "power":
                kv = _parse_kv(parts[2])
                return ApproachRegion.from_rho(RhoFunction.power(kv["c"], kv["gamma"]))
            if parts[1] == "table":
                return ApproachRegion.from_rho(load_rho_table(":".join(parts[2:])))
    except KeyError as exc:
        raise ContractError(f"region spec {spec!r} is missing key {exc}") from None
    raise ContractError(
        f"unrecognized region spec {spec!r} "
        "(expected nt:c=..., rho:power:c=...,gamma=..., or rho:table:<path>)"
    )


def _parse_kv(text: str) -> dict[str, float]:
    out: dict[str, float] = {}
    for chunk in text.split(","):
        if not chunk:
            continue
        key, _, value = chunk.partition("=")
        out[key.strip()] = float(value)
    return out
