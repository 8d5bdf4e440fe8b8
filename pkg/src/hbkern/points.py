"""Polar-aware points and cancellation-free disk geometry.

Boundary-approach probes live at distances ``1 - |z|`` as small as 1e-15,
where forming ``1 - conj(w) * z`` in cartesian arithmetic loses every
significant digit.  All quantities the condition functionals need reduce to

    |1 - conj(w) z|^2 = (1 - |w||z|)^2 + 4 |w||z| sin^2((arg z - arg w)/2)

which is exact when the radial deficits ``1 - |w|`` and ``1 - |z|`` are known
directly: ``1 - |w||z| = u + v - u v`` for ``u = 1 - |w|``, ``v = 1 - |z|``.

:class:`DiskPoint` subclasses :class:`complex` so path points interoperate
with every evaluator, while carrying ``(1 - |z|, arg z)`` as primary data for
the stable formulas above.  Plain complex inputs are accepted everywhere and
fall back to ``1 - abs(z)`` / ``cmath.phase(z)``.
"""
from __future__ import annotations

import cmath
import math

__all__ = [
    "DiskPoint",
    "wrap_angle",
    "polar_parts",
    "one_minus_abs",
    "one_minus_abs2",
    "abs2_one_minus_conj_mul",
    "one_minus_conj_mul",
    "circle_point_minus",
]

_TAU = 2.0 * math.pi


def wrap_angle(theta: float) -> float:
    """Reduce an angle to the principal branch ``(-pi, pi]``."""
    w = math.remainder(theta, _TAU)
    if w <= -math.pi:
        w += _TAU
    return w


class DiskPoint(complex):
    """Point of the closed unit disk with exact polar data.

    Constructed from ``(one_minus_r, theta)`` rather than ``(re, im)`` so that
    the distance to the circle survives even when it underflows the cartesian
    representation.  Instances behave as ordinary complex numbers; arithmetic
    results decay to plain :class:`complex`.
    """

    __slots__ = ("one_minus_r", "theta")

    one_minus_r: float
    theta: float

    def __new__(cls, one_minus_r: float, theta: float) -> "DiskPoint":
        if one_minus_r < 0.0 or one_minus_r > 1.0:
            raise ValueError(f"1-|z| must lie in [0, 1], got {one_minus_r}")
        theta = wrap_angle(float(theta))
        r = 1.0 - one_minus_r
        obj = super().__new__(cls, r * math.cos(theta), r * math.sin(theta))
        obj.one_minus_r = float(one_minus_r)
        obj.theta = theta
        return obj

    @classmethod
    def from_complex(cls, z: complex) -> "DiskPoint":
        if isinstance(z, DiskPoint):
            return z
        omr = 1.0 - abs(z)
        if omr < 0.0:
            if omr < -1e-12:
                raise ValueError(f"point lies outside the closed disk: {z!r}")
            omr = 0.0
        return cls(omr, cmath.phase(z)) if z != 0 else cls(1.0, 0.0)

    def __reduce__(self):
        # complex's default reduction would feed (re, im) back into __new__,
        # which expects (1-|z|, theta); rebuild from the polar data instead.
        return (DiskPoint, (self.one_minus_r, self.theta))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DiskPoint(one_minus_r={self.one_minus_r!r}, theta={self.theta!r})"


def polar_parts(z: complex) -> tuple[float, float]:
    """Return ``(1 - |z|, arg z)``, exact for :class:`DiskPoint` inputs."""
    if isinstance(z, DiskPoint):
        return z.one_minus_r, z.theta
    if z == 0:
        return 1.0, 0.0
    return 1.0 - abs(z), cmath.phase(z)


def one_minus_abs(z: complex) -> float:
    return polar_parts(z)[0]


def one_minus_abs2(z: complex) -> float:
    """``1 - |z|^2`` without cancellation: ``(1-|z|)(2-(1-|z|))``."""
    omr = polar_parts(z)[0]
    return omr * (2.0 - omr)


def abs2_one_minus_conj_mul(
    w_one_minus_r: float, w_theta: float, z_one_minus_r: float, z_theta: float
) -> float:
    """``|1 - conj(w) z|^2`` from polar data of ``w`` and ``z``.

    With ``p = 1 - |w||z|`` and ``d = arg z - arg w``:

        |1 - conj(w) z|^2 = p^2 + 4 |w||z| sin^2(d/2).

    Both terms are nonnegative, so no digits cancel even for ``p ~ 1e-15``.
    """
    u, v = w_one_minus_r, z_one_minus_r
    p = u + v - u * v
    rr = (1.0 - u) * (1.0 - v)
    s = math.sin(0.5 * (z_theta - w_theta))
    return p * p + 4.0 * rr * s * s


def one_minus_conj_mul(
    w_one_minus_r: float, w_theta: float, z_one_minus_r: float, z_theta: float
) -> complex:
    """``1 - conj(w) z`` from polar data, cancellation-free.

    Writing ``R = |w||z|`` and ``d = arg z - arg w``:

        1 - R e^{id} = (1 - R) + 2 R sin^2(d/2) - i R sin(d).
    """
    u, v = w_one_minus_r, z_one_minus_r
    p = u + v - u * v
    rr = (1.0 - u) * (1.0 - v)
    d = z_theta - w_theta
    s = math.sin(0.5 * d)
    return complex(p + 2.0 * rr * s * s, -rr * math.sin(d))


def circle_point_minus(theta: float, z: complex) -> complex:
    """``e^{i theta} - z`` computed as ``e^{i theta} (1 - e^{-i theta} z)``."""
    omr, zt = polar_parts(z)
    return cmath.exp(1j * theta) * one_minus_conj_mul(0.0, theta, omr, zt)
