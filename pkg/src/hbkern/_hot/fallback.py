"""Pure-NumPy implementations of the accelerated inner loops.

Semantics must match ``_core.pyx`` exactly: the test suite cross-checks both
implementations on random inputs, and scans must produce identical report
bytes whichever one is active.  Every routine works from polar data
``(1 - |.|, arg .)`` so that points within 1e-15 of the unit circle keep full
relative accuracy (see :mod:`hbkern.points` for the identities used).
"""
from __future__ import annotations

import numpy as np

__all__ = [
    "IMPL",
    "powered_atom_sum",
    "poisson_power_weights",
    "herglotz_atom_sum",
    "cauchy_power_atom_sum",
    "blaschke_norm_series_m0",
]

IMPL = "numpy"


def _abs2_one_minus_conj(a_omr, a_theta, z_omr: float, z_theta: float):
    """Vectorised ``|1 - conj(a) z|^2`` from radial deficits and angles."""
    p = a_omr + z_omr - a_omr * z_omr
    rr = (1.0 - a_omr) * (1.0 - z_omr)
    s = np.sin(0.5 * (z_theta - a_theta))
    return p * p + 4.0 * rr * s * s


def powered_atom_sum(
    a_omr: np.ndarray,
    a_theta: np.ndarray,
    masses: np.ndarray,
    z_omr: float,
    z_theta: float,
    m: int,
) -> float:
    """``sum_i masses_i / |1 - conj(a_i) z|^(2m+2)``.

    Covers disk atoms (``a_omr > 0``) and circle atoms (``a_omr == 0``) alike.
    """
    d2 = _abs2_one_minus_conj(a_omr, a_theta, z_omr, z_theta)
    return float(np.sum(masses / d2 ** (m + 1)))


def poisson_power_weights(
    thetas: np.ndarray, z_omr: float, z_theta: float, m: int
) -> np.ndarray:
    """``1 / |1 - e^{-i theta} z|^(2m+2)`` for an array of circle angles."""
    d2 = _abs2_one_minus_conj(0.0, thetas, z_omr, z_theta)
    return 1.0 / d2 ** (m + 1)


def _circle_minus_z(thetas: np.ndarray, z_omr: float, z_theta: float) -> np.ndarray:
    """``e^{i theta} - z`` evaluated as ``e^{i theta} (1 - e^{-i theta} z)``."""
    r = 1.0 - z_omr
    d = z_theta - thetas
    s = np.sin(0.5 * d)
    one_minus = z_omr + 2.0 * r * s * s - 1j * r * np.sin(d)
    return np.exp(1j * thetas) * one_minus


def herglotz_atom_sum(
    thetas: np.ndarray, masses: np.ndarray, z_omr: float, z_theta: float
) -> complex:
    """``sum_k masses_k (zeta_k + z) / (zeta_k - z)`` for ``zeta_k = e^{i theta_k}``."""
    zeta = np.exp(1j * thetas)
    r = 1.0 - z_omr
    z = r * complex(np.cos(z_theta), np.sin(z_theta))
    denom = _circle_minus_z(thetas, z_omr, z_theta)
    return complex(np.sum(masses * (zeta + z) / denom))


def cauchy_power_atom_sum(
    thetas: np.ndarray, masses: np.ndarray, z_omr: float, z_theta: float, rpow: int
) -> complex:
    """``sum_k masses_k * 2 zeta_k / (zeta_k - z)^rpow``."""
    zeta = np.exp(1j * thetas)
    denom = _circle_minus_z(thetas, z_omr, z_theta) ** rpow
    return complex(np.sum(masses * 2.0 * zeta / denom))


def blaschke_norm_series_m0(
    a_re: np.ndarray,
    a_im: np.ndarray,
    a_omr: np.ndarray,
    a_theta: np.ndarray,
    z_re: float,
    z_im: float,
    z_omr: float,
    z_theta: float,
) -> float:
    """Kernel-norm series of a finite Blaschke product at order zero:

        sum_j |b_{j-1}(z)|^2 (1 - |a_j|^2) / |1 - conj(a_j) z|^2

    where ``b_j`` is the product of the first ``j`` factors.
    """
    z = complex(z_re, z_im)
    a = a_re + 1j * a_im
    # rescale by the larger component so |a|/a keeps modulus 1 even for
    # denormal zeros (squared components underflow below ~1e-160); divide
    # component-wise — complex/real division would form an infinite 1/k
    k = np.where(np.maximum(np.abs(a_re), np.abs(a_im)) > 0.0,
                 np.maximum(np.abs(a_re), np.abs(a_im)), 1.0)
    s = (a_re / k) + 1j * (a_im / k)
    sign = np.where(s != 0.0, np.abs(s) / np.where(s == 0, 1.0, s), -1.0)
    factors = sign * (a - z) / (1.0 - np.conj(a) * z)
    prefix_sq = np.concatenate(([1.0], np.cumprod(np.abs(factors) ** 2)[:-1]))
    mass = a_omr * (2.0 - a_omr)  # 1 - |a|^2 without cancellation
    d2 = _abs2_one_minus_conj(a_omr, a_theta, z_omr, z_theta)
    return float(np.sum(prefix_sq * mass / d2))
