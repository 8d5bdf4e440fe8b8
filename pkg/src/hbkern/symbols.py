"""Symbols in the closed unit ball of H-infinity, in factored form.

A symbol is represented by its inner-outer data

    b = B . S_nu . b_o

    B(z)   = prod_n (|a_n|/a_n) (a_n - z) / (1 - conj(a_n) z)   (|a_n| < 1)
    S(z)   = exp( - sum_k m_k (zeta_k + z) / (zeta_k - z) )     (m_k > 0)
    b_o(z) = exp( integral (zeta + z)/(zeta - z) log|b(zeta)| dm(zeta) )

with the convention ``|a_n|/a_n = -1`` at ``a_n = 0`` (the factor is then
plainly ``z``).  The outer part is specified by its boundary log-modulus
``log|b| <= 0``, drawn from a small registry of densities that carry exact
integral certificates.

Derivatives come from the logarithmic derivative: with the positive measure
``dmu = dnu - log|b| dm`` on the circle,

    b'(z)/b(z) = sum_n (1 - |a_n|^2) / ((z - a_n)(1 - conj(a_n) z))
                 - integral 2 zeta dmu(zeta) / (zeta - z)^2

and ``b^(j+1) = sum_{i<=j} C(j,i) L^(j-i) b^(i)`` where ``L = b'/b``.  Within
1e-6 of a Blaschke zero the recursion degrades and a 16-point Cauchy-integral
fallback on a small circle is used instead.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Union

import numpy as np

from . import _hot
from .errors import ContractError, DomainError, PoleError
from .points import DiskPoint, one_minus_abs2, polar_parts, wrap_angle
from .quadrature import QuadratureConfig, integrate_circle
from .regions import RhoFunction

__all__ = [
    "BlaschkeData",
    "SingularAtoms",
    "ConstantDensity",
    "PowerCuspDensity",
    "TableDensity",
    "OuterLogDensity",
    "Symbol",
    "eval_blaschke",
    "eval_singular_inner",
    "eval_outer",
    "eval_symbol",
    "neg_log_modulus",
    "boundary_log_modulus",
    "log_derivative",
    "eval_derivatives",
    "blaschke_prefix_derivatives",
    "product_symbol",
    "theorem_c_zero_family",
    "tangential_cluster_zero_family",
    "symbol_from_spec",
]

_BLASCHKE_FALLBACK_DIST = 1e-6
_CAUCHY_POINTS = 16


# --------------------------------------------------------------------------
# Blaschke data
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BlaschkeData:
    """Finite Blaschke zero list (with multiplicity), plus a declared tail.

    Infinite products enter as truncations: ``tail_bound`` records the
    remaining ``sum (1 - |a_n|)`` beyond the kept zeros, and the relative
    evaluation error at ``z`` is bounded by ``2 tail_bound / (1 - |z|)``
    (from ``|1 - factor| <= 2 (1 - |a|) / (1 - |z|)``).  Family constructors
    choose the truncation so this stays below ``truncation_tolerance`` on the
    intended range of ``z``.
    """

    zeros: tuple[complex, ...]
    truncation_tolerance: float = 1e-12
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        zs = tuple(z if isinstance(z, DiskPoint) else complex(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zs)
        omr = np.empty(len(zs))
        theta = np.empty(len(zs))
        for i, a in enumerate(zs):
            # Judge |a| < 1 on the polar data: points carrying an exact
            # radial deficit below machine epsilon still count as interior
            # even though their complex modulus rounds to 1.0.
            omr[i], theta[i] = polar_parts(a)
            if omr[i] <= 0.0:
                raise ContractError(f"Blaschke zero must satisfy |a| < 1, got {a!r}")
        re = np.array([a.real for a in zs])
        im = np.array([a.imag for a in zs])
        for name, arr in (("_omr", omr), ("_theta", theta), ("_re", re), ("_im", im)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self) -> int:
        return len(self.zeros)

    @property
    def masses(self) -> np.ndarray:
        """``1 - |a_n|^2`` per zero, cancellation-free."""
        return self._omr * (2.0 - self._omr)  # type: ignore[attr-defined]

    def min_distance(self, z: complex) -> float:
        if not self.zeros:
            return math.inf
        return min(abs(z - a) for a in self.zeros)


# --------------------------------------------------------------------------
# singular atoms
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularAtoms:
    """Finitely many point masses ``m_k > 0`` at angles ``theta_k``.

    Angles are normalized to ``(-pi, pi]``, must be pairwise distinct, and
    are kept sorted so equal atom sets compare equal.
    """

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        norm = sorted((wrap_angle(t), float(m)) for t, m in self.atoms)
        for t0, t1 in zip(norm, norm[1:]):
            if t0[0] == t1[0]:
                raise ContractError(f"duplicate singular atom at theta = {t0[0]}")
        for t, m in norm:
            if not (m > 0.0 and math.isfinite(m)):
                raise ContractError(f"atom mass must be positive and finite, got {m}")
        object.__setattr__(self, "atoms", tuple(norm))
        theta = np.array([t for t, _ in norm])
        mass = np.array([m for _, m in norm])
        theta.setflags(write=False)
        mass.setflags(write=False)
        object.__setattr__(self, "_theta", theta)
        object.__setattr__(self, "_mass", mass)

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def thetas(self) -> np.ndarray:
        return self._theta  # type: ignore[attr-defined]

    @property
    def masses(self) -> np.ndarray:
        return self._mass  # type: ignore[attr-defined]

    def total_mass(self) -> float:
        return float(self._mass.sum()) if len(self) else 0.0  # type: ignore[attr-defined]


# --------------------------------------------------------------------------
# outer log-modulus densities
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantDensity:
    """``log|b| = log c`` with boundary modulus ``c`` in ``(0, 1]``."""

    c: float

    def __post_init__(self) -> None:
        if not (0.0 < self.c <= 1.0):
            raise ContractError(f"constant density needs modulus c in (0, 1], got {self.c}")

    def values(self, thetas: np.ndarray) -> np.ndarray:
        return np.full_like(np.asarray(thetas, dtype=float), math.log(self.c))

    def neg_integral(self) -> float:
        """Certificate for ``integral (-log|b|) dm``."""
        return -math.log(self.c)

    def centers(self) -> tuple[float, ...]:
        return ()


@dataclass(frozen=True)
class PowerCuspDensity:
    """``log|b|(theta) = -|wrap(theta - theta0)|^alpha`` with ``alpha > 0``.

    Integrable pinch at ``theta0``; certificate ``pi^alpha / (alpha + 1)``.
    """

    alpha: float
    theta0: float = 0.0

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise ContractError(f"power cusp needs alpha > 0, got {self.alpha}")
        object.__setattr__(self, "theta0", wrap_angle(self.theta0))

    def values(self, thetas: np.ndarray) -> np.ndarray:
        d = np.remainder(np.asarray(thetas, dtype=float) - self.theta0 + math.pi, 2 * math.pi) - math.pi
        return -np.abs(d) ** self.alpha

    def neg_integral(self) -> float:
        return math.pi**self.alpha / (self.alpha + 1.0)

    def centers(self) -> tuple[float, ...]:
        return (self.theta0,)


@dataclass(frozen=True)
class TableDensity:
    """Periodic linear interpolation of samples on the uniform angle grid
    ``theta_j = -pi + 2 pi j / N``; all samples must be <= 0."""

    samples: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.samples) < 4:
            raise ContractError("table density needs at least 4 samples")
        if any(v > 0.0 for v in self.samples):
            raise ContractError("log-modulus density values must be <= 0")
        object.__setattr__(self, "samples", tuple(float(v) for v in self.samples))

    def _grid(self) -> np.ndarray:
        n = len(self.samples)
        return -math.pi + 2.0 * math.pi * np.arange(n + 1) / n

    def values(self, thetas: np.ndarray) -> np.ndarray:
        n = len(self.samples)
        t = np.remainder(np.asarray(thetas, dtype=float) + math.pi, 2.0 * math.pi) - math.pi
        ext = np.concatenate([self.samples, [self.samples[0]]])
        return np.interp(t, self._grid(), ext)

    def neg_integral(self) -> float:
        # Exact integral of the periodic linear interpolant: the sample mean.
        return -float(np.mean(self.samples))

    def centers(self) -> tuple[float, ...]:
        return ()


DensityTerm = Union[ConstantDensity, PowerCuspDensity, TableDensity]


@dataclass(frozen=True)
class OuterLogDensity:
    """Boundary log-modulus ``log|b| <= 0`` as a sum of registry terms.

    Keeping sums of terms first-class makes symbol products exact: the outer
    part of ``b1 b2`` is the concatenation of the factors' terms.  Every term
    carries an integral certificate; construction cross-checks the quadrature
    engine against the certificate sum to 1%.
    """

    terms: tuple[DensityTerm, ...] = ()

    def __post_init__(self) -> None:
        if self.terms:
            certificate = self.neg_integral_certificate()
            numeric = integrate_circle(
                lambda t: -self.values(t),
                QuadratureConfig(tolerance=1e-6),
                centers=self.centers(),
            ).value.real
            if certificate > 0 and abs(numeric - certificate) > 0.01 * certificate:
                raise ContractError(
                    f"density certificate {certificate:.6g} disagrees with "
                    f"quadrature {numeric:.6g} beyond 1%"
                )

    @classmethod
    def zero(cls) -> "OuterLogDensity":
        return cls(())

    @classmethod
    def constant(cls, c: float) -> "OuterLogDensity":
        return cls((ConstantDensity(float(c)),))

    @classmethod
    def power_cusp(cls, alpha: float, theta0: float = 0.0) -> "OuterLogDensity":
        return cls((PowerCuspDensity(float(alpha), float(theta0)),))

    @classmethod
    def from_table(cls, samples) -> "OuterLogDensity":
        return cls((TableDensity(tuple(samples)),))

    @property
    def is_zero(self) -> bool:
        return not self.terms or all(
            isinstance(t, ConstantDensity) and t.c == 1.0 for t in self.terms
        )

    def values(self, thetas: np.ndarray) -> np.ndarray:
        thetas = np.asarray(thetas, dtype=float)
        if not self.terms:
            return np.zeros_like(thetas)
        out = self.terms[0].values(thetas)
        for term in self.terms[1:]:
            out = out + term.values(thetas)
        return out

    def neg_integral_certificate(self) -> float:
        return sum(t.neg_integral() for t in self.terms)

    def centers(self) -> tuple[float, ...]:
        out: tuple[float, ...] = ()
        for t in self.terms:
            out += t.centers()
        return out


# --------------------------------------------------------------------------
# symbol
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Symbol:
    """A factored symbol ``b = B . S_nu . b_o``, not identically 1.

    The all-trivial symbol (no zeros, no atoms, zero density) is rejected:
    it generates the zero kernel and every downstream quantity degenerates.
    """

    blaschke: BlaschkeData = field(default_factory=lambda: BlaschkeData(()))
    singular: SingularAtoms = field(default_factory=lambda: SingularAtoms(()))
    outer: OuterLogDensity = field(default_factory=OuterLogDensity.zero)

    def __post_init__(self) -> None:
        if not self.blaschke.zeros and not len(self.singular) and self.outer.is_zero:
            raise ContractError(
                "trivial symbol b = 1 rejected: its kernel is identically zero"
            )

    @classmethod
    def from_blaschke(cls, zeros, **kwargs) -> "Symbol":
        return cls(blaschke=BlaschkeData(tuple(zeros), **kwargs))

    @classmethod
    def from_atoms(cls, atoms) -> "Symbol":
        return cls(singular=SingularAtoms(tuple(atoms)))

    @classmethod
    def from_outer(cls, outer: OuterLogDensity) -> "Symbol":
        return cls(outer=outer)

    @property
    def is_blaschke_only(self) -> bool:
        return bool(self.blaschke.zeros) and not len(self.singular) and self.outer.is_zero

    @property
    def is_zero_free(self) -> bool:
        return not self.blaschke.zeros


def product_symbol(b1: Symbol, b2: Symbol) -> Symbol:
    """The symbol of the product ``b1 b2`` (exact on the factored data)."""
    zeros = b1.blaschke.zeros + b2.blaschke.zeros
    tol = min(b1.blaschke.truncation_tolerance, b2.blaschke.truncation_tolerance)
    tail = b1.blaschke.tail_bound + b2.blaschke.tail_bound
    merged: dict[float, float] = {}
    for t, m in b1.singular.atoms + b2.singular.atoms:
        merged[t] = merged.get(t, 0.0) + m
    return Symbol(
        blaschke=BlaschkeData(zeros, truncation_tolerance=tol, tail_bound=tail),
        singular=SingularAtoms(tuple(merged.items())),
        outer=OuterLogDensity(b1.outer.terms + b2.outer.terms),
    )


# --------------------------------------------------------------------------
# evaluation
# --------------------------------------------------------------------------


def _blaschke_sign(a: complex) -> complex:
    if a == 0:
        return -1.0 + 0.0j
    # rescale by the larger component first: |a|/a loses its modulus when
    # the squared components underflow (denormal zeros)
    k = max(abs(a.real), abs(a.imag))
    s = complex(a.real / k, a.imag / k)
    return abs(s) / s


def eval_blaschke(data: BlaschkeData, z: complex) -> complex:
    """Evaluate the finite Blaschke product at ``z`` in the closed disk."""
    out = 1.0 + 0.0j
    for a in data.zeros:
        out *= _blaschke_sign(a) * (a - z) / (1.0 - a.conjugate() * z)
    return out


def eval_singular_inner(atoms: SingularAtoms, z: complex) -> complex:
    """Evaluate ``exp(-sum m_k (zeta_k + z)/(zeta_k - z))`` at interior ``z``."""
    if not len(atoms):
        return 1.0 + 0.0j
    omr, theta = polar_parts(z)
    if omr <= 0.0 and any(t == theta for t in atoms.thetas):
        raise PoleError("singular inner factor evaluated at one of its atoms")
    s = _hot.herglotz_atom_sum(atoms.thetas, atoms.masses, omr, theta)
    return cmath.exp(-s)


def _herglotz_kernel(thetas: np.ndarray, z: complex) -> np.ndarray:
    """``(zeta + z) / (zeta - z)`` for ``zeta = e^{i theta}``, stable near z."""
    omr, zt = polar_parts(z)
    r = 1.0 - omr
    d = zt - thetas
    s = np.sin(0.5 * d)
    one_minus = omr + 2.0 * r * s * s - 1j * r * np.sin(d)
    zeta = np.exp(1j * thetas)
    return (zeta + z) / (zeta * one_minus)


def eval_outer(
    outer: OuterLogDensity, z: complex, quad: QuadratureConfig | None = None
) -> complex:
    """Evaluate the outer factor by its Herglotz integral."""
    if outer.is_zero:
        return 1.0 + 0.0j
    omr, zt = polar_parts(z)
    if omr <= 0.0:
        raise DomainError("outer factor is evaluated in the open disk only")

    def integrand(thetas: np.ndarray) -> np.ndarray:
        return _herglotz_kernel(thetas, z) * outer.values(thetas)

    res = integrate_circle(integrand, quad, centers=(zt,) + outer.centers())
    return cmath.exp(res.value)


def eval_symbol(sym: Symbol, z: complex, quad: QuadratureConfig | None = None) -> complex:
    """Evaluate ``b(z) = B(z) S(z) b_o(z)`` at interior ``z``."""
    value = eval_blaschke(sym.blaschke, z)
    value *= eval_singular_inner(sym.singular, z)
    value *= eval_outer(sym.outer, z, quad)
    return value


def neg_log_modulus(sym: Symbol, z: complex, quad: QuadratureConfig | None = None) -> float:
    """``-log|b(z)| >= 0`` without cancellation near the boundary.

    Assembled factor-wise:

        -log|B(z)|   = -1/2 sum_n log(1 - g_n),
                        g_n = (1 - |z|^2)(1 - |a_n|^2) / |1 - conj(a_n) z|^2
        -log|S(z)|   = (1 - |z|^2) sum_k m_k / |zeta_k - z|^2
        -log|b_o(z)| = (1 - |z|^2) integral (-log|b|) / |zeta - z|^2 dm

    which stays fully accurate even when ``1 - |z|`` is at machine scale.
    """
    omr, zt = polar_parts(z)
    if omr <= 0.0:
        raise DomainError("neg_log_modulus is defined in the open disk only")
    omz2 = one_minus_abs2(z)
    total = 0.0
    if sym.blaschke.zeros:
        a_omr = sym.blaschke._omr  # type: ignore[attr-defined]
        a_theta = sym.blaschke._theta  # type: ignore[attr-defined]
        d2 = _abs2_one_minus_conj_arr(a_omr, a_theta, omr, zt)
        g = omz2 * sym.blaschke.masses / d2
        # g = 1 exactly at a zero of B; log1p(-1) = -inf is the intended
        # value there (t = +inf propagates correctly through -expm1(-2t))
        with np.errstate(divide="ignore"):
            total += -0.5 * float(np.sum(np.log1p(-np.minimum(g, 1.0))))
    if len(sym.singular):
        total += omz2 * _hot.powered_atom_sum(
            np.zeros(len(sym.singular)), sym.singular.thetas, sym.singular.masses, omr, zt, 0
        )
    if not sym.outer.is_zero:
        def integrand(thetas: np.ndarray) -> np.ndarray:
            w = _hot.poisson_power_weights(np.ascontiguousarray(thetas), omr, zt, 0)
            return -sym.outer.values(thetas) * w

        res = integrate_circle(integrand, quad, centers=(zt,) + sym.outer.centers())
        total += omz2 * res.value.real
    return total


def _abs2_one_minus_conj_arr(a_omr, a_theta, z_omr: float, z_theta: float):
    p = a_omr + z_omr - a_omr * z_omr
    rr = (1.0 - a_omr) * (1.0 - z_omr)
    s = np.sin(0.5 * (z_theta - a_theta))
    return p * p + 4.0 * rr * s * s


def boundary_log_modulus(sym: Symbol, theta: float) -> float:
    """The a.e. boundary log-modulus: the outer density at ``theta``.

    Inner factors are unimodular almost everywhere on the circle, so only the
    outer density contributes.
    """
    return float(sym.outer.values(np.array([wrap_angle(theta)]))[0])


# --------------------------------------------------------------------------
# derivatives
# --------------------------------------------------------------------------


def _log_derivative_coeffs(
    sym: Symbol, z: complex, rmax: int, quad: QuadratureConfig | None
) -> list[complex]:
    """``L^(r)(z)`` for ``r = 0..rmax`` where ``L = b'/b``.

    L^(r) = sum_n r! [ (-1)^r / (z - a_n)^{r+1}
                       + conj(a_n)^{r+1} / (1 - conj(a_n) z)^{r+1} ]
            - (r+1)! [ sum_k m_k 2 zeta_k / (zeta_k - z)^{r+2}
                       + integral 2 zeta (-log|b|) / (zeta - z)^{r+2} dm ].
    """
    omr, zt = polar_parts(z)
    out: list[complex] = []
    for r in range(rmax + 1):
        acc = 0.0 + 0.0j
        rfact = float(factorial(r))
        for a in sym.blaschke.zeros:
            ac = a.conjugate()
            acc += rfact * ((-1.0) ** r / (z - a) ** (r + 1) + ac ** (r + 1) / (1.0 - ac * z) ** (r + 1))
        rp1fact = float(factorial(r + 1))
        if len(sym.singular):
            acc -= rp1fact * _hot.cauchy_power_atom_sum(
                sym.singular.thetas, sym.singular.masses, omr, zt, r + 2
            )
        if not sym.outer.is_zero:
            def integrand(thetas: np.ndarray, _r: int = r) -> np.ndarray:
                omr_loc, zt_loc = omr, zt
                rr = 1.0 - omr_loc
                d = zt_loc - thetas
                s = np.sin(0.5 * d)
                one_minus = omr_loc + 2.0 * rr * s * s - 1j * rr * np.sin(d)
                zeta = np.exp(1j * thetas)
                dens = -sym.outer.values(thetas)  # -log|b| >= 0
                return 2.0 * zeta * dens / (zeta * one_minus) ** (_r + 2)

            res = integrate_circle(integrand, quad, centers=(zt,) + sym.outer.centers())
            acc -= rp1fact * res.value
        out.append(acc)
    return out


def log_derivative(sym: Symbol, z: complex, quad: QuadratureConfig | None = None) -> complex:
    """``b'(z)/b(z)`` at interior ``z`` away from the Blaschke zeros."""
    omr, _ = polar_parts(z)
    if omr <= 0.0:
        raise DomainError("log_derivative is defined in the open disk only")
    if sym.blaschke.min_distance(z) < 1e-14:
        raise PoleError("log_derivative evaluated at a Blaschke zero")
    return _log_derivative_coeffs(sym, z, 0, quad)[0]


def eval_derivatives(
    sym: Symbol, z: complex, order: int, quad: QuadratureConfig | None = None
) -> list[complex]:
    """``[b(z), b'(z), ..., b^(order)(z)]`` at interior ``z``.

    Uses the logarithmic-derivative recursion; within 1e-6 of a Blaschke zero
    it switches to a 16-point Cauchy integral on a circle of radius
    ``min(1e-2, (1 - |z|)/2)`` (best effort: accuracy degrades with order).
    """
    if order < 0:
        raise ContractError(f"order must be >= 0, got {order}")
    omr, _ = polar_parts(z)
    if omr <= 0.0:
        raise DomainError("derivatives are evaluated in the open disk only")
    b0 = eval_symbol(sym, z, quad)
    if order == 0:
        return [b0]
    if sym.blaschke.min_distance(z) < _BLASCHKE_FALLBACK_DIST:
        return _derivatives_by_cauchy(sym, z, order, quad)
    L = _log_derivative_coeffs(sym, z, order - 1, quad)
    bs = [b0]
    for j in range(order):
        acc = 0.0 + 0.0j
        for i in range(j + 1):
            acc += comb(j, i) * L[j - i] * bs[i]
        bs.append(acc)
    return bs


def _derivatives_by_cauchy(
    sym: Symbol, z: complex, order: int, quad: QuadratureConfig | None
) -> list[complex]:
    omr, _ = polar_parts(z)
    radius = min(1e-2, 0.5 * omr)
    n = _CAUCHY_POINTS
    vals = []
    for j in range(n):
        w = z + radius * cmath.exp(2j * math.pi * j / n)
        vals.append(eval_symbol(sym, w, quad))
    out = []
    for k in range(order + 1):
        acc = 0.0 + 0.0j
        for j, v in enumerate(vals):
            acc += v * cmath.exp(-2j * math.pi * j * k / n)
        out.append(acc * factorial(k) / (n * radius**k))
    return out


def blaschke_prefix_derivatives(
    data: BlaschkeData, z: complex, order: int
) -> np.ndarray:
    """Derivative table of the partial products of a Blaschke product.

    Returns complex ``P`` of shape ``(len(data)+1, order+1)`` with
    ``P[j, q] = (d/dz)^q b_j(z)`` for the product ``b_j`` of the first ``j``
    factors.  Uses the closed factor derivatives

        f^(q) = -sign(a) (1 - |a|^2) q! conj(a)^{q-1} / (1 - conj(a) z)^{q+1}

    combined by Leibniz, so the table is exact up to rounding everywhere in
    the closed disk (including at the zeros themselves).
    """
    n = len(data)
    P = np.zeros((n + 1, order + 1), dtype=complex)
    P[0, 0] = 1.0
    for j, a in enumerate(data.zeros, start=1):
        s = _blaschke_sign(a)
        ac = a.conjugate()
        den = 1.0 - ac * z
        u = polar_parts(a)[0]
        mass = u * (2.0 - u)  # 1 - |a|^2
        f = np.zeros(order + 1, dtype=complex)
        f[0] = s * (a - z) / den
        for q in range(1, order + 1):
            f[q] = -s * mass * factorial(q) * ac ** (q - 1) / den ** (q + 1)
        for q in range(order, -1, -1):
            acc = 0.0 + 0.0j
            for t in range(q + 1):
                acc += comb(q, t) * P[j - 1, q - t] * f[t]
            P[j, q] = acc
    return P


# --------------------------------------------------------------------------
# zero families
# --------------------------------------------------------------------------


def theorem_c_zero_family(
    rho: RhoFunction, count: int, x_start: float = 0.25, ratio: float = 0.25
) -> tuple[DiskPoint, ...]:
    """Zeros ``a_n = (1 - rho(x_n)) e^{i x_n}`` on a geometric angle sequence.

    ``x_n = x_start * ratio^(n-1)``; ``ratio`` must be < 1/2 so consecutive
    angles at least halve.
    """
    if not (0.0 < ratio < 0.5):
        raise ContractError(f"angle ratio must lie in (0, 1/2), got {ratio}")
    if count < 1:
        raise ContractError("count must be >= 1")
    out = []
    for n in range(count):
        x = x_start * ratio**n
        out.append(DiskPoint(rho(x), x))
    return tuple(out)


def tangential_cluster_zero_family(count: int = 40) -> tuple[DiskPoint, ...]:
    """Zeros clustering tangentially at 1 with summable condition sums.

    Angles ``theta_n = 2^(-n/2)`` and radial deficits clipped to
    ``1 - |a_n| = min(2^-n, theta_n^3)``: the clipped deficits make
    ``sum (1 - |a_n|^2)/|1 - a_n|^2`` converge (ratio ``2^(-n/2)``), so the
    family satisfies the order-zero boundary condition at 1 while still
    leaving every cone ``Gamma(c)`` eventually.
    """
    if count < 1:
        raise ContractError("count must be >= 1")
    out = []
    for n in range(1, count + 1):
        theta = 2.0 ** (-0.5 * n)
        omr = min(2.0**-n, theta**3)
        out.append(DiskPoint(omr, theta))
    return tuple(out)


# --------------------------------------------------------------------------
# symbol specs (JSON-friendly dictionaries)
# --------------------------------------------------------------------------


def _rho_from_spec(spec: dict) -> RhoFunction:
    kind = spec.get("type", "power")
    if kind == "power":
        return RhoFunction.power(spec.get("c", 1.0), spec["gamma"])
    if kind == "table":
        return RhoFunction.table(spec["xs"], spec["values"])
    raise ContractError(f"unknown rho spec type {kind!r}")


def symbol_from_spec(spec: dict) -> Symbol:
    """Build a symbol from its dictionary form.

    Keys (all optional, at least one factor required):

    - ``zeros``: list of ``[re, im]`` pairs
    - ``zero_family``: ``{"type": "theorem_c", "rho": {...}, "count": N}``
      or ``{"type": "tangential_cluster", "count": N}``
    - ``atoms``: list of ``{"theta": t, "mass": m}``
    - ``outer``: ``{"type": "zero"}``, ``{"type": "constant", "c": c}``,
      ``{"type": "power_cusp", "alpha": a, "theta0": t}`` or
      ``{"type": "table", "samples": [...]}``
    """
    if not isinstance(spec, dict):
        raise ContractError(f"symbol spec must be a dict, got {type(spec).__name__}")
    zeros: list[complex] = []
    for pair in spec.get("zeros", []):
        if len(pair) != 2:
            raise ContractError(f"zero entries must be [re, im] pairs, got {pair!r}")
        zeros.append(complex(float(pair[0]), float(pair[1])))
    family = spec.get("zero_family")
    if family:
        ftype = family.get("type")
        if ftype == "theorem_c":
            rho = _rho_from_spec(family.get("rho", {"type": "power", "c": 1.0, "gamma": 2.0}))
            zeros.extend(
                theorem_c_zero_family(
                    rho,
                    int(family.get("count", 20)),
                    x_start=float(family.get("x_start", 0.25)),
                    ratio=float(family.get("ratio", 0.25)),
                )
            )
        elif ftype == "tangential_cluster":
            zeros.extend(tangential_cluster_zero_family(int(family.get("count", 40))))
        else:
            raise ContractError(f"unknown zero_family type {ftype!r}")
    atoms = tuple(
        (float(a["theta"]), float(a["mass"])) for a in spec.get("atoms", [])
    )
    outer_spec = spec.get("outer", {"type": "zero"})
    otype = outer_spec.get("type", "zero")
    if otype == "zero":
        outer = OuterLogDensity.zero()
    elif otype == "constant":
        outer = OuterLogDensity.constant(float(outer_spec["c"]))
    elif otype == "power_cusp":
        outer = OuterLogDensity.power_cusp(
            float(outer_spec["alpha"]), float(outer_spec.get("theta0", 0.0))
        )
    elif otype == "table":
        outer = OuterLogDensity.from_table(outer_spec["samples"])
    else:
        raise ContractError(f"unknown outer density type {otype!r}")
    return Symbol(
        blaschke=BlaschkeData(tuple(zeros)),
        singular=SingularAtoms(atoms),
        outer=outer,
    )
