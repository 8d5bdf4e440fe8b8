import math

import numpy as np
import pytest

from hbkern.quadrature import (
    QuadratureConfig,
    QuadratureError,
    integrate_circle,
)


def stable_poisson(omr: float, theta0: float = 0.0):
    """Unit-mass Poisson kernel at r = 1 - omr, peak at theta0, written
    without the 1 - 2r cos t + r^2 cancellation."""
    r = 1.0 - omr

    def f(t):
        return omr * (2.0 - omr) / (omr * omr + 4.0 * r * np.sin(0.5 * (t - theta0)) ** 2)

    return f


def test_constant_integrates_to_itself():
    # dm = d theta / (2 pi), so the constant 3 integrates to 3
    res = integrate_circle(lambda t: np.full_like(t, 3.0))
    assert abs(res.value - 3.0) < 1e-12


def test_cancelling_integrand_converges():
    # strictly relative tolerance would never terminate on a zero integral;
    # the machine-noise floor (relative to the L1 mass) accepts it
    res = integrate_circle(np.cos)
    assert abs(res.value) < 1e-14
    assert res.panels < 100


def test_poisson_kernel_has_unit_mass_down_to_tiny_widths():
    for omr in (0.5, 1e-2, 1e-6, 1e-10):
        res = integrate_circle(
            stable_poisson(omr), QuadratureConfig(tolerance=1e-12), centers=(0.0,)
        )
        assert abs(res.value - 1.0) < 1e-10, omr


def test_off_axis_peak_needs_its_center():
    # evaluating f(t) with the peak at t0 != 0 carries an eps*|t0|/width
    # noise floor from the t - t0 subtraction inside the integrand, so the
    # requestable tolerance is capped around 1e-9 at width 1e-6
    res = integrate_circle(
        stable_poisson(1e-6, theta0=2.0),
        QuadratureConfig(tolerance=1e-9),
        centers=(2.0,),
    )
    assert abs(res.value - 1.0) < 1e-8


def test_breakpoints_split_piecewise_integrands():
    # indicator of (0.25, 1.75) has jumps the mesh must align with
    lo, hi = 0.25, 1.75

    def box(t):
        return ((t > lo) & (t < hi)).astype(float)

    res = integrate_circle(
        box, QuadratureConfig(tolerance=1e-12), breakpoints=(lo, hi)
    )
    assert abs(res.value - (hi - lo) / (2 * math.pi)) < 1e-12


def test_panel_budget_exhaustion_raises():
    with pytest.raises(QuadratureError, match="panel budget"):
        # no center hint and almost no panels: cannot resolve the peak
        integrate_circle(
            stable_poisson(1e-9), QuadratureConfig(tolerance=1e-12, max_panels=8)
        )


def test_non_finite_integrand_raises():
    def blows_up(t):
        with np.errstate(divide="ignore"):
            return 1.0 / (t - t[0])  # first node divides by zero

    with pytest.raises(QuadratureError, match="non-finite"):
        integrate_circle(blows_up)


def test_result_carries_evidence():
    res = integrate_circle(lambda t: np.exp(np.sin(t)), QuadratureConfig(tolerance=1e-10))
    assert res.error_estimate <= 1e-10 * max(1.0, abs(res.value))
    assert res.panels >= 1
    assert res.real == res.value.real
