import cmath
import math
import pickle

from hypothesis import given
from hypothesis import strategies as st

from hbkern.points import (
    DiskPoint,
    abs2_one_minus_conj_mul,
    circle_point_minus,
    one_minus_abs,
    one_minus_abs2,
    one_minus_conj_mul,
    polar_parts,
    wrap_angle,
)

angles = st.floats(min_value=-math.pi, max_value=math.pi)
moderate_omr = st.floats(min_value=1e-6, max_value=1.0)


def test_disk_point_carries_exact_polar_data():
    p = DiskPoint(1e-30, 0.5)
    assert p.one_minus_r == 1e-30
    assert p.theta == 0.5
    # the complex embedding rounds |p| to 1, the polar fields do not
    assert abs(complex(p)) == 1.0
    assert polar_parts(p) == (1e-30, 0.5)


def test_disk_point_is_a_complex_number():
    p = DiskPoint(0.25, math.pi / 3)
    want = 0.75 * cmath.exp(1j * math.pi / 3)
    assert abs(complex(p) - want) < 1e-15
    assert abs(p * 2 - 2 * want) < 1e-15  # arithmetic falls back to complex


def test_disk_point_pickles_exactly():
    p = DiskPoint(1e-22, -0.125)
    q = pickle.loads(pickle.dumps(p))
    assert polar_parts(q) == (1e-22, -0.125)


def test_polar_parts_of_plain_complex():
    omr, theta = polar_parts(0.5j)
    assert math.isclose(omr, 0.5)
    assert math.isclose(theta, math.pi / 2)


def test_wrap_angle_range():
    assert wrap_angle(math.pi + 0.1) == -math.pi + 0.1
    assert wrap_angle(-math.pi) == math.pi
    for t in (-7.0, -1.0, 0.0, 2.0, 9.0):
        assert -math.pi < wrap_angle(t) <= math.pi
        assert math.isclose(
            cmath.exp(1j * wrap_angle(t)).real, math.cos(t), abs_tol=1e-12
        )


def test_one_minus_abs_variants_on_polar_points():
    p = DiskPoint(1e-18, 1.0)
    assert one_minus_abs(p) == 1e-18
    # 1 - |z|^2 = omr (2 - omr): no cancellation even below machine epsilon
    assert one_minus_abs2(p) == 1e-18 * (2 - 1e-18)


@given(moderate_omr, angles, moderate_omr, angles)
def test_abs2_one_minus_conj_mul_matches_naive(w_omr, w_t, z_omr, z_t):
    w = (1 - w_omr) * cmath.exp(1j * w_t)
    z = (1 - z_omr) * cmath.exp(1j * z_t)
    got = abs2_one_minus_conj_mul(w_omr, w_t, z_omr, z_t)
    want = abs(1 - w.conjugate() * z) ** 2
    assert got >= 0.0
    assert math.isclose(got, want, rel_tol=1e-10, abs_tol=1e-15)


@given(moderate_omr, angles, moderate_omr, angles)
def test_one_minus_conj_mul_matches_naive(w_omr, w_t, z_omr, z_t):
    w = (1 - w_omr) * cmath.exp(1j * w_t)
    z = (1 - z_omr) * cmath.exp(1j * z_t)
    got = one_minus_conj_mul(w_omr, w_t, z_omr, z_t)
    want = 1 - w.conjugate() * z
    assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


def test_one_minus_conj_mul_survives_cancellation():
    # w = z on the circle: 1 - conj(z) z = 0 exactly in exact arithmetic;
    # at omr = 1e-20 the naive formula returns 0.0, the polar one returns
    # the true residual ~ 2e-20.
    got = abs2_one_minus_conj_mul(1e-20, 0.3, 1e-20, 0.3)
    assert got > 0.0
    assert math.isclose(math.sqrt(got), 2e-20, rel_tol=1e-9)


def test_circle_point_minus_aligned_atom_is_exact():
    # zeta = e^{it}, z = (1 - rho) e^{it}: zeta - z = rho e^{it} exactly
    for rho in (0.25, 1e-12, 1e-20):
        t = 0.7
        d = circle_point_minus(t, DiskPoint(rho, t))
        assert abs(d) == rho
        assert abs(d - rho * cmath.exp(1j * t)) <= 1e-16 * rho


@given(angles, moderate_omr, angles)
def test_circle_point_minus_matches_naive(t, z_omr, z_t):
    z = (1 - z_omr) * cmath.exp(1j * z_t)
    got = circle_point_minus(t, z)
    want = cmath.exp(1j * t) - z
    assert abs(got - want) <= 1e-12 * max(1.0, abs(want))
