import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbkern import ContractError, DiskPoint, DomainError
from hbkern.points import polar_parts
from hbkern.regions import (
    ApproachRegion,
    Arc,
    RhoFunction,
    arc_E,
    boundary_path,
    calc_lemma_check,
    contains,
    estimate_check,
    in_sector_S,
    load_rho_table,
    parse_region,
    radial_path,
)


# --------------------------------------------------------------------------
# rho gauges and regions
# --------------------------------------------------------------------------


def test_power_rho_values_and_tangentiality():
    rho = RhoFunction.power(2.0, 3.0)
    assert rho(0.5) == pytest.approx(2.0 * 0.125)
    assert rho.is_tangential()
    assert not RhoFunction.power(0.5, 1.0).is_tangential()


def test_power_rho_requires_gamma_at_least_one():
    with pytest.raises(ContractError):
        RhoFunction.power(1.0, 0.5)
    with pytest.raises(ContractError):
        RhoFunction.power(-1.0, 2.0)


def test_table_rho_interpolates_monotonically():
    rho = RhoFunction.table([0.0, 0.1, 0.2], [0.0, 0.01, 0.04])
    assert rho(0.05) == pytest.approx(0.005)
    assert rho(0.15) == pytest.approx(0.025)
    with pytest.raises(ContractError):
        RhoFunction.table([0.0, 0.1], [0.02, 0.01])  # not increasing


def test_nontangential_region_membership():
    gamma1 = ApproachRegion.nontangential(1.0)
    # radial points are inside, nearly-circular points are not
    assert contains(gamma1, DiskPoint(0.2, 0.1))
    assert not contains(gamma1, DiskPoint(1e-6, 0.5))


def test_tangential_region_admits_cusp_paths():
    omega = ApproachRegion.from_rho(RhoFunction.power(1.0, 2.0))
    # 1 - |z| > x^2 at angle x: the parabola boundary
    assert contains(omega, DiskPoint(0.02, 0.1))
    assert not contains(omega, DiskPoint(0.005, 0.1))
    # points on tangential paths leave every cone eventually but stay in omega
    assert not contains(ApproachRegion.nontangential(1.0), DiskPoint(0.02, 0.1))


def test_boundary_path_follows_the_gauge():
    omega = ApproachRegion.from_rho(RhoFunction.power(1.0, 2.0))
    pts = boundary_path(omega, 0.2, 1e-3, 12)
    assert len(pts) == 12
    for p in pts:
        omr, theta = polar_parts(p)
        assert omr == pytest.approx(theta * theta, rel=1e-12)
    # angles decrease geometrically toward 0
    angles = [polar_parts(p)[1] for p in pts]
    assert angles[0] == pytest.approx(0.2)
    assert angles[-1] == pytest.approx(1e-3)
    ratios = [angles[i + 1] / angles[i] for i in range(len(angles) - 1)]
    assert max(ratios) - min(ratios) < 1e-9


def test_boundary_path_lower_side_and_inward_shift():
    gamma = ApproachRegion.nontangential(1.0)
    upper = boundary_path(gamma, 0.1, 0.01, 5, side="upper")
    lower = boundary_path(gamma, 0.1, 0.01, 5, side="lower")
    for u, l in zip(upper, lower):
        assert polar_parts(u)[1] == pytest.approx(-polar_parts(l)[1])
    shifted = boundary_path(gamma, 0.1, 0.01, 5, inward=1e-3)
    for u, s in zip(upper, shifted):
        assert polar_parts(s)[0] == pytest.approx(polar_parts(u)[0] + 1e-3)


def test_radial_path_geometric_in_boundary_distance():
    pts = radial_path(0.9, 1 - 1e-6, 7)
    omrs = [polar_parts(p)[0] for p in pts]
    assert omrs[0] == pytest.approx(0.1)
    assert omrs[-1] == pytest.approx(1e-6)
    for p in pts:
        assert polar_parts(p)[1] == 0.0
    ratios = [omrs[i + 1] / omrs[i] for i in range(len(omrs) - 1)]
    assert max(ratios) - min(ratios) < 1e-12


# --------------------------------------------------------------------------
# localization arc and sector
# --------------------------------------------------------------------------


def test_arc_is_angle_doubling_interval():
    z = 0.9 * cmath.exp(0.2j)
    arc = arc_E(z)
    assert not arc.empty
    assert arc.lo == pytest.approx(0.1)
    assert arc.hi == pytest.approx(0.4)
    # reflected for points below the axis
    arc_neg = arc_E(z.conjugate())
    assert arc_neg.lo == pytest.approx(-0.4)
    assert arc_neg.hi == pytest.approx(-0.1)


def test_arc_is_empty_on_the_axis():
    assert arc_E(0.5).empty
    assert arc_E(-0.5).empty  # arg = pi excluded as well
    with pytest.raises(DomainError):
        arc_E(0.0)


def test_sector_membership():
    z = 0.9 * cmath.exp(0.2j)
    assert in_sector_S(z, 0.5 * cmath.exp(0.25j))
    assert in_sector_S(z, cmath.exp(0.11j))
    assert not in_sector_S(z, cmath.exp(0.05j))  # below theta/2
    assert not in_sector_S(z, cmath.exp(0.45j))  # above 2 theta
    assert not in_sector_S(z, 0.0)


def test_arc_intervals_wrap_across_pi():
    arc = Arc(2.0, 4.0, empty=False)  # crosses pi
    ivs = arc.intervals()
    total = sum(hi - lo for lo, hi in ivs)
    assert total == pytest.approx(2.0)
    assert all(-math.pi <= lo < hi <= math.pi for lo, hi in ivs)


# --------------------------------------------------------------------------
# the two inequality probes
# --------------------------------------------------------------------------


def test_estimate_check_examples():
    # w opposite to z: |1 - conj(w) z| is large, bound is easy
    chk = estimate_check(0.9, -1.0)
    assert chk.holds
    # w = 1 makes the right side infinite
    chk = estimate_check(0.5 * cmath.exp(1.0j), 1.0)
    assert chk.holds and math.isinf(chk.rhs)


def test_estimate_check_rejects_sector_points():
    z = 0.9 * cmath.exp(0.2j)
    with pytest.raises(ContractError):
        estimate_check(z, cmath.exp(0.25j))


def test_estimate_check_random_admissible_pairs(rng):
    violations = 0
    n = 0
    while n < 2000:
        r = math.sqrt(rng.uniform()) * 0.999
        t = rng.uniform(-math.pi, math.pi)
        z = complex(r * math.cos(t), r * math.sin(t))
        wr = math.sqrt(rng.uniform())
        wt = rng.uniform(-math.pi, math.pi)
        w = complex(wr * math.cos(wt), wr * math.sin(wt))
        if z == 0 or (w != 0 and in_sector_S(z, w)):
            continue
        n += 1
        if not estimate_check(z, w).holds:
            violations += 1
    assert violations == 0


def test_calc_lemma_check_on_the_parabola():
    rho = RhoFunction.power(1.0, 2.0)
    chk = calc_lemma_check(rho, 0.01, 0.05)
    assert chk.holds
    assert chk.lhs >= chk.rhs


def test_calc_lemma_check_contract_errors():
    rho = RhoFunction.power(1.0, 2.0)
    with pytest.raises(ContractError):
        calc_lemma_check(rho, 0.05, 0.01)  # needs x < x_star
    steep = RhoFunction.power(10.0, 1.0)
    with pytest.raises(ContractError):
        calc_lemma_check(steep, 0.01, 0.05)  # slope >= 1/2


def test_calc_lemma_random_samples(rng):
    for _ in range(500):
        c = float(rng.uniform(0.1, 2.0))
        gamma = float(rng.uniform(2.0, 4.0))
        rho = RhoFunction.power(c, gamma)
        x_star = float(rng.uniform(1e-4, 0.1))
        x = float(rng.uniform(0.0, 1.0)) * x_star
        if x <= 0.0 or x >= x_star:
            continue
        assert calc_lemma_check(rho, x, x_star).holds


# --------------------------------------------------------------------------
# region spec strings
# --------------------------------------------------------------------------


def test_parse_region_round_trips():
    gamma = parse_region("nt:c=2.5")
    assert gamma.kind == "nt" and gamma.c == 2.5
    omega = parse_region("rho:power:c=1,gamma=2")
    assert omega.kind == "rho"
    assert omega.rho(0.1) == pytest.approx(0.01)


def test_parse_region_rejects_unknown_forms():
    with pytest.raises(ContractError, match="nt:c="):
        parse_region("bogus")
    with pytest.raises(ContractError):
        parse_region("nt:c=-1")


def test_load_rho_table(tmp_path):
    path = tmp_path / "rho.csv"
    path.write_text("# x, rho\n0.0, 0.0\n0.1, 0.01\n0.2, 0.04\n")
    rho = load_rho_table(str(path))
    assert rho(0.15) == pytest.approx(0.025)
    bad = tmp_path / "bad.csv"
    bad.write_text("0.0 0.0\n0.1\n")
    with pytest.raises(ContractError):
        load_rho_table(str(bad))
