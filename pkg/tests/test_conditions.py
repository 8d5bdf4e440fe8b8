import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbkern import ContractError, DiskPoint, PoleError, QuadratureConfig
from hbkern.conditions import (
    MeasureM,
    PathSampler,
    complement_value,
    condition_value,
    family_l1_bound,
    limit_probe,
    localized_value,
    probe_point,
    sup_scan,
)
from hbkern.points import polar_parts
from hbkern.regions import ApproachRegion, RhoFunction
from hbkern.symbols import (
    BlaschkeData,
    OuterLogDensity,
    SingularAtoms,
    Symbol,
)

from conftest import make_atoms, make_blaschke

inner_points = st.builds(
    lambda r, t: complex(r * math.cos(t), r * math.sin(t)),
    st.floats(min_value=0.0, max_value=0.95),
    st.floats(min_value=-math.pi, max_value=math.pi),
)


def mixed_measure() -> MeasureM:
    sym = Symbol(
        blaschke=BlaschkeData((0.5, -0.3j)),
        singular=SingularAtoms(((0.8, 0.4), (-2.0, 0.25))),
        outer=OuterLogDensity.constant(math.exp(-0.2)),
    )
    return MeasureM.from_symbol(sym)


# --------------------------------------------------------------------------
# measure assembly
# --------------------------------------------------------------------------


def test_measure_from_symbol_collects_all_three_parts():
    M = mixed_measure()
    assert M.n_disk == 2
    assert M.n_circle == 2
    assert not M.density.is_zero
    # disk atom mass is 1 - |a|^2
    masses = dict(
        (complex(a), mass) for a, mass in M.disk_atoms
    )
    assert masses[0.5 + 0j] == pytest.approx(0.75)
    assert masses[-0.3j] == pytest.approx(0.91)


def test_measure_rejects_nonpositive_mass():
    with pytest.raises(ContractError):
        MeasureM(disk_atoms=((0.5, 0.0),), circle_atoms=(), density=OuterLogDensity.zero())


def test_single_disk_atom_condition_value():
    # M = (1 - |a|^2) delta_a gives J_m(z) = (1 - |a|^2) / |1 - conj(a) z|^(2m+2)
    a = 0.5 + 0j
    M = MeasureM.from_symbol(make_blaschke([a]))
    for z in (0.0, 0.3j, -0.6):
        for m in (0, 1, 2):
            want = 0.75 / abs(1 - a.conjugate() * z) ** (2 * m + 2)
            assert condition_value(M, z, m) == pytest.approx(want, rel=1e-12)


def test_single_circle_atom_condition_value():
    M = MeasureM.from_symbol(make_atoms([(0.0, 0.3)]))
    # z on the radius toward the atom: |1 - conj(w) z| = 1 - r exactly
    for r in (0.0, 0.5, 0.99):
        for m in (0, 1):
            want = 0.3 / (1 - r) ** (2 * m + 2)
            assert condition_value(M, r, m) == pytest.approx(want, rel=1e-12)


def test_identity_symbol_has_unit_condition():
    M = MeasureM.from_symbol(make_blaschke([0.0]))
    for z in (0.0, 0.9, 0.5j, DiskPoint(1e-12, 0.3)):
        assert condition_value(M, z, 0) == pytest.approx(1.0, rel=1e-12)


def test_negative_order_rejected():
    M = mixed_measure()
    with pytest.raises(ContractError):
        condition_value(M, 0.1, -1)


def test_pole_at_circle_atom():
    M = MeasureM.from_symbol(make_atoms([(0.5, 1.0)]))
    with pytest.raises(PoleError):
        condition_value(M, cmath.exp(0.5j), 0)
    # boundary evaluation away from the atom is allowed (Fatou quantity)
    val = condition_value(M, 1.0 + 0j, 0)
    assert math.isfinite(val)


# --------------------------------------------------------------------------
# invariants
# --------------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(inner_points, st.integers(min_value=0, max_value=2))
def test_localized_never_exceeds_total(z, m):
    M = MeasureM.from_symbol(
        Symbol(
            blaschke=BlaschkeData((0.5,)),
            singular=SingularAtoms(((0.9, 0.4), (0.05, 0.2))),
            outer=OuterLogDensity.zero(),
        )
    )
    loc = localized_value(M, z, m)
    tot = condition_value(M, z, m)
    assert 0.0 <= loc <= tot * (1 + 1e-12) + 1e-300


@pytest.mark.parametrize("m", [0, 1])
def test_splitting_identity(m, tight_quad):
    M = mixed_measure()
    for z in (0.4 * cmath.exp(0.3j), 0.95 * cmath.exp(-0.8j), DiskPoint(1e-4, 0.05)):
        total = condition_value(M, z, m, tight_quad)
        loc = localized_value(M, z, m, tight_quad)
        comp = complement_value(M, z, m, tight_quad)
        assert loc + comp == pytest.approx(total, rel=1e-10)


def test_splitting_identity_on_the_axis():
    # real z has an empty localization arc: localized = 0, complement = total
    M = mixed_measure()
    z = 0.5
    assert localized_value(M, z, 0) == 0.0
    assert complement_value(M, z, 0) == pytest.approx(
        condition_value(M, z, 0), rel=1e-12
    )
    assert localized_value(M, 0.0, 0) == 0.0


def test_exponent_monotonicity_when_kernel_distances_are_small():
    # all atoms within |1 - conj(w) z| <= 1 of z: growing the exponent can
    # only grow the integral
    M = MeasureM.from_symbol(make_atoms([(0.1, 0.3), (0.2, 0.2)]))
    z = 0.9 * cmath.exp(0.15j)
    for w, _ in M.circle_atoms:
        assert abs(1 - cmath.exp(-1j * w) * z) <= 1.0
    values = [condition_value(M, z, m) for m in range(4)]
    assert all(values[i] <= values[i + 1] * (1 + 1e-12) for i in range(3))


def test_fatou_boundary_value_below_radial_liminf():
    M = MeasureM.from_symbol(make_atoms([(2.0, 0.5)]))  # atom away from 1
    at_one = condition_value(M, 1.0 + 0j, 0)
    radial = [condition_value(M, r, 0) for r in (0.9, 0.99, 0.999, 0.9999)]
    assert at_one <= min(radial) * (1 + 1e-6)
    assert at_one == pytest.approx(0.5 / abs(1 - cmath.exp(-2.0j)) ** 2, rel=1e-12)


# --------------------------------------------------------------------------
# limit probe
# --------------------------------------------------------------------------


def test_limit_probe_constant_sequence_converges():
    verdict = limit_probe([2.5] * 8)
    assert verdict.converged
    assert verdict.estimate == 2.5
    assert all(d == 0.0 for d in verdict.diffs)


def test_limit_probe_divergence_detected():
    rs = [1 - 2.0**-k for k in range(1, 9)]
    values = [1.0 / (1 - r) for r in rs]
    assert not limit_probe(values).converged


def test_limit_probe_oscillation_detected():
    values = [2 + (-1) ** n * 0.5 for n in range(10)]
    assert not limit_probe(values).converged


def test_limit_probe_needs_six_samples():
    with pytest.raises(ContractError):
        limit_probe([1.0] * 5)


def test_limit_probe_geometric_decay_converges():
    values = [1 + 4.0**-k for k in range(8)]
    verdict = limit_probe(values)
    assert verdict.converged
    assert verdict.estimate == pytest.approx(1.0, abs=1e-4)


# --------------------------------------------------------------------------
# samplers and scans
# --------------------------------------------------------------------------


def test_path_sampler_levels_nest():
    sampler = PathSampler(x_start=0.2, x_end=1e-3, count=16, levels=3)
    levels = sampler.level_angles()
    assert [len(lv) for lv in levels] == [16, 31, 61]
    for coarse, fine in zip(levels, levels[1:]):
        fine_set = set(float(x) for x in fine)
        assert all(float(x) in fine_set for x in coarse)


def test_path_sampler_extension_pushes_past_the_window():
    base = PathSampler(x_start=0.2, x_end=1e-3, count=16, levels=2, extend_factor=4.0)
    levels = base.level_angles()
    assert min(levels[1]) < 1e-3 / 4 + 1e-12
    plain = PathSampler(x_start=0.2, x_end=1e-3, count=16, levels=2, extend_factor=1.0)
    assert min(plain.level_angles()[1]) == pytest.approx(1e-3)


def test_path_sampler_validation():
    with pytest.raises(ContractError):
        PathSampler(x_start=1e-4, x_end=0.2)  # must decrease
    with pytest.raises(ContractError):
        PathSampler(count=1)
    with pytest.raises(ContractError):
        PathSampler(side="sideways")


def test_sup_scan_on_identity_symbol():
    sym = make_blaschke([0.0])
    M = MeasureM.from_symbol(sym)
    region = ApproachRegion.nontangential(1.0)
    report = sup_scan(M, region, 0, PathSampler(count=16, levels=2), sym=sym)
    # per-level sups; densification leaves the constant family at 1
    assert all(s == pytest.approx(1.0, rel=1e-12) for s in report.sup_condition)
    assert report.sup_bounded
    assert report.growth_last == pytest.approx(0.0, abs=1e-12)
    assert len(report.probes) == 31
    for p in report.probes:
        assert p.norm_sq_fd == pytest.approx(1.0, rel=1e-9)
        assert p.norm_sq_series == pytest.approx(1.0, rel=1e-12)
    assert report.limit_exists is True


def test_sup_scan_detects_unbounded_family():
    sym = make_atoms([(0.0, 1.0)])  # atom exactly at the approach point
    M = MeasureM.from_symbol(sym)
    region = ApproachRegion.nontangential(1.0)
    # densification alone saturates at the window edge; path extension is
    # what exposes endpoint growth (J ~ 1/(2 x^2) on the cone boundary)
    dense_only = sup_scan(M, region, 0, PathSampler(count=16, levels=2))
    assert dense_only.growth_last == pytest.approx(0.0, abs=1e-12)
    extended = sup_scan(
        M, region, 0, PathSampler(count=16, levels=3, extend_factor=4.0)
    )
    assert not extended.sup_bounded
    assert extended.growth_last > 0.10
    sups = extended.sup_condition
    assert sups[-1] > 10 * sups[0]


def test_family_l1_bound_matches_sup_scan():
    M = mixed_measure()
    region = ApproachRegion.from_rho(RhoFunction.power(1.0, 2.0))
    sampler = PathSampler(x_start=0.3, x_end=1e-2, count=24, levels=2)
    quad = QuadratureConfig(tolerance=1e-12)
    bound = family_l1_bound(M, region, 0, sampler, quad)
    report = sup_scan(M, region, 0, sampler, quad)
    assert bound == pytest.approx(report.sup_condition[-1], rel=1e-10)


def test_probe_point_fills_every_applicable_column():
    sym = make_blaschke([0.0, 0.0])
    M = MeasureM.from_symbol(sym)
    p = probe_point(M, 0.5j, 1, sym=sym)
    assert p.norm_sq_fd == pytest.approx(1.0, abs=1e-6)
    assert p.norm_sq_series == pytest.approx(1.0, abs=1e-12)
    assert p.norm_sq_zero_free is None  # has zeros, m = 1
    assert p.condition_value > 0
    assert p.localized_value >= 0
    bare = probe_point(M, 0.5j, 1)
    assert bare.norm_sq_fd is None and bare.norm_sq_series is None
