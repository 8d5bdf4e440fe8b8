"""Reproducing-kernel boundary behaviour for inner-outer symbols on the disk.

Evaluate de Branges-Rovnyak reproducing kernels and their derivative norms
for symbols given in factored form (Blaschke zeros, singular atoms, outer
log-density), the boundary-condition functionals that govern higher-order
regularity at a boundary point, and pre-packaged experiments probing the
limit theorems — including the tangential counterexample where derivative
limits split by exactly 2 between a region path and the radius.

Hot inner loops run through a compiled extension when available; the
pure-NumPy fallback (``HBKERN_PURE=1``) is numerically identical.
"""
from ._hot import ACTIVE_IMPL
from .conditions import (
    LimitVerdict,
    MeasureM,
    PathSampler,
    ScanReport,
    complement_value,
    condition_value,
    family_l1_bound,
    limit_probe,
    localized_value,
    probe_point,
    sup_scan,
)
from .errors import ContractError, DomainError, PoleError
from .experiments import (
    ExperimentReport,
    TheoremCSpec,
    build_theorem_c_symbol,
    registry_symbol,
    run_experiment,
    run_theorem_a_probe,
    run_theorem_b_probe,
    run_theorem_c,
    run_theorem_d_probe,
)
from .kernels import (
    FdEstimate,
    KernelProbe,
    boundary_kernel_value,
    decomposition_check,
    kernel_value,
    magic_formula_check,
    norm_sq,
    norm_sq_blaschke_series,
    norm_sq_fd,
    s_function,
    zero_free_identity_values,
    zero_free_norm_sq,
)
from .points import DiskPoint, polar_parts, wrap_angle
from .quadrature import QuadratureConfig, QuadratureError, integrate_circle
from .regions import (
    ApproachRegion,
    Arc,
    RhoFunction,
    arc_E,
    boundary_path,
    calc_lemma_check,
    contains,
    estimate_check,
    in_sector_S,
    parse_region,
    radial_path,
)
from .symbols import (
    BlaschkeData,
    OuterLogDensity,
    SingularAtoms,
    Symbol,
    boundary_log_modulus,
    eval_blaschke,
    eval_derivatives,
    eval_outer,
    eval_singular_inner,
    eval_symbol,
    log_derivative,
    neg_log_modulus,
    product_symbol,
    symbol_from_spec,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_IMPL",
    "__version__",
    # points & plumbing
    "DiskPoint",
    "polar_parts",
    "wrap_angle",
    "QuadratureConfig",
    "QuadratureError",
    "integrate_circle",
    "ContractError",
    "DomainError",
    "PoleError",
    # symbols
    "BlaschkeData",
    "SingularAtoms",
    "OuterLogDensity",
    "Symbol",
    "symbol_from_spec",
    "product_symbol",
    "eval_blaschke",
    "eval_singular_inner",
    "eval_outer",
    "eval_symbol",
    "eval_derivatives",
    "log_derivative",
    "neg_log_modulus",
    "boundary_log_modulus",
    # kernels
    "kernel_value",
    "boundary_kernel_value",
    "norm_sq",
    "norm_sq_fd",
    "norm_sq_blaschke_series",
    "zero_free_norm_sq",
    "zero_free_identity_values",
    "s_function",
    "magic_formula_check",
    "decomposition_check",
    "FdEstimate",
    "KernelProbe",
    # regions
    "ApproachRegion",
    "RhoFunction",
    "Arc",
    "arc_E",
    "in_sector_S",
    "contains",
    "boundary_path",
    "radial_path",
    "estimate_check",
    "calc_lemma_check",
    "parse_region",
    # conditions
    "MeasureM",
    "condition_value",
    "localized_value",
    "complement_value",
    "probe_point",
    "family_l1_bound",
    "sup_scan",
    "limit_probe",
    "PathSampler",
    "ScanReport",
    "LimitVerdict",
    # experiments
    "TheoremCSpec",
    "build_theorem_c_symbol",
    "run_theorem_c",
    "run_theorem_a_probe",
    "run_theorem_b_probe",
    "run_theorem_d_probe",
    "run_experiment",
    "registry_symbol",
    "ExperimentReport",
]
