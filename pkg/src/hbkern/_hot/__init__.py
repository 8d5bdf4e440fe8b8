"""Accelerated inner loops with a compiled/pure dispatch.

The compiled extension (``_core``, built from ``_core.pyx``) is optional: if
it is missing, or if ``HBKERN_PURE=1`` is set in the environment, the
NumPy fallback is used instead.  Both expose the same functions with the same
semantics; ``ACTIVE_IMPL`` records which one won.
"""
from __future__ import annotations

import os

from . import fallback

if os.environ.get("HBKERN_PURE", "0") == "1":
    _impl = fallback
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = fallback

ACTIVE_IMPL: str = _impl.IMPL

powered_atom_sum = _impl.powered_atom_sum
poisson_power_weights = _impl.poisson_power_weights
herglotz_atom_sum = _impl.herglotz_atom_sum
cauchy_power_atom_sum = _impl.cauchy_power_atom_sum
blaschke_norm_series_m0 = _impl.blaschke_norm_series_m0

__all__ = [
    "ACTIVE_IMPL",
    "powered_atom_sum",
    "poisson_power_weights",
    "herglotz_atom_sum",
    "cauchy_power_atom_sum",
    "blaschke_norm_series_m0",
]
