"""Serialization of probe rows and reports.

Two wire formats:

* scan CSV — one row per probed point, fixed column order, floats rendered
  with 17 significant digits so the text round-trips the binary value.
  Identical inputs produce byte-identical files regardless of worker count.
* JSON reports — nested report dataclasses rendered with sorted keys and
  complex numbers as ``"a+bi"`` strings.  ``wall_clock_seconds`` is the one
  field allowed to differ between otherwise identical runs.
"""
from __future__ import annotations

import dataclasses
import io
import json
import re
from typing import Any, Iterable, Optional, Sequence, TextIO, Union

import numpy as np

from .errors import ContractError
from .kernels import KernelProbe
from .points import polar_parts

CSV_COLUMNS = (
    "re_z",
    "im_z",
    "one_minus_mod",
    "arg_z",
    "m",
    "norm_sq_fd",
    "norm_sq_series",
    "condition_value",
    "localized_value",
    "fd_error_est",
)

_COMPLEX_RE = re.compile(
    r"""^\s*
    (?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    (?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    i\s*$""",
    re.VERBOSE,
)


def format_float(value: Optional[float]) -> str:
    """Render ``value`` with 17 significant digits; ``None`` becomes empty."""
    if value is None:
        return ""
    return format(float(value), ".17g")


def format_complex(z: complex) -> str:
    """Render ``z`` as ``a+bi`` with a mandatory imaginary sign."""
    z = complex(z)
    return f"{format(z.real, '.17g')}{format(z.imag, '+.17g')}i"


def parse_complex(text: str) -> complex:
    """Parse the ``a+bi`` literal form (sign before the imaginary part is
    mandatory, suffix is ``i``)."""
    match = _COMPLEX_RE.match(text)
    if match is None:
        raise ContractError(
            f"complex literal must look like 'a+bi' (e.g. '0.5-0.25i'), got {text!r}"
        )
    return complex(float(match.group("re")), float(match.group("im")))


def probe_row(probe: KernelProbe) -> list[str]:
    """CSV cells for one probe, in :data:`CSV_COLUMNS` order."""
    one_minus_mod, arg_z = polar_parts(probe.z)
    return [
        format_float(complex(probe.z).real),
        format_float(complex(probe.z).imag),
        format_float(one_minus_mod),
        format_float(arg_z),
        str(probe.m),
        format_float(probe.norm_sq_fd),
        format_float(probe.norm_sq_series),
        format_float(probe.condition_value),
        format_float(probe.localized_value),
        format_float(probe.fd_error_est),
    ]


def write_scan_csv(dest: Union[str, TextIO], probes: Iterable[KernelProbe]) -> None:
    """Write probes as CSV with the mandatory header row.

    ``dest`` is a path or an open text stream.  Rows are emitted in input
    order with ``\\n`` newlines, so the bytes depend only on the probe values.
    """
    if isinstance(dest, (str, bytes)):
        with open(dest, "w", encoding="utf-8", newline="") as handle:
            write_scan_csv(handle, probes)
        return
    dest.write(",".join(CSV_COLUMNS) + "\n")
    for probe in probes:
        dest.write(",".join(probe_row(probe)) + "\n")


def scan_csv_text(probes: Iterable[KernelProbe]) -> str:
    """The exact CSV text :func:`write_scan_csv` would produce."""
    buffer = io.StringIO()
    write_scan_csv(buffer, probes)
    return buffer.getvalue()


def to_jsonable(obj: Any) -> Any:
    """Recursively convert report objects to JSON-ready values.

    Dataclasses become dicts, complex numbers become ``a+bi`` strings, numpy
    scalars/arrays are unwrapped, and non-finite floats are kept as-is (the
    emitter writes them as ``Infinity``/``NaN`` tokens).
    """
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            field.name: to_jsonable(getattr(obj, field.name))
            for field in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(item) for item in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(item) for item in obj.tolist()]
    if isinstance(obj, complex):
        return format_complex(obj)
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, range):
        return list(obj)
    return obj


def dump_json(payload: Any, dest: Union[str, TextIO, None] = None) -> str:
    """Serialize ``payload`` deterministically (sorted keys, indent 2).

    Returns the text; also writes it to ``dest`` when given.
    """
    text = json.dumps(to_jsonable(payload), indent=2, sort_keys=True) + "\n"
    if isinstance(dest, (str, bytes)):
        with open(dest, "w", encoding="utf-8") as handle:
            handle.write(text)
    elif dest is not None:
        dest.write(text)
    return text


def read_scan_csv(path: str) -> dict[str, np.ndarray]:
    """Load a scan CSV back into column arrays (empty cells become NaN)."""
    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline().strip().split(",")
        if tuple(header) != CSV_COLUMNS:
            raise ContractError(f"unexpected scan CSV header: {header}")
        rows = [line.rstrip("\n").split(",") for line in handle if line.strip()]
    columns: dict[str, np.ndarray] = {}
    for index, name in enumerate(CSV_COLUMNS):
        cells = [row[index] for row in rows]
        columns[name] = np.array(
            [float(cell) if cell else np.nan for cell in cells], dtype=float
        )
    return columns
