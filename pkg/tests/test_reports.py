"""Wire-format tests: scan CSV layout and JSON report rendering.

Scan files must be byte-stable (17-significant-digit floats, fixed column
order, "\n" newlines) and complex literals must round-trip through the
"a+bi" form with a mandatory sign.
"""

import cmath
import io
import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hbkern.conditions import MeasureM, probe_point
from hbkern.errors import ContractError
from hbkern.points import DiskPoint
from hbkern.reports import (
    CSV_COLUMNS,
    dump_json,
    format_complex,
    format_float,
    parse_complex,
    probe_row,
    read_scan_csv,
    scan_csv_text,
    to_jsonable,
    write_scan_csv,
)
from conftest import make_blaschke

_finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


def _probes(n=3):
    sym = make_blaschke([0j])
    M = MeasureM.from_symbol(sym)
    deficits = (0.1, 0.2, 0.3)
    return [
        probe_point(M, DiskPoint(deficits[k], 0.2), 0, sym=sym) for k in range(n)
    ]


# ---------------------------------------------------------------------------
# float and complex literals


def test_format_float_17_digits():
    assert format_float(1.0) == "1"
    assert format_float(math.pi) == "3.1415926535897931"
    assert format_float(None) == ""


@given(_finite)
def test_format_float_round_trips(x):
    assert float(format_float(x)) == x


def test_format_complex_mandatory_sign():
    assert format_complex(1 + 2j) == "1+2i"
    assert format_complex(1 - 2j) == "1-2i"
    assert format_complex(0.5 + 0j) == "0.5+0i"
    assert format_complex(-1.5 - 0.25j) == "-1.5-0.25i"


@given(_finite, _finite)
def test_complex_literal_round_trips(re, im):
    z = complex(re, im)
    assert parse_complex(format_complex(z)) == z


def test_parse_complex_accepts_spaced_form():
    assert parse_complex(" 0.5+0i ") == 0.5 + 0j


@pytest.mark.parametrize(
    "bad", ["", "1", "1+2j", "i", "1+i2", "2i", "1 + 2i", "one+twoi", "1+2"]
)
def test_parse_complex_rejects_malformed(bad):
    with pytest.raises(ContractError, match="complex literal"):
        parse_complex(bad)


# ---------------------------------------------------------------------------
# scan CSV


def test_csv_column_order():
    assert CSV_COLUMNS == (
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


def test_scan_csv_layout():
    text = scan_csv_text(_probes(2))
    lines = text.split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4 and lines[-1] == ""
    first = lines[1].split(",")
    assert len(first) == len(CSV_COLUMNS)
    # polar columns carry the exact path data, not recomputed floats
    assert float(first[2]) == 0.1  # 1 - |z| for the first probe
    assert float(first[3]) == 0.2


def test_scan_csv_empty_cells_for_missing_quantities():
    sym = make_blaschke([0j])
    M = MeasureM.from_symbol(sym)
    bare = probe_point(M, DiskPoint(0.5, 0.0), 0)  # no symbol: no norm columns
    row = probe_row(bare)
    cols = dict(zip(CSV_COLUMNS, row))
    assert cols["norm_sq_fd"] == ""
    assert cols["norm_sq_series"] == ""
    assert cols["condition_value"] != ""


def test_write_scan_csv_to_path_and_stream_agree(tmp_path):
    probes = _probes()
    path = tmp_path / "scan.csv"
    write_scan_csv(str(path), probes)
    buf = io.StringIO()
    write_scan_csv(buf, probes)
    assert path.read_text() == buf.getvalue() == scan_csv_text(probes)


def test_read_scan_csv_round_trip(tmp_path):
    probes = _probes()
    path = tmp_path / "scan.csv"
    write_scan_csv(str(path), probes)
    cols = read_scan_csv(str(path))
    assert set(cols) == set(CSV_COLUMNS)
    np.testing.assert_array_equal(cols["one_minus_mod"], [0.1, 0.2, 0.3])
    assert cols["condition_value"][0] == probes[0].condition_value


def test_read_scan_csv_missing_cells_become_nan(tmp_path):
    sym = make_blaschke([0j])
    M = MeasureM.from_symbol(sym)
    path = tmp_path / "scan.csv"
    write_scan_csv(str(path), [probe_point(M, DiskPoint(0.5, 0.0), 0)])
    cols = read_scan_csv(str(path))
    assert math.isnan(cols["norm_sq_fd"][0])


def test_read_scan_csv_rejects_foreign_header(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("x,y\n1,2\n")
    with pytest.raises(ContractError, match="header"):
        read_scan_csv(str(path))


# ---------------------------------------------------------------------------
# JSON reports


def test_dump_json_sorted_and_newline_terminated():
    text = dump_json({"b": 1, "a": 2})
    assert text == '{\n  "a": 2,\n  "b": 1\n}\n'


def test_to_jsonable_encodes_complex_and_numpy():
    out = to_jsonable(
        {
            "z": 1 - 2j,
            "arr": np.arange(3.0),
            "scalar": np.float64(0.5),
            "seq": (1, 2),
            "r": range(2),
        }
    )
    assert out["z"] == "1-2i"
    assert out["arr"] == [0.0, 1.0, 2.0]
    assert out["scalar"] == 0.5
    assert out["seq"] == [1, 2]
    assert out["r"] == [0, 1]
    json.dumps(out)  # fully serializable


def test_to_jsonable_walks_dataclasses():
    from hbkern.experiments import CheckResult

    out = to_jsonable(CheckResult(name="x", passed=True, value=1.0, target="t"))
    assert out == {"name": "x", "passed": True, "value": 1.0, "target": "t", "note": ""}


def test_dump_json_writes_to_file(tmp_path):
    path = tmp_path / "report.json"
    text = dump_json({"z": 1j}, str(path))
    assert path.read_text() == text
    assert json.loads(text)["z"] == "0+1i"
