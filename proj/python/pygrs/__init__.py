"""Exact HeLP, construction and pattern computations for PSL(2,p^2) and PSL(3,3)."""

import os as _os

_pkg_data = _os.path.join(_os.path.dirname(__file__), "data")
if _os.path.isfile(_os.path.join(_pkg_data, "psl33.tbl")):
    _os.environ.setdefault("GRS_DATA_DIR", _pkg_data)

from ._core import (  # noqa: E402
    Cyclotomic,
    GrsError,
    construct,
    data_dir,
    gap_report,
    help_scan,
    oracle,
    orthogonal,
    square_lines,
    table,
)

__all__ = [
    "Cyclotomic",
    "GrsError",
    "construct",
    "data_dir",
    "gap_report",
    "help_scan",
    "oracle",
    "orthogonal",
    "square_lines",
    "table",
]
