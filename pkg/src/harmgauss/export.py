"""Field sweeps and triangle-mesh export over rectangular grids."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Dict, List, Optional

from .gauss import curvature_sign, gauss_derivatives, jet, mn_quantities
from .rational import format_rational
from .surface import HarmonicSurface, tangents

SWEEP_COLUMNS = ("x", "y", "regular", "gauss_regular", "dist_sq_surface",
                 "dist_sq_gauss", "m_value", "curvature_sign")


def sweep_row(s: HarmonicSurface, pt) -> Dict[str, object]:
    """Exact field values at one node; branch and Gauss-degenerate nodes are flagged, not dropped."""
    x, y = s.check_point(pt)
    row: Dict[str, object] = dict.fromkeys(SWEEP_COLUMNS)
    row.update(x=x, y=y)
    t = tangents(s, (x, y))
    row["regular"] = bool(t.g_sq)
    if not t.g_sq:
        row["gauss_regular"] = False
        return row
    row["dist_sq_surface"] = t.energy ** 2 / (4 * t.g_sq)
    row["curvature_sign"] = curvature_sign(s, (x, y))
    gd = gauss_derivatives(s, (x, y))
    row["gauss_regular"] = not gd.degenerate
    if s.is_normalized():
        row["m_value"] = mn_quantities(jet(s, (x, y))).m
    if not gd.degenerate:
        row["dist_sq_gauss"] = gd.sum_sq_num ** 2 * gd.g ** 2 / (4 * sum(c * c for c in gd.cross_num))
    return row


def _cell(value, as_float: bool) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{float(value):.17g}" if as_float else format_rational(value)
    return str(value)


def _json_value(value, as_float: bool):
    if isinstance(value, Fraction):
        return float(value) if as_float else format_rational(value)
    return value


def rows_to_csv(rows: List[Dict[str, object]], as_float: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow([_cell(row[c], as_float) for c in SWEEP_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: List[Dict[str, object]], as_float: bool = False) -> str:
    data = [{c: _json_value(row[c], as_float) for c in SWEEP_COLUMNS} for row in rows]
    return json.dumps(data, indent=2) + "\n"


def mesh_text(s: HarmonicSurface, nx: int, ny: int, domain=None) -> str:
    """``v x y z`` lines (17 significant digits, row-major grid order) then 1-based ``f i j k``.

    Each grid cell (i, j) is split along the diagonal from (i, j) to (i+1, j+1).
    """
    dom = domain or s.domain
    lines = []
    for pt in dom.grid(nx, ny):
        pos = s.position(pt)
        lines.append("v " + " ".join(f"{float(c):.17g}" for c in pos))
    for j in range(ny - 1):
        for i in range(nx - 1):
            v00 = j * nx + i + 1
            v10, v01 = v00 + 1, v00 + nx
            v11 = v01 + 1
            lines.append(f"f {v00} {v10} {v11}")
            lines.append(f"f {v00} {v11} {v01}")
    return "\n".join(lines) + "\n"


def parse_cell(text: str) -> Optional[Fraction]:
    return Fraction(text) if text else None
