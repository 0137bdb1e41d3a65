"""CSV and legacy-VTK output of fields, slices and diagnostic series."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .curl import discrete_div
from .grid import ConfigurationError, Grid
from .physics import GAMMA, cons_to_prim

PRIM_NAMES = ("rho", "u1", "u2", "u3", "p", "B1", "B2", "B3")
AXIS_NAMES = ("x", "y", "z")


def point_table(q: np.ndarray, a: np.ndarray | None, grid: Grid, gamma: float = GAMMA):
    """Column names and interior-point columns (x-fastest ordering)."""
    inner = (slice(None),) + grid.interior
    w = cons_to_prim(q[inner], gamma, check=False)
    cols = {}
    for axis, c in enumerate(grid.mesh()):
        cols[AXIS_NAMES[axis]] = c
    for name, v in zip(PRIM_NAMES, w):
        cols[name] = v
    cols["divB"] = discrete_div(q[5 : 5 + grid.ndim], grid)
    if a is not None:
        names = ["A3"] if a.shape[0] == 1 else ["A1", "A2", "A3"]
        for name, v in zip(names, a[inner]):
            cols[name] = v
    # ravel in Fortran order so x varies fastest
    return list(cols), np.stack([np.ravel(v, order="F") for v in cols.values()], axis=1)


def write_csv(path, header, rows) -> Path:
    path = Path(path)
    try:
        with path.open("w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(header)
            for row in rows:
                wr.writerow([f"{v:.17g}" for v in row])
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path


def read_csv(path):
    with Path(path).open() as fh:
        rd = csv.reader(fh)
        header = next(rd)
        data = np.array([[float(v) for v in row] for row in rd])
    return header, data


def write_vtk(path, grid: Grid, arrays: dict, title: str = "wenoct output") -> Path:
    """Legacy ASCII STRUCTURED_POINTS dataset with one scalar array per entry."""
    path = Path(path)
    dims = list(grid.n) + [1] * (3 - grid.ndim)
    origin = list(grid.origin) + [0.0] * (3 - grid.ndim)
    spacing = list(grid.spacing) + [1.0] * (3 - grid.ndim)
    npts = int(np.prod(dims))
    lines = [
        "# vtk DataFile Version 3.0",
        title[:255],
        "ASCII",
        "DATASET STRUCTURED_POINTS",
        "DIMENSIONS {} {} {}".format(*dims),
        "ORIGIN {:.17g} {:.17g} {:.17g}".format(*origin),
        "SPACING {:.17g} {:.17g} {:.17g}".format(*spacing),
        f"POINT_DATA {npts}",
    ]
    for name, values in arrays.items():
        flat = np.ravel(values, order="F")
        if flat.size != npts:
            raise ConfigurationError(f"array {name} has {flat.size} values, expected {npts}")
        lines.append(f"SCALARS {name} double 1")
        lines.append("LOOKUP_TABLE default")
        lines.extend(f"{v:.17g}" for v in flat)
    try:
        path.write_text("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path


def write_fields(q, a, grid: Grid, fmt: str, path, gamma: float = GAMMA, extra=None) -> Path:
    header, table = point_table(q, a, grid, gamma)
    if extra:
        for name, values in extra.items():
            header.append(name)
            table = np.column_stack([table, np.ravel(values, order="F")])
    if fmt == "csv":
        return write_csv(path, header, table)
    if fmt == "vtk":
        arrays = {
            name: table[:, k].reshape(grid.n, order="F")
            for k, name in enumerate(header)
            if name not in AXIS_NAMES
        }
        return write_vtk(path, grid, arrays)
    raise ConfigurationError(f"unknown output format {fmt!r}")


def slice_extract(q, a, grid: Grid, axis: int, position: float, gamma: float = GAMMA):
    """Records on the grid line/plane nearest to ``coord[axis] = position``.

    Returns ``(header, rows)`` with x-fastest ordering.
    """
    lo = grid.origin[axis] - 0.5 * grid.spacing[axis]
    hi = grid.origin[axis] + (grid.n[axis] - 0.5) * grid.spacing[axis]
    if not lo <= position <= hi:
        raise ConfigurationError(f"slice position {position} outside [{lo}, {hi}] on axis {axis}")
    k = int(np.clip(np.rint((position - grid.origin[axis]) / grid.spacing[axis]), 0, grid.n[axis] - 1))
    header, table = point_table(q, a, grid, gamma)
    idx = np.indices(grid.n)[axis].ravel(order="F")
    return header, table[idx == k]


def write_series(path, records) -> Path:
    """Diagnostics time series (one row per record)."""
    records = list(records)
    if not records:
        raise ConfigurationError("no diagnostic records to write")
    d0 = records[0].as_dict()
    path = Path(path)
    with path.open("w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(list(d0))
        for r in records:
            wr.writerow([v if isinstance(v, int) else f"{v:.17g}" for v in r.as_dict().values()])
    return path
