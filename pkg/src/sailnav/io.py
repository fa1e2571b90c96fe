"""Trajectory CSV and results JSON."""

import csv
import json
import math

import numpy as np

from .dynamics import CartesianState, to_geographic
from .engine import EVENT_NAMES, Trajectory

BASE_COLUMNS = ["t", "r", "theta", "x", "y", "tack", "wind_angle", "event"]
GEO_COLUMNS = ["xi1", "xi2"]


def _fmt(x: float) -> str:
    return repr(float(x))


def geographic_xy(traj: Trajectory):
    """Geographic coordinates of every record.

    The geographic wind direction is the negative of the rotating-frame wind
    angle, which keeps a motionless boat fixed on the map.
    """
    xi1 = np.empty(len(traj))
    xi2 = np.empty(len(traj))
    for k, (x, y, w) in enumerate(zip(traj.x, traj.y, traj.wind)):
        g = to_geographic(CartesianState(x, y), -w)
        xi1[k], xi2[k] = g.x, g.y
    return xi1, xi2


def write_trajectory_csv(path, traj: Trajectory, geographic: bool = False) -> None:
    cols = BASE_COLUMNS + (GEO_COLUMNS if geographic else [])
    xs, ys = traj.x, traj.y
    if geographic:
        xi1, xi2 = geographic_xy(traj)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(cols)
        for k in range(len(traj)):
            row = [_fmt(traj.t[k]), _fmt(traj.r[k]), _fmt(traj.theta[k]), _fmt(xs[k]), _fmt(ys[k]),
                   str(int(traj.tack[k])), _fmt(traj.wind[k]), EVENT_NAMES[int(traj.event[k])]]
            if geographic:
                row += [_fmt(xi1[k]), _fmt(xi2[k])]
            w.writerow(row)


def read_trajectory_csv(path) -> Trajectory:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file") from None
        missing = [c for c in ("t", "r", "theta", "tack", "wind_angle", "event") if c not in header]
        if missing:
            raise ValueError(f"{path}: missing columns {missing}")
        ix = {c: header.index(c) for c in header}
        rows = list(reader)
    cols = {k: [] for k in ("t", "r", "theta", "tack", "wind", "event")}
    for n, row in enumerate(rows, start=2):
        if len(row) != len(header):
            raise ValueError(f"{path}:{n}: expected {len(header)} fields, got {len(row)}")
        try:
            cols["t"].append(float(row[ix["t"]]))
            cols["r"].append(float(row[ix["r"]]))
            cols["theta"].append(float(row[ix["theta"]]))
            cols["tack"].append(int(row[ix["tack"]]))
            cols["wind"].append(float(row[ix["wind_angle"]]))
            cols["event"].append(EVENT_NAMES.index(row[ix["event"]]))
        except ValueError as exc:
            raise ValueError(f"{path}:{n}: {exc}") from None
    return Trajectory(
        np.array(cols["t"], dtype=float),
        np.array(cols["r"], dtype=float),
        np.array(cols["theta"], dtype=float),
        np.array(cols["tack"], dtype=np.int64),
        np.array(cols["wind"], dtype=float),
        np.array(cols["event"], dtype=np.int64),
    )


def jsonable(obj):
    """Recursively convert to plain JSON types; NaN becomes null, infinities become strings."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return None
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"
