"""Minimal SVG rendering of a trajectory in the rotating or geographic frame."""

from xml.sax.saxutils import escape

import numpy as np

from .dynamics import CartesianState, to_geographic
from .engine import EV_SHIFT, EV_TACK, Trajectory
from .io import geographic_xy, read_trajectory_csv

SIZE = 600
PAD = 40


def _frame_points(traj: Trajectory, frame: str):
    if frame == "rotating":
        return traj.x, traj.y
    if frame == "geographic":
        return geographic_xy(traj)
    raise ValueError(f"frame must be 'rotating' or 'geographic', got {frame!r}")


def _laylines(frame: str, wind0: float, extent: float):
    """Two segments from the target along the laylines of the initial wind."""
    ends = [CartesianState(extent, 0.0), CartesianState(0.0, extent)]
    if frame == "geographic":
        ends = [to_geographic(e, -wind0) for e in ends]
    return [(e.x, e.y) for e in ends]


def render_svg(traj: Trajectory, frame: str = "rotating", eta: float = 0.0, title: str = "") -> str:
    xs, ys = _frame_points(traj, frame)
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    extent = max([1.0, eta] + ([float(np.max(np.hypot(xs, ys)))] if len(xs) else []))
    extent *= 1.1
    scale = (SIZE - 2 * PAD) / (2 * extent)

    def px(x, y):
        return PAD + (x + extent) * scale, SIZE - PAD - (y + extent) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<title>{escape(title or frame + " frame")}</title>',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    x0, y0 = px(-extent, 0)
    x1, y1 = px(extent, 0)
    out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" stroke="#ddd"/>')
    x0, y0 = px(0, -extent)
    x1, y1 = px(0, extent)
    out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" stroke="#ddd"/>')
    wind0 = float(traj.wind[0]) if len(traj) else 0.0
    cx, cy = px(0, 0)
    for ex, ey in _laylines(frame, wind0, extent):
        lx, ly = px(ex, ey)
        out.append(f'<line class="layline" x1="{cx:.2f}" y1="{cy:.2f}" x2="{lx:.2f}" y2="{ly:.2f}" '
                   'stroke="#4a90d9" stroke-dasharray="6,4"/>')
    rad = max(eta * scale, 2.0)
    out.append(f'<circle class="target" cx="{cx:.2f}" cy="{cy:.2f}" r="{rad:.2f}" fill="none" stroke="#d0021b"/>')
    if len(xs):
        pts = " ".join("{:.2f},{:.2f}".format(*px(x, y)) for x, y in zip(xs, ys))
        out.append(f'<polyline class="path" points="{pts}" fill="none" stroke="black" stroke-width="1.2"/>')
        for k in np.flatnonzero(traj.event == EV_TACK):
            mx, my = px(xs[k], ys[k])
            out.append(f'<circle class="tack" cx="{mx:.2f}" cy="{my:.2f}" r="3" fill="#f5a623"/>')
        for k in np.flatnonzero(traj.event == EV_SHIFT):
            mx, my = px(xs[k], ys[k])
            out.append(f'<rect class="wind_shift" x="{mx - 2:.2f}" y="{my - 2:.2f}" width="4" height="4" '
                       'fill="#7ed321"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_plot(csv_path, frame: str, out_path, eta: float = 0.0) -> None:
    traj = read_trajectory_csv(csv_path)
    svg = render_svg(traj, frame, eta, title=f"{frame} frame")
    with open(out_path, "w") as fh:
        fh.write(svg)

