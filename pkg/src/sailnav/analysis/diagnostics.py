"""Numerical diagnostics: strong convergence against the closed forms and a
martingale check of t + V(R_t, Theta_t) along simulated paths."""

import math
from dataclasses import dataclass, replace
from typing import Sequence, Tuple

import numpy as np

from ..dynamics import (
    HALF_PI,
    STARBOARD,
    CartesianState,
    ModelParams,
    PolarState,
    closed_form_radial,
    closed_form_velocity,
    from_polar,
)
from ..engine import SimConfig, run, step_polar
from ..strategies import FeedbackAStar
from ..wind import path_rng
from .montecarlo import McAccumulator, McEstimate


@dataclass(frozen=True)
class ConvergenceReport:
    dts: Tuple[float, ...]
    rms_errors: Tuple[float, ...]
    slope: float
    monotone: bool
    radial_max_error: float
    radial_steps: int


def _euler_cartesian(x0, y0, v_vec, sigma, dw, dt):
    """Euler-Maruyama for dX = (v + mu_c(X)) dt + Sigma(X) dW, vectorised over paths."""
    x = np.full(dw.shape[0], x0, dtype=float)
    y = np.full(dw.shape[0], y0, dtype=float)
    k = -0.5 * sigma * sigma
    v1, v2 = v_vec
    for j in range(dw.shape[1]):
        d = dw[:, j]
        x, y = x + (v1 + k * x) * dt - sigma * y * d, y + (v2 + k * y) * dt + sigma * x * d
    return x, y


def _slope(dts, errs):
    lx = np.log(np.asarray(dts, dtype=float))
    ly = np.log(np.asarray(errs, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


def radial_check(params: ModelParams, r_start: float, dt: float, seed: int = 0,
                 max_steps: int = 100_000) -> Tuple[float, int]:
    """Step the polar scheme from angle 3pi/4 on starboard until the angle leaves [pi/2, pi).

    Returns the largest deviation from the radial closed form (radius and
    Cartesian position), and the number of steps compared.
    """
    rng = path_rng(seed, 0)
    s0 = PolarState(r_start, 0.75 * math.pi)
    x0 = from_polar(s0)
    s = s0
    wind = 0.0
    worst = 0.0
    k = 0
    while k < max_steps:
        if not (HALF_PI <= s.theta < math.pi):
            break
        if s.r - params.v * dt <= params.eta:
            break
        db = params.sigma * math.sqrt(dt) * rng.standard_normal()
        s = step_polar(s, STARBOARD, db, dt, params)
        wind += db
        k += 1
        t = k * dt
        exact = closed_form_radial(x0, params, wind, t)
        p = from_polar(s)
        worst = max(worst, abs(s.r - (r_start - params.v * t)), abs(p.x - exact.x), abs(p.y - exact.y))
    return worst, k


def convergence_study(params: ModelParams, dts: Sequence[float], n_paths: int, T: float = 1.0,
                      x0: CartesianState = CartesianState(1.0, 1.0), v_vec=(0.0, -1.0),
                      seed: int = 0, block: int = 64) -> ConvergenceReport:
    """Strong endpoint error of Euler against the constant-velocity closed form.

    Brownian increments live on a grid ten times finer than the smallest dt;
    coarse increments are block sums of the fine ones, and the closed form is
    evaluated on the fine grid.
    """
    dts = tuple(sorted((float(d) for d in dts), reverse=True))
    h = dts[-1] / 10
    n_fine = int(round(T / h))
    ratios = []
    for dt in dts:
        q = dt / h
        if abs(q - round(q)) > 1e-6 or abs(n_fine * h - T) > 1e-9:
            raise ValueError("every dt must be a multiple of the fine step and divide T")
        ratios.append(int(round(q)))
    sq = np.zeros(len(dts))
    sqrt_h = math.sqrt(h)
    for lo in range(0, n_paths, block):
        idx = range(lo, min(lo + block, n_paths))
        dw = np.stack([path_rng(seed, i).standard_normal(n_fine) * sqrt_h for i in idx])
        exact = []
        for row in dw:
            wind = np.concatenate([[0.0], np.cumsum(params.sigma * row)])
            ex = closed_form_velocity(x0, v_vec, wind, h, T)
            exact.append((ex.x, ex.y))
        exact = np.array(exact)
        for d_i, (dt, q) in enumerate(zip(dts, ratios)):
            coarse = dw.reshape(dw.shape[0], -1, q).sum(axis=2)
            xe, ye = _euler_cartesian(x0.x, x0.y, v_vec, params.sigma, coarse, dt)
            sq[d_i] += float(np.sum((xe - exact[:, 0]) ** 2 + (ye - exact[:, 1]) ** 2))
    rms = tuple(float(math.sqrt(s / n_paths)) for s in sq)
    monotone = all(b < a for a, b in zip(rms, rms[1:]))
    slope = _slope(dts, rms) if all(e > 0 for e in rms) else math.inf
    rad_err, rad_steps = radial_check(params, 2.0, dts[-1], seed=seed)
    return ConvergenceReport(dts, rms, slope, monotone, rad_err, rad_steps)


@dataclass(frozen=True)
class ValueGrid:
    """Tabulated value on [eta, r_max] x [0, pi), extended pi-periodically in theta."""

    r: np.ndarray
    theta: np.ndarray
    values: np.ndarray

    def __call__(self, r: float, theta: float) -> float:
        th = math.fmod(theta, math.pi)
        if th < 0:
            th += math.pi
        rr = min(max(r, self.r[0]), self.r[-1])
        i = int(np.clip(np.searchsorted(self.r, rr) - 1, 0, len(self.r) - 2))
        wr = (rr - self.r[i]) / (self.r[i + 1] - self.r[i])
        # theta grid is periodic: append the first column at theta + pi
        tg = np.append(self.theta, self.theta[0] + math.pi)
        if th < tg[0]:
            th += math.pi
        j = int(np.clip(np.searchsorted(tg, th) - 1, 0, len(tg) - 2))
        wt = (th - tg[j]) / (tg[j + 1] - tg[j])
        jn = (j + 1) % len(self.theta)
        v = self.values
        return float((1 - wr) * ((1 - wt) * v[i, j] + wt * v[i, jn]) + wr * ((1 - wt) * v[i + 1, j] + wt * v[i + 1, jn]))


def build_value_grid(params: ModelParams, r_grid: Sequence[float], n_theta: int, n_paths: int,
                     dt: float, seed: int = 0) -> ValueGrid:
    """Monte Carlo estimate of the expected time to target under A* on a grid.

    The first radius must be eta, where the value is zero.
    """
    r_grid = np.asarray(r_grid, dtype=float)
    if not math.isclose(r_grid[0], params.eta):
        raise ValueError("the radial grid must start at eta")
    thetas = np.arange(n_theta) * math.pi / n_theta
    vals = np.zeros((len(r_grid), n_theta))
    cfg = SimConfig(params, FeedbackAStar(), dt=dt, seed=seed)
    cell = 0
    for i, r in enumerate(r_grid[1:], start=1):
        for j, th in enumerate(thetas):
            taus = [run(cfg, (PolarState(r, th), 1), path_index=cell * n_paths + k).tau for k in range(n_paths)]
            vals[i, j] = float(np.nanmean(taus))
            cell += 1
    return ValueGrid(r_grid, thetas, vals)


@dataclass(frozen=True)
class MartingaleReport:
    drift: McEstimate
    delta: float
    contains_zero: bool
    submartingale_ok: bool
    coarse_grid: bool


def martingale_diagnostic(config: SimConfig, value: ValueGrid, starts: Sequence[Tuple[PolarState, int]],
                          delta: float, n_paths: int, seed_offset: int = 10**6) -> MartingaleReport:
    """Estimate E[N(delta) - N(0)] with N(t) = t + V(R_t, Theta_t), stopped at the target.

    Paths use stream indices from ``seed_offset`` upward so they are fresh
    relative to the ones that built ``value``.
    """
    if not config.model.eta > 0:
        raise ValueError("the diagnostic needs eta > 0")
    cfg = replace(config, horizon=delta)
    diffs = []
    idx = seed_offset
    for s, a in starts:
        v0 = value(s.r, s.theta)
        for _ in range(n_paths):
            res = run(cfg, (s, a), path_index=idx)
            idx += 1
            if res.terminated == "hit":
                diffs.append(res.tau - v0)
            else:
                diffs.append(delta + value(res.final_r, res.final_theta) - v0)
    est = McAccumulator.of(diffs).estimate()
    lo, hi = est.ci95
    dr = np.diff(value.r)
    coarse = bool(np.max(dr) > config.model.v * delta)
    return MartingaleReport(est, delta, lo <= 0.0 <= hi, est.mean >= -3 * est.stderr, coarse)
