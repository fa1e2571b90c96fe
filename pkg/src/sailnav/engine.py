"""Euler-Maruyama simulation of the controlled boat.

One compiled kernel advances a single path through a block of wind
increments. The Python driver draws increments chunk by chunk from the
path's own stream, grows event buffers when needed and, for adversarial
scenarios, lets a controller inject wind jumps between steps.

Strategy A runs in the starboard-only representation (``theta_red``) while
the physical angle (``theta``) is tracked alongside for output.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

import numpy as np
from numba import njit

from .dynamics import (
    HALF_PI,
    STARBOARD,
    THREE_HALF_PI,
    ModelParams,
    PolarState,
    a_star,
    default_damping_n,
    min_damping_n,
    mu1,
    mu2,
    phi_damping,
    tack_jump,
    wrap,
)
from .strategies import FeedbackAStar, ImpulseA, StrategyKind, in_start_set, initial_reduction
from .wind import Adversarial, BrownianCircle, WindSource, draw_increments, initial_angle, make_wind_state

# kernel status
RUNNING, HIT, TIMEOUT, GROW, NONFINITE, STOPPED = 0, 1, 2, 3, 4, 5
# trajectory events
EV_NONE, EV_TACK, EV_HIT, EV_TIMEOUT, EV_SHIFT = 0, 1, 2, 3, 4
EVENT_NAMES = ("none", "tack", "hit", "timeout", "wind_shift")
# tack kinds
KIND_NU, KIND_RHO = 0, 1
KIND_NAMES = ("nu", "rho")

# float state slots
F_R, F_TH_RED, F_TH, F_WIND, F_WREF, F_SUPDEV, F_MAXR, F_DRMIN, F_DRMAX, F_TAU, F_ZETA, F_RFINAL = range(12)
N_F = 12
# int state slots
I_A, I_M, I_STATUS, I_NSTEP, I_NREC = range(5)
N_I = 5

MODE_IMPULSE, MODE_ASTAR = 0, 1


@dataclass(frozen=True)
class SimConfig:
    """Everything a run needs besides the start.

    ``dt`` and ``horizon`` may be left as None; they then default to
    1e-3 * r0 / v (A* uses the start radius instead of r0) and
    200 * max(r0, r) / v.
    """

    model: ModelParams
    strategy: StrategyKind
    dt: Optional[float] = None
    horizon: Optional[float] = None
    seed: int = 20240601
    record_trajectory: bool = False
    damping_n: Optional[int] = None
    wind: Optional[WindSource] = None

    def __post_init__(self):
        if self.dt is not None and not self.dt > 0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if isinstance(self.strategy, ImpulseA):
            self.strategy.validate(self.model.eta)
        if self.damping_n is not None and self.model.eta > 0:
            if self.damping_n < min_damping_n(self.model.eta):
                raise ValueError("damping_n must satisfy 1/n < eta")

    def resolve_dt(self, r_start: float) -> float:
        if self.dt is not None:
            return float(self.dt)
        scale = self.strategy.r0 if isinstance(self.strategy, ImpulseA) else r_start
        return 1e-3 * scale / self.model.v

    def resolve_horizon(self, r_start: float) -> float:
        if self.horizon is not None:
            return float(self.horizon)
        scale = max(self.strategy.r0, r_start) if isinstance(self.strategy, ImpulseA) else r_start
        return 200.0 * scale / self.model.v

    def wind_source(self) -> WindSource:
        if self.wind is not None:
            return self.wind
        return BrownianCircle(self.model.sigma, self.seed)


@dataclass
class Trajectory:
    t: np.ndarray
    r: np.ndarray
    theta: np.ndarray
    tack: np.ndarray
    wind: np.ndarray
    event: np.ndarray

    def __len__(self):
        return len(self.t)

    @property
    def x(self):
        return self.r * np.cos(self.theta)

    @property
    def y(self):
        return self.r * np.sin(self.theta)

    def event_names(self) -> List[str]:
        return [EVENT_NAMES[e] for e in self.event]

    @classmethod
    def empty(cls):
        z = np.zeros(0)
        return cls(z, z.copy(), z.copy(), np.zeros(0, dtype=np.int64), z.copy(), np.zeros(0, dtype=np.int64))


@dataclass
class RunResult:
    tau: float
    tacks: int
    payoff: float
    terminated: str
    stopping_times: List[Tuple[float, str]] = field(default_factory=list)
    sigma_times: List[float] = field(default_factory=list)
    zeta: float = math.nan
    e1_first_index: Optional[int] = None
    max_r: float = math.nan
    dr_min: float = math.nan
    dr_max: float = math.nan
    final_r: float = math.nan
    final_theta: float = math.nan
    steps: int = 0
    dt: float = math.nan
    warnings: Tuple[str, ...] = ()
    trajectory: Optional[Trajectory] = None


@dataclass
class EngineView:
    """Read-only snapshot handed to a wind controller after each step."""

    t: float
    r: float
    theta_red: float
    theta: float
    tack: int
    tacks: int
    wind: float
    tacked: bool


@njit(cache=True)
def _step_core(r, th, a_drift, noise_sign, db, dt, v, eta, damp_n):
    """One explicit step of the polar system; returns (r', theta')."""
    if damp_n > 0:
        phi = phi_damping(r, eta, damp_n)
    else:
        phi = 1.0 if r > eta else 0.0
    if phi == 0.0:
        return r, th
    m1 = mu1(th, a_drift, v)
    m2 = mu2(r, th, a_drift, v)
    return r + phi * m1 * dt, th + phi * (m2 * dt + noise_sign * db)


@njit(cache=True)
def _advance(fs, ist, inc, i0, n_max, mode, v, eta, dt, horizon, alpha, r0, damp_n,
             psi_t, psi_kind, seg_ref, seg_max, seg_min, seg_sigma,
             rec_t, rec_r, rec_th, rec_a, rec_w, rec_ev, record):
    j = i0
    done = 0
    n_inc = inc.shape[0]
    cap = psi_t.shape[0]
    while j < n_inc and done < n_max:
        if ist[I_STATUS] != RUNNING:
            break
        nstep = ist[I_NSTEP]
        t_prev = nstep * dt
        if t_prev >= horizon:
            ist[I_STATUS] = TIMEOUT
            if record and ist[I_NREC] > 0:
                rec_ev[ist[I_NREC] - 1] = EV_TIMEOUT
            break
        m = ist[I_M]
        if mode == MODE_IMPULSE and m + 1 >= cap:
            ist[I_STATUS] = GROW
            break
        r = fs[F_R]
        a = ist[I_A]
        db = inc[j]
        ev = EV_NONE
        if mode == MODE_IMPULSE:
            th = fs[F_TH_RED]
            r_new, th_new = _step_core(r, th, 1, a, db, dt, v, eta, 0)
            fs[F_TH] += a * (th_new - th)
        else:
            th = fs[F_TH]
            a_now = a_star(th)
            if a_now != a:
                ist[I_M] = m + 1
                ist[I_A] = a_now
                ev = EV_TACK
            r_new, th_new = _step_core(r, th, a_now, 1, db, dt, v, eta, damp_n)
            fs[F_TH] = th_new
        dr = r_new - r
        wind = fs[F_WIND] + db
        fs[F_WIND] = wind
        dev = abs(wind - fs[F_WREF])
        if dev > fs[F_SUPDEV]:
            fs[F_SUPDEV] = dev
        if mode == MODE_IMPULSE:
            if wind > seg_max[m]:
                seg_max[m] = wind
            if wind < seg_min[m]:
                seg_min[m] = wind
        if dr < fs[F_DRMIN]:
            fs[F_DRMIN] = dr
        if dr > fs[F_DRMAX]:
            fs[F_DRMAX] = dr
        j += 1
        done += 1
        ist[I_NSTEP] = nstep + 1
        t_new = (nstep + 1) * dt
        if not (math.isfinite(r_new) and math.isfinite(th_new)):
            ist[I_STATUS] = NONFINITE
            break
        fs[F_TH_RED] = th_new
        fs[F_RFINAL] = r_new
        if r_new <= eta:
            tau = t_prev + dt * (r - eta) / (r - r_new)
            fs[F_TAU] = tau
            fs[F_R] = r_new
            ist[I_STATUS] = HIT
            if record:
                k = ist[I_NREC]
                rec_t[k] = tau
                rec_r[k] = eta
                rec_th[k] = fs[F_TH]
                rec_a[k] = ist[I_A]
                rec_w[k] = wind
                rec_ev[k] = EV_HIT
                ist[I_NREC] = k + 1
            break
        fs[F_R] = r_new
        if r_new > fs[F_MAXR]:
            fs[F_MAXR] = r_new
        if mode == MODE_IMPULSE:
            w = wrap(th_new)
            if math.isnan(fs[F_ZETA]) and not (HALF_PI - alpha <= w <= HALF_PI + alpha):
                fs[F_ZETA] = t_new
            if math.isnan(seg_sigma[m]) and (w >= THREE_HALF_PI or w <= 0.0):
                seg_sigma[m] = t_new
            kind = -1
            if eta < r_new < r0 and (w >= THREE_HALF_PI + alpha or w <= -alpha):
                kind = KIND_NU
            elif r_new >= r0 and r_new > r:
                kind = KIND_RHO
            if kind >= 0:
                psi_t[m] = t_new
                psi_kind[m] = kind
                ist[I_M] = m + 1
                fs[F_TH_RED] = tack_jump(th_new)
                ist[I_A] = -a
                fs[F_WREF] = wind
                fs[F_SUPDEV] = 0.0
                seg_ref[m + 1] = wind
                seg_max[m + 1] = wind
                seg_min[m + 1] = wind
                ev = EV_TACK
        if record:
            k = ist[I_NREC]
            rec_t[k] = t_new
            rec_r[k] = r_new
            rec_th[k] = fs[F_TH]
            rec_a[k] = ist[I_A]
            rec_w[k] = wind
            rec_ev[k] = ev
            ist[I_NREC] = k + 1
    return j - i0


def step_polar(s: PolarState, tack: int, dbeta: float, dt: float, params: ModelParams,
               damping_n: Optional[int] = None) -> PolarState:
    """One Euler-Maruyama step with drifts frozen at ``s``.

    Without ``damping_n`` the indicator of {r > eta} multiplies the
    coefficients, so a state inside the target does not move.
    """
    if not s.r > 0:
        raise ValueError("step_polar requires r > 0")
    n = 0 if damping_n is None else int(damping_n)
    if n and n < min_damping_n(params.eta):
        raise ValueError("damping_n must satisfy 1/n < eta")
    r, th = _step_core(s.r, s.theta, tack, 1, dbeta, dt, params.v, params.eta, n)
    return PolarState(r, th)


class _Buffers:
    def __init__(self, cap):
        self.psi_t = np.full(cap, np.nan)
        self.psi_kind = np.full(cap, -1, dtype=np.int64)
        self.seg_ref = np.full(cap + 1, np.nan)
        self.seg_max = np.full(cap + 1, -np.inf)
        self.seg_min = np.full(cap + 1, np.inf)
        self.seg_sigma = np.full(cap + 1, np.nan)

    def grow(self):
        cap = self.psi_t.shape[0]
        new = _Buffers(2 * cap)
        for name in ("psi_t", "psi_kind"):
            getattr(new, name)[:cap] = getattr(self, name)
        for name in ("seg_ref", "seg_max", "seg_min", "seg_sigma"):
            getattr(new, name)[: cap + 1] = getattr(self, name)
        return new


_EMPTY_F = np.zeros(1)
_EMPTY_I = np.zeros(1, dtype=np.int64)


def _e1_first_index(ref, smax, smin, n_seg, alpha):
    """First i (1-based) such that the wind stays within alpha/2 of its value at psi_{i-1} up to tau."""
    suf_max = -math.inf
    suf_min = math.inf
    calm = [False] * n_seg
    for k in range(n_seg - 1, -1, -1):
        suf_max = max(suf_max, smax[k])
        suf_min = min(suf_min, smin[k])
        calm[k] = max(suf_max - ref[k], ref[k] - suf_min) < alpha / 2
    for k in range(n_seg):
        if calm[k]:
            return k + 1
    return None


def run(config: SimConfig, start: Tuple[PolarState, int], path_index: int = 0,
        controller: Any = None, record: Optional[bool] = None) -> RunResult:
    """Simulate one path until the target is reached or the horizon passes."""
    s0, tack0 = start
    params = config.model
    strat = config.strategy
    if tack0 not in (1, -1):
        raise ValueError(f"tack must be +1 or -1, got {tack0}")
    if not (math.isfinite(s0.r) and math.isfinite(s0.theta)):
        raise ValueError("start must be finite")
    if not s0.r > params.eta:
        raise ValueError(f"start radius {s0.r} must exceed eta {params.eta}")
    if not s0.r > 0:
        raise ValueError("start radius must be > 0")
    record = config.record_trajectory if record is None else record
    dt = config.resolve_dt(s0.r)
    horizon = config.resolve_horizon(s0.r)
    if horizon < dt:
        raise ValueError("horizon must be >= dt")
    source = config.wind_source()
    if isinstance(source, Adversarial) and controller is None:
        controller = source.controller
    wstate = make_wind_state(source, path_index)
    warnings = []

    fs = np.zeros(N_F)
    ist = np.zeros(N_I, dtype=np.int64)
    wind0 = initial_angle(source)
    fs[F_R] = s0.r
    fs[F_TH] = s0.theta
    fs[F_WIND] = wind0
    fs[F_WREF] = wind0
    fs[F_MAXR] = s0.r
    fs[F_DRMIN] = math.inf
    fs[F_DRMAX] = -math.inf
    fs[F_TAU] = math.nan
    fs[F_ZETA] = math.nan
    fs[F_RFINAL] = s0.r

    buf = _Buffers(16)
    if isinstance(strat, ImpulseA):
        mode = MODE_IMPULSE
        alpha, r0 = strat.alpha, strat.r0
        damp_n = 0
        red, _ = initial_reduction(s0, tack0)
        fs[F_TH_RED] = red.theta
        ist[I_A] = tack0
        buf.seg_ref[0] = buf.seg_max[0] = buf.seg_min[0] = wind0
        if s0.r > r0:
            warnings.append("start radius exceeds r0; treated as continuation until the boat re-enters the disk")
        if not in_start_set(red, alpha, r0, params.eta):
            fs[F_ZETA] = 0.0
        w = wrap(red.theta)
        kind = -1
        if params.eta < s0.r < r0 and (w >= THREE_HALF_PI + alpha or w <= -alpha):
            kind = KIND_NU
        elif s0.r == r0 and (w >= THREE_HALF_PI or w <= 0.0):
            kind = KIND_RHO
        if w >= THREE_HALF_PI or w <= 0.0:
            buf.seg_sigma[0] = 0.0
        if kind >= 0:
            buf.psi_t[0] = 0.0
            buf.psi_kind[0] = kind
            ist[I_M] = 1
            fs[F_TH_RED] = tack_jump(red.theta)
            ist[I_A] = -tack0
            buf.seg_ref[1] = buf.seg_max[1] = buf.seg_min[1] = wind0
    elif isinstance(strat, FeedbackAStar):
        mode = MODE_ASTAR
        alpha, r0 = 0.0, math.inf
        if params.eta > 0:
            damp_n = config.damping_n or default_damping_n(params.eta)
        else:
            damp_n = 0
        fs[F_TH_RED] = s0.theta
        ist[I_A] = a_star(s0.theta)
        if ist[I_A] != tack0:
            warnings.append("start tack differs from the feedback tack; switched at t=0 at no cost")
    else:
        raise TypeError(f"unknown strategy {strat!r}")

    rec_chunks = []
    if record:
        rec_chunks.append([np.array([0.0]), np.array([s0.r]), np.array([s0.theta]),
                           np.array([ist[I_A]]), np.array([wind0]),
                           np.array([EV_TACK if ist[I_M] > 0 and mode == MODE_IMPULSE else EV_NONE])])

    total_steps = int(math.ceil(horizon / dt - 1e-9)) + 1
    chunk = 1024
    n_max = 1 if controller is not None else 1 << 62
    while ist[I_STATUS] == RUNNING:
        left = total_steps - wstate.step
        n = max(1, min(chunk, left))
        chunk = min(chunk * 2, 1 << 16)
        inc = draw_increments(source, wstate, dt, n)
        pos = 0
        while pos < n and ist[I_STATUS] in (RUNNING, GROW):
            if ist[I_STATUS] == GROW:
                buf = buf.grow()
                ist[I_STATUS] = RUNNING
            size = min(n - pos, n_max) if record else 1
            rec = [np.zeros(size), np.zeros(size), np.zeros(size), np.zeros(size, dtype=np.int64),
                   np.zeros(size), np.zeros(size, dtype=np.int64)] if record else None
            ist[I_NREC] = 0
            m_before = ist[I_M]
            used = _advance(fs, ist, inc, pos, n_max, mode, params.v, params.eta, dt, horizon, alpha, r0, damp_n,
                            buf.psi_t, buf.psi_kind, buf.seg_ref, buf.seg_max, buf.seg_min, buf.seg_sigma,
                            *(rec if record else (_EMPTY_F, _EMPTY_F, _EMPTY_F, _EMPTY_I, _EMPTY_F, _EMPTY_I)),
                            record)
            pos += used
            if record and ist[I_NREC] > 0:
                rec_chunks.append([x[: ist[I_NREC]] for x in rec])
            elif record and ist[I_STATUS] == TIMEOUT and rec_chunks:
                rec_chunks[-1][5][-1] = EV_TIMEOUT
            if ist[I_STATUS] == NONFINITE:
                raise FloatingPointError(
                    f"non-finite state at step {ist[I_NSTEP]} (r={fs[F_R]}, theta={fs[F_TH]}); reduce dt")
            if controller is not None and ist[I_STATUS] == RUNNING and used:
                view = EngineView(ist[I_NSTEP] * dt, fs[F_R], fs[F_TH_RED], fs[F_TH], int(ist[I_A]),
                                  int(ist[I_M]), fs[F_WIND], bool(ist[I_M] > m_before))
                jump = float(controller.on_step(view))
                if jump != 0.0:
                    _apply_jump(fs, ist, buf, jump, mode)
                    if record and rec_chunks:
                        last = rec_chunks[-1]
                        last[2][-1] = fs[F_TH]
                        last[4][-1] = fs[F_WIND]
                        if last[5][-1] == EV_NONE:
                            last[5][-1] = EV_SHIFT
                if getattr(controller, "done", False):
                    ist[I_STATUS] = STOPPED
        if ist[I_STATUS] == RUNNING and wstate.step >= total_steps:
            # the final increment block ran out exactly at the horizon
            ist[I_STATUS] = TIMEOUT
            if record and rec_chunks:
                rec_chunks[-1][5][-1] = EV_TIMEOUT

    return _finish(fs, ist, buf, mode, params, strat, dt, warnings, rec_chunks if record else None)


def _apply_jump(fs, ist, buf, jump, mode):
    a = int(ist[I_A])
    fs[F_TH] += jump
    fs[F_TH_RED] += a * jump if mode == MODE_IMPULSE else jump
    fs[F_WIND] += jump
    wind = fs[F_WIND]
    fs[F_SUPDEV] = max(fs[F_SUPDEV], abs(wind - fs[F_WREF]))
    m = int(ist[I_M])
    buf.seg_max[m] = max(buf.seg_max[m], wind)
    buf.seg_min[m] = min(buf.seg_min[m], wind)


def _finish(fs, ist, buf, mode, params, strat, dt, warnings, rec_chunks):
    status = int(ist[I_STATUS])
    m = int(ist[I_M])
    hit = status == HIT
    tau = float(fs[F_TAU]) if hit else math.nan
    if mode == MODE_IMPULSE:
        payoff = tau + params.c * m if hit else math.nan
        stops = [(float(buf.psi_t[i]), KIND_NAMES[buf.psi_kind[i]]) for i in range(m)]
        sigmas = [float(x) for x in buf.seg_sigma[: m + 1]]
        e1 = _e1_first_index(buf.seg_ref, buf.seg_max, buf.seg_min, m + 1, strat.alpha) if hit else None
        zeta = float(fs[F_ZETA]) if not math.isnan(fs[F_ZETA]) else tau
        if hit:
            sigmas = [tau if math.isnan(x) else min(x, tau) for x in sigmas]
    else:
        payoff = tau
        stops, sigmas, e1, zeta = [], [], None, math.nan
    traj = None
    if rec_chunks is not None:
        cols = [np.concatenate([c[i] for c in rec_chunks]) for i in range(6)]
        traj = Trajectory(*cols)
    return RunResult(
        tau=tau,
        tacks=m,
        payoff=payoff,
        terminated="hit" if hit else ("stopped" if status == STOPPED else "timeout"),
        stopping_times=stops,
        sigma_times=sigmas,
        zeta=zeta,
        e1_first_index=e1,
        max_r=float(fs[F_MAXR]),
        dr_min=float(fs[F_DRMIN]),
        dr_max=float(fs[F_DRMAX]),
        final_r=float(fs[F_RFINAL]),
        final_theta=float(fs[F_TH]),
        steps=int(ist[I_NSTEP]),
        dt=dt,
        warnings=tuple(warnings),
        trajectory=traj,
    )


def extract_holding_times(result: RunResult) -> List[float]:
    """Holding times u_i = psi_i - psi_{i-1}, closed by the final segment up to tau."""
    if result.terminated != "hit":
        raise ValueError("holding times need a run that reached the target")
    times = [0.0] + [t for t, _ in result.stopping_times] + [result.tau]
    return [b - a for a, b in zip(times, times[1:])]


def detect_E1(trajectory: Trajectory, alpha: float) -> bool:
    """True iff the recorded wind stays strictly within alpha/2 of its initial value."""
    if len(trajectory) == 0:
        return True
    w = trajectory.wind
    return bool(np.max(np.abs(w - w[0])) < alpha / 2)


@dataclass
class BatchResult:
    tau: np.ndarray
    tacks: np.ndarray
    payoff: np.ndarray
    hit: np.ndarray
    e1_first_index: np.ndarray  # 0 when no E_i occurred or not applicable
    max_r: np.ndarray
    dr_min: np.ndarray
    dr_max: np.ndarray
    dt: float

    @property
    def n(self):
        return len(self.tau)

    @property
    def timeouts(self):
        return int(np.sum(~self.hit))


_BATCH_FIELDS = ("tau", "tacks", "payoff", "hit", "e1_first_index", "max_r", "dr_min", "dr_max")


def _run_block(config: SimConfig, start, lo: int, hi: int):
    out = {k: [] for k in _BATCH_FIELDS}
    dt = math.nan
    for i in range(lo, hi):
        res = run(config, start, path_index=i, record=False)
        dt = res.dt
        out["tau"].append(res.tau)
        out["tacks"].append(res.tacks)
        out["payoff"].append(res.payoff)
        out["hit"].append(res.terminated == "hit")
        out["e1_first_index"].append(res.e1_first_index or 0)
        out["max_r"].append(res.max_r)
        out["dr_min"].append(res.dr_min)
        out["dr_max"].append(res.dr_max)
    return out, dt


def run_batch(config: SimConfig, start: Tuple[PolarState, int], n_paths: int, workers: int = 1,
              block: int = 256, first_index: int = 0) -> BatchResult:
    """Run paths first_index .. first_index + n_paths - 1.

    Path i always uses stream i of the seed, and blocks are reassembled in
    index order, so the result does not depend on ``workers``.
    """
    if n_paths < 1:
        raise ValueError("n_paths must be >= 1")
    if isinstance(config.wind_source(), Adversarial):
        raise ValueError("batches need a stateless wind source")
    bounds = [(lo, min(lo + block, first_index + n_paths)) for lo in range(first_index, first_index + n_paths, block)]
    if workers <= 1:
        parts = [_run_block(config, start, lo, hi) for lo, hi in bounds]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = [ex.submit(_run_block, config, start, lo, hi) for lo, hi in bounds]
            parts = [f.result() for f in futs]
    merged = {k: np.concatenate([np.asarray(p[0][k]) for p in parts]) for k in _BATCH_FIELDS}
    return BatchResult(
        tau=merged["tau"].astype(float),
        tacks=merged["tacks"].astype(np.int64),
        payoff=merged["payoff"].astype(float),
        hit=merged["hit"].astype(bool),
        e1_first_index=merged["e1_first_index"].astype(np.int64),
        max_r=merged["max_r"].astype(float),
        dr_min=merged["dr_min"].astype(float),
        dr_max=merged["dr_max"].astype(float),
        dt=parts[0][1],
    )


__all__ = [
    "SimConfig",
    "Trajectory",
    "RunResult",
    "EngineView",
    "BatchResult",
    "step_polar",
    "run",
    "run_batch",
    "extract_holding_times",
    "detect_E1",
    "STARBOARD",
]
