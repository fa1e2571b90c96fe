"""Deterministic adversarial winds that keep a strategy-A boat away from the target.

Both controllers work in the starboard-only representation used by the
engine: a reduced-angle change of d corresponds to a real wind jump of
tack * d, which the controller returns to the engine.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional

from .dynamics import HALF_PI, ModelParams, PolarState, wrap
from .engine import RunResult, SimConfig, run
from .strategies import ALPHA_MAX, ALPHA_TOL, ImpulseA
from .wind import Adversarial


@dataclass(frozen=True)
class AdversarialParams:
    r0: float
    alpha: float
    beta: float
    alpha0: Optional[float] = None
    r1: Optional[float] = None

    def resolved(self) -> "AdversarialParams":
        a0 = math.pi / 4 - 0.02 if self.alpha0 is None else self.alpha0
        r1 = 0.95 * self.r0 if self.r1 is None else self.r1
        return AdversarialParams(self.r0, self.alpha, self.beta, a0, r1)

    def validate(self, eta: float) -> None:
        p = self.resolved()
        if not 0 < p.alpha <= ALPHA_MAX + ALPHA_TOL:
            raise ValueError("alpha must lie in (0, pi/8]")
        if not 0 < p.beta < p.alpha:
            raise ValueError("beta must lie in (0, alpha)")
        if not eta < p.r1 < p.r0:
            raise ValueError("r1 must lie in (eta, r0)")
        if not 0 < p.alpha0 < math.pi / 2:
            raise ValueError("alpha0 must lie in (0, pi/2)")


class TackChaseController:
    """Wind schedule that returns the boat to distance r0 at every tack.

    Radius triggers fire at the last step boundary before the boat crosses
    r1, found by extrapolating the latest radial increment, so the recorded
    state sits on the outer side of the crossing.

    Phases: wait for r to reach r1 and record alpha1; then, whenever the reduced
    angle drops to -beta, shift it by +beta until the boat tacks on the outer
    circle (recording gamma); then wait for r <= r1 again and shift the
    reduced angle back to alpha1. A tack triggered inside the disk means the
    adversary lost; shifting stops and the boat is left alone.
    """

    def __init__(self, adv: AdversarialParams, cycles: int, step_budget: int):
        self.p = adv.resolved()
        self.cycles = cycles
        self.step_budget = step_budget
        self.phase = "approach"
        self.alpha1 = math.nan
        self.gammas: List[float] = []
        self.shifts_per_cycle: List[int] = []
        self._shifts = 0
        self.completed = 0
        self.failed = False
        self.done = False
        self.tack_radii: List[float] = []
        self._quiet = 0
        self._r_prev = math.nan

    def _reaches_r1(self, r: float) -> bool:
        dr = r - self._r_prev if math.isfinite(self._r_prev) else 0.0
        return r <= self.p.r1 or (dr < 0 and r + dr <= self.p.r1)

    def on_step(self, view) -> float:
        self._quiet += 1
        p = self.p
        jump_red = 0.0
        reaches = self._reaches_r1(view.r)
        self._r_prev = view.r
        if view.tacked:
            self.tack_radii.append(view.r)
            if self.phase == "shift" and view.r >= p.r0:
                # reduced angle after a tack is pi/2 - angle before
                self.gammas.append(wrap(view.theta_red) - HALF_PI)
                self.shifts_per_cycle.append(self._shifts)
                self._shifts = 0
                self.completed += 1
                self.phase = "return"
                if self.completed >= self.cycles:
                    self.done = True
            else:
                self.failed = True
                self.phase = "idle"
            self._quiet = 0
        elif self.phase == "approach" and reaches:
            self.alpha1 = wrap(view.theta_red)
            self.phase = "shift"
            self._quiet = 0
        elif self.phase == "shift" and wrap(view.theta_red) <= -p.beta:
            jump_red = p.beta
            self._shifts += 1
            self._quiet = 0
        elif self.phase == "return" and reaches:
            jump_red = self.alpha1 - wrap(view.theta_red)
            self.phase = "shift"
            self._quiet = 0
        if self.phase != "idle" and self._quiet > self.step_budget:
            raise RuntimeError(f"no trigger fired within {self.step_budget} steps in phase {self.phase!r}")
        return view.tack * jump_red


class NinetyDegreeController:
    """After every tack, turn the wind a quarter turn so the boat retraces its path."""

    def __init__(self, cycles: int, enabled: bool = True):
        self.cycles = cycles
        self.enabled = enabled
        self.tacks = 0
        self.tack_radii: List[float] = []
        self.done = False

    def on_step(self, view) -> float:
        if not view.tacked:
            return 0.0
        self.tacks += 1
        self.tack_radii.append(view.r)
        if self.tacks >= self.cycles:
            self.done = True
        if not self.enabled:
            return 0.0
        return view.tack * (-HALF_PI)


@dataclass
class ScenarioReport:
    cycles_completed: int
    tacks: int
    hit: bool
    min_r: float
    max_r: float
    lower_bound: float
    upper_bound: float
    confined: bool
    alpha1: float = math.nan
    gammas: List[float] = field(default_factory=list)
    shifts_per_cycle: List[int] = field(default_factory=list)
    tack_radii: List[float] = field(default_factory=list)
    adversary_failed: bool = False

    def to_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _radius_range(res: RunResult):
    traj = res.trajectory
    return float(traj.r.min()), float(traj.r.max())


def run_tack_chase_scenario(params: ModelParams, adv: AdversarialParams, cycles: int, dt: float = 1e-3,
                          budget_factor: float = 50.0):
    """Run strategy A against the tack-chasing adversary; returns (RunResult, ScenarioReport)."""
    adv.validate(params.eta)
    p = adv.resolved()
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    budget = int(budget_factor * p.r0 / (params.v * dt))
    ctrl = TackChaseController(p, cycles, budget)
    model = ModelParams(0.0, params.v, params.c, params.eta)
    horizon = (cycles + 2) * budget * dt
    cfg = SimConfig(model, ImpulseA(p.alpha, p.r0), dt=dt, horizon=horizon, record_trajectory=True,
                    wind=Adversarial(ctrl))
    res = run(cfg, (PolarState(p.r0, p.alpha0), 1))
    lo, hi = _radius_range(res)
    slack = params.v * dt
    lower = p.r1 * math.cos(ctrl.alpha1) if math.isfinite(ctrl.alpha1) else math.nan
    confined = (res.terminated != "hit") and lo >= lower - slack and hi <= p.r0 + slack
    report = ScenarioReport(ctrl.completed, res.tacks, res.terminated == "hit", lo, hi, lower, p.r0, confined,
                            ctrl.alpha1, ctrl.gammas, ctrl.shifts_per_cycle, ctrl.tack_radii, ctrl.failed)
    return res, report


def run_ninety_degree_loop(params: ModelParams, margin: float, cycles: int, r_start: float = 1.0,
                           dt: float = 1e-3, shifts: bool = True):
    """Strategy A with alpha = margin, started on starboard just above the port layline."""
    if not 0 < margin <= ALPHA_MAX + ALPHA_TOL:
        raise ValueError("margin must lie in (0, pi/8]")
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    r0 = 1.5 * r_start
    ctrl = NinetyDegreeController(cycles, enabled=shifts)
    model = ModelParams(0.0, params.v, params.c, params.eta)
    horizon = (cycles + 2) * 10.0 * r0 / params.v
    cfg = SimConfig(model, ImpulseA(margin, r0), dt=dt, horizon=horizon, record_trajectory=True,
                    wind=Adversarial(ctrl))
    res = run(cfg, (PolarState(r_start, margin), 1))
    if res.terminated == "timeout":
        raise RuntimeError("the loop stalled: no tack within the step budget")
    lo, hi = _radius_range(res)
    slack = params.v * dt
    radii = ctrl.tack_radii
    nondecreasing = all(b >= a - slack for a, b in zip(radii, radii[1:]))
    report = ScenarioReport(ctrl.tacks, res.tacks, res.terminated == "hit", lo, hi,
                            r_start * math.cos(margin), r_start, nondecreasing and res.terminated != "hit",
                            tack_radii=radii)
    return res, report
