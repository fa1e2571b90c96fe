"""Wind-angle sources.

The wind angle is kept unwrapped. Every source hands out per-step increments;
the Brownian source draws them from a counter-based Philox stream keyed by
(seed, path index), so a path's increments do not depend on how many other
paths exist, on the order in which they run, or on how the draws are chunked.
"""

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence, Tuple, Union

import numpy as np


@dataclass(frozen=True)
class BrownianCircle:
    """sigma * B_t; ``sign=-1`` yields the mirrored path from the same stream."""

    sigma: float
    seed: int = 0
    sign: float = 1.0

    def __post_init__(self):
        if not (self.sigma >= 0 and math.isfinite(self.sigma)):
            raise ValueError(f"sigma must be finite and >= 0, got {self.sigma}")
        if self.sign not in (1.0, -1.0):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class Constant:
    beta0: float = 0.0


@dataclass(frozen=True)
class PiecewiseConstant:
    """Absolute wind angles, each holding from its start time onward."""

    schedule: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        sched = tuple((float(t), float(a)) for t, a in self.schedule)
        if not sched:
            raise ValueError("schedule must not be empty")
        times = [t for t, _ in sched]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("schedule times must be strictly increasing")
        object.__setattr__(self, "schedule", sched)

    def angle_at(self, t):
        """Scheduled angle at time(s) ``t``; before the first entry, the first angle."""
        times = np.array([s for s, _ in self.schedule])
        angles = np.array([a for _, a in self.schedule])
        i = np.clip(np.searchsorted(times, t, side="right") - 1, 0, None)
        out = angles[i]
        return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class Adversarial:
    """Wind driven by a state-coupled controller.

    The controller is consulted by the engine between steps and returns angle
    jumps; between jumps the wind is constant, so the increments are zero.
    """

    controller: Any


WindSource = Union[BrownianCircle, Constant, PiecewiseConstant, Adversarial]


def path_rng(seed: int, path_index: int) -> np.random.Generator:
    """Independent generator for one Monte Carlo path."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(path_index,))))


def initial_angle(source: WindSource) -> float:
    if isinstance(source, Constant):
        return float(source.beta0)
    if isinstance(source, PiecewiseConstant):
        return source.angle_at(0.0)
    return 0.0


@dataclass
class WindState:
    t: float = 0.0
    cumulative_angle: float = 0.0
    reference_angle: float = 0.0
    running_sup_deviation: float = 0.0
    step: int = 0
    rng: Optional[np.random.Generator] = field(default=None, repr=False)


def make_wind_state(source: WindSource, path_index: int = 0) -> WindState:
    beta0 = initial_angle(source)
    rng = path_rng(source.seed, path_index) if isinstance(source, BrownianCircle) else None
    return WindState(cumulative_angle=beta0, reference_angle=beta0, rng=rng)


def draw_increments(source: WindSource, state: WindState, dt: float, n: int) -> np.ndarray:
    """Return the next ``n`` increments and advance ``t`` and ``step``.

    The calm tracker is not touched here; use ``next_increment`` for
    step-by-step use or ``advance`` to fold a block of increments in.
    """
    if not dt > 0:
        raise ValueError("dt must be > 0")
    if isinstance(source, BrownianCircle):
        if state.rng is None:
            state.rng = path_rng(source.seed, 0)
        inc = (source.sign * source.sigma * math.sqrt(dt)) * state.rng.standard_normal(n)
    elif isinstance(source, PiecewiseConstant):
        k = np.arange(state.step, state.step + n + 1, dtype=float) * dt
        inc = np.diff(source.angle_at(k))
    else:
        inc = np.zeros(n)
    state.step += n
    state.t = state.step * dt
    return inc


def advance(state: WindState, increments: np.ndarray) -> None:
    """Fold increments into the cumulative angle and the calm tracker."""
    if len(increments) == 0:
        return
    path = state.cumulative_angle + np.cumsum(increments)
    dev = float(np.max(np.abs(path - state.reference_angle)))
    state.running_sup_deviation = max(state.running_sup_deviation, dev)
    state.cumulative_angle = float(path[-1])


def next_increment(source: WindSource, state: WindState, dt: float) -> float:
    inc = draw_increments(source, state, dt, 1)
    advance(state, inc)
    return float(inc[0])


def reset_calm_tracker(state: WindState) -> WindState:
    state.running_sup_deviation = 0.0
    state.reference_angle = state.cumulative_angle
    return state


def schedule_from_records(records: Sequence[dict]) -> PiecewiseConstant:
    try:
        pairs = [(float(rec["t"]), float(rec["angle_rad"])) for rec in records]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed wind schedule entry: {exc}") from None
    return PiecewiseConstant(tuple(pairs))


def load_schedule(path) -> PiecewiseConstant:
    """Read a JSON array of {"t": ..., "angle_rad": ...} objects."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("wind schedule must be a JSON array")
    return schedule_from_records(data)
