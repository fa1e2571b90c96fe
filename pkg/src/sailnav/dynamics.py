"""Drifts, closed-form solutions and coordinate maps of the sailboat model.

All angles live in the rotating frame attached to the wind: the x-axis runs
along the port layline, the y-axis along the starboard layline and the
target sits at the origin. Piecewise definitions use the canonical window
``[-pi/4, 7pi/4)`` and are extended to the real line by 2*pi-periodicity.

The scalar functions are compiled with numba so the simulation kernel can
call them directly; they are equally usable from plain Python.
"""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

STARBOARD = 1
PORT = -1

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi
QUARTER_PI = 0.25 * math.pi
THREE_QUARTER_PI = 0.75 * math.pi
FIVE_QUARTER_PI = 1.25 * math.pi
THREE_HALF_PI = 1.5 * math.pi
WINDOW_LO = -QUARTER_PI
WINDOW_HI = 1.75 * math.pi


@dataclass(frozen=True)
class ModelParams:
    """The four physical parameters of the model.

    sigma is the wind variability (rad per sqrt(time)), v the boat speed,
    c the time lost per tack and eta the target radius.
    """

    sigma: float
    v: float = 1.0
    c: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        if not (self.sigma >= 0.0 and math.isfinite(self.sigma)):
            raise ValueError(f"sigma must be finite and >= 0, got {self.sigma}")
        if not (self.v > 0.0 and math.isfinite(self.v)):
            raise ValueError(f"v must be finite and > 0, got {self.v}")
        if not self.c >= 0.0:
            raise ValueError(f"c must be >= 0, got {self.c}")
        if not self.eta >= 0.0:
            raise ValueError(f"eta must be >= 0, got {self.eta}")


@dataclass(frozen=True)
class PolarState:
    r: float
    theta: float


@dataclass(frozen=True)
class CartesianState:
    x: float
    y: float


@njit(cache=True)
def wrap(theta):
    """Reduce an angle into [-pi/4, 7pi/4)."""
    k = math.floor((theta - WINDOW_LO) / TWO_PI)
    w = theta - k * TWO_PI
    if w >= WINDOW_HI:
        w -= TWO_PI
    elif w < WINDOW_LO:
        w += TWO_PI
    return w


@njit(cache=True)
def mu1(theta, a, v):
    """Radial drift on tack ``a`` (+1 starboard, -1 port)."""
    w = wrap(theta)
    if a == STARBOARD:
        if w < HALF_PI:
            return -v * math.sin(w)
        if w < math.pi:
            return -v
        return v * math.cos(w)
    if w < 0.0 or w >= THREE_HALF_PI:
        return -v
    if w < THREE_QUARTER_PI:
        return -v * math.cos(w)
    return v * math.sin(w)


@njit(cache=True)
def mu2(r, theta, a, v):
    """Angular drift on tack ``a``; diverges like 1/r near the origin."""
    if not r > 0.0:
        raise ValueError("mu2 requires r > 0")
    w = wrap(theta)
    if a == STARBOARD:
        if w < HALF_PI:
            return -v * math.cos(w) / r
        if w < math.pi:
            return 0.0
        return -v * math.sin(w) / r
    if w < 0.0 or w >= THREE_HALF_PI:
        return 0.0
    if w < THREE_QUARTER_PI:
        return v * math.sin(w) / r
    return v * math.cos(w) / r


@njit(cache=True)
def a_star(theta):
    """Feedback tack: starboard on [pi/4, 5pi/4), port elsewhere (mod 2pi)."""
    w = wrap(theta)
    if QUARTER_PI <= w < FIVE_QUARTER_PI:
        return STARBOARD
    return PORT


@njit(cache=True)
def mu_star(r, theta, v):
    a = a_star(theta)
    return mu1(theta, a, v), mu2(r, theta, a, v)


@njit(cache=True)
def phi_damping(r, eta, n):
    if not eta > 0.0:
        raise ValueError("phi_damping requires eta > 0")
    if n * eta <= 1.0:
        raise ValueError("phi_damping requires 1/n < eta")
    if r <= eta - 1.0 / n:
        return 0.0
    if r < eta:
        return n * (r - eta) + 1.0
    return 1.0


def min_damping_n(eta: float) -> int:
    """Smallest n >= 1 with 1/n < eta."""
    if eta <= 0:
        raise ValueError("eta must be > 0")
    return int(math.floor(1.0 / eta)) + 1


def default_damping_n(eta: float) -> int:
    return max(min_damping_n(eta), int(math.ceil(2.0 / eta)))


@njit(cache=True)
def tack_jump(theta):
    """Angle after a tack in the starboard-only representation."""
    return wrap(HALF_PI - theta)


@njit(cache=True)
def _zone_velocity(x, y, a, v):
    r = math.hypot(x, y)
    w = wrap(math.atan2(y, x))
    if a == STARBOARD:
        if w < HALF_PI:
            return 0.0, -v
        if w < math.pi:
            if r == 0.0:
                raise ValueError("radial velocity undefined at the origin")
            return -v * x / r, -v * y / r
        return v, 0.0
    if w < 0.0 or w >= THREE_HALF_PI:
        if r == 0.0:
            raise ValueError("radial velocity undefined at the origin")
        return -v * x / r, -v * y / r
    if w < THREE_QUARTER_PI:
        return -v, 0.0
    return 0.0, v


def mu_cart(p: CartesianState, a: int, params: ModelParams) -> CartesianState:
    """Cartesian drift: zone velocity plus the circle correction -(sigma^2/2) x."""
    vx, vy = _zone_velocity(p.x, p.y, a, params.v)
    k = -0.5 * params.sigma**2
    return CartesianState(vx + k * p.x, vy + k * p.y)


def sigma_cart(p: CartesianState, sigma: float) -> CartesianState:
    return CartesianState(-sigma * p.y, sigma * p.x)


def to_polar(p: CartesianState) -> PolarState:
    if p.x == 0.0 and p.y == 0.0:
        raise ValueError("the origin has no polar angle")
    return PolarState(math.hypot(p.x, p.y), wrap(math.atan2(p.y, p.x)))


def from_polar(s: PolarState) -> CartesianState:
    return CartesianState(s.r * math.cos(s.theta), s.r * math.sin(s.theta))


def _rotate(x, y, angle):
    c, s = math.cos(angle), math.sin(angle)
    return c * x - s * y, s * x + c * y


def to_geographic(p: CartesianState, beta: float) -> CartesianState:
    """Map rotating-frame coordinates to geographic (xi1 southward, xi2 eastward).

    The fixed alignment rotates the rotating x-axis onto the direction
    (cos(-pi/4), sin(-pi/4)) of the port layline for a north wind, then the
    result is rotated by the geographic wind direction ``beta``. Note that the
    geographic wind direction is the negative of the rotating-frame wind angle
    (a stationary boat keeps its geographic position).
    """
    return CartesianState(*_rotate(p.x, p.y, beta - QUARTER_PI))


def closed_form_velocity(x0: CartesianState, v_vec, wind_path, dt: float, t: float) -> CartesianState:
    """Exact position under a constant velocity ``v_vec`` in the rotating frame.

    ``wind_path`` holds sigma*B sampled on the uniform grid k*dt (k = 0, 1, ...)
    with wind_path[0] = 0. Time integrals use the trapezoidal rule on that grid.
    """
    w = np.asarray(wind_path, dtype=float)
    n = int(round(t / dt))
    if t < 0 or abs(n * dt - t) > 1e-9 * max(1.0, t):
        raise ValueError("t must be a non-negative multiple of dt")
    if n >= w.size:
        raise ValueError("t lies beyond the end of the sampled wind path")
    v1, v2 = v_vec
    wt = w[n]
    if n == 0:
        ic = is_ = 0.0
    else:
        lag = wt - w[: n + 1]
        ic = float(np.trapezoid(np.cos(lag), dx=dt))
        is_ = float(np.trapezoid(np.sin(lag), dx=dt))
    cw, sw = math.cos(wt), math.sin(wt)
    return CartesianState(
        cw * x0.x - sw * x0.y + v1 * ic - v2 * is_,
        sw * x0.x + cw * x0.y + v1 * is_ + v2 * ic,
    )


def closed_form_radial(x0: CartesianState, params: ModelParams, wind_t: float, t: float) -> CartesianState:
    """Exact position under radial motion toward the target."""
    norm = math.hypot(x0.x, x0.y)
    t_max = (norm - params.eta) / params.v
    if t < 0 or t > t_max * (1 + 1e-12):
        raise ValueError(f"t must lie in [0, {t_max}]")
    theta = math.atan2(x0.y, x0.x)
    rad = norm - params.v * t
    return CartesianState(rad * math.cos(wind_t + theta), rad * math.sin(wind_t + theta))
