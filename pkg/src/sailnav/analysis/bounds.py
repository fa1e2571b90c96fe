"""Closed-form constants and upper bounds for strategies A and A*."""

import math
from dataclasses import asdict, dataclass

from ..dynamics import ModelParams
from ..strategies import ALPHA_MAX, ALPHA_TOL

CLAIMED_C1C2_BOUND = 0.75


def holding_time_K(sigma: float, alpha: float) -> float:
    """Upper bound on the expected time between two tacks."""
    if not sigma > 0:
        raise ValueError("K needs sigma > 0")
    return (alpha + 0.75 * math.pi) ** 2 / sigma**2


def d1(alpha: float) -> float:
    return math.sin(alpha / 2) * math.tan(alpha) + 1.0


def d2(alpha: float) -> float:
    return (math.sin(alpha / 2) + math.tan(alpha)) * math.cos(alpha) / math.cos(2 * alpha)


def gamma_time(r: float, alpha: float, v: float, eta: float) -> float:
    """Deterministic bound on the hitting time from radius r when the wind is calm."""
    return (1.0 / math.cos(alpha) + 1.0) * (r - eta) / v + (d1(alpha) + d2(alpha)) * r / v


def c1_sq(alpha: float) -> float:
    c = math.cos(1.5 * alpha)
    return 1.0 + (d1(alpha) - c) ** 2 - c**2


def c2_sq(alpha: float) -> float:
    s = math.sin(alpha / 2)
    return 1.0 + (d2(alpha) + s) ** 2 - s**2


def c1c2_sq_closed(alpha: float) -> float:
    """The expanded product formula, as an independent route to c1^2 c2^2."""
    sec2 = 1.0 / math.cos(2 * alpha)
    s = math.sin(alpha / 2)
    c3 = math.cos(1.5 * alpha)
    first = 1.0 + math.cos(alpha) + 2.0 * ((1.0 + math.cos(alpha) * sec2) * s + sec2 * math.sin(alpha)) ** 2
    second = 1.0 - c3**2 + (1.0 - c3 + s * math.tan(alpha)) ** 2
    return 0.5 * first * second


def _phi(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def strip_stay_prob(a: float, T: float, sigma: float, method: str = "auto", tol: float = 1e-12) -> float:
    """P{ sup_{0<=t<=T} |sigma B_t| < a } for a standard Brownian motion B.

    Two classical series are available: the eigenfunction expansion, which
    converges fast for large T, and the method of images, which converges
    fast for small T. Both are summed until the terms drop below ``tol``.
    """
    if not a > 0:
        raise ValueError("half-width must be > 0")
    if T < 0:
        raise ValueError("T must be >= 0")
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    if T == 0 or sigma == 0:
        return 1.0
    b = a / sigma
    if method == "auto":
        method = "eigen" if math.pi**2 * T / (8 * b * b) > 0.5 else "images"
    if method == "eigen":
        total = 0.0
        k = 0
        while True:
            m = 2 * k + 1
            term = math.exp(-(m * m) * math.pi**2 * T / (8 * b * b)) / m
            total += term if k % 2 == 0 else -term
            if term < tol:
                break
            k += 1
        return min(1.0, max(0.0, 4.0 / math.pi * total))
    if method == "images":
        sq = math.sqrt(T)
        total = _phi(b / sq) - _phi(-b / sq)
        k = 1
        while True:
            # the pair of terms for +k and -k
            term = 2.0 * (_phi((2 * k + 1) * b / sq) - _phi((2 * k - 1) * b / sq))
            total += -term if k % 2 else term
            if abs(term) < tol:
                break
            k += 1
        return min(1.0, max(0.0, total))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class BoundsReport:
    K: float
    d1: float
    d2: float
    Gamma_r: float
    Gamma_r0: float
    c1: float
    c2: float
    c1c2: float
    c1sq_c2sq: float
    c1sq_c2sq_closed: float
    claimed_c1c2_bound: float
    c1c2_within_claim: bool
    p0: float
    E_tau_bound: float
    E_M_bound: float
    V_eta_bound: float
    V_c_eta_bound: float
    astar_tau_bound: float

    def to_dict(self):
        return asdict(self)


def compute_bounds(params: ModelParams, alpha: float, r0: float, r_start: float) -> BoundsReport:
    if not 0 < alpha <= ALPHA_MAX + ALPHA_TOL:
        raise ValueError("alpha must lie in (0, pi/8]")
    if not r0 > params.eta:
        raise ValueError("r0 must exceed eta")
    if not params.eta < r_start <= r0:
        raise ValueError("r_start must lie in (eta, r0]")
    if not params.sigma > 0:
        raise ValueError("the bounds need sigma > 0")
    K = holding_time_K(params.sigma, alpha)
    c1s, c2s = c1_sq(alpha), c2_sq(alpha)
    c1, c2 = math.sqrt(c1s), math.sqrt(c2s)
    g0 = gamma_time(r0, alpha, params.v, params.eta)
    p0 = strip_stay_prob(alpha / 2, g0, params.sigma)
    if not p0 > 0:
        raise ValueError("p0 underflows to zero; the bounds are infinite for these parameters")
    return BoundsReport(
        K=K,
        d1=d1(alpha),
        d2=d2(alpha),
        Gamma_r=gamma_time(r_start, alpha, params.v, params.eta),
        Gamma_r0=g0,
        c1=c1,
        c2=c2,
        c1c2=c1 * c2,
        c1sq_c2sq=c1s * c2s,
        c1sq_c2sq_closed=c1c2_sq_closed(alpha),
        claimed_c1c2_bound=CLAIMED_C1C2_BOUND,
        c1c2_within_claim=c1 * c2 <= CLAIMED_C1C2_BOUND,
        p0=p0,
        E_tau_bound=2 * K / p0,
        E_M_bound=2 / p0 - 1,
        V_eta_bound=K * (1 + 2 / p0),
        V_c_eta_bound=K * (1 + 2 / p0) + params.c * (1 + 2 / p0),
        astar_tau_bound=math.sqrt(2) * (r_start - params.eta) / params.v,
    )
