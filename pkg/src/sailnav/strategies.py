"""Tacking strategies: the impulse strategy A and the feedback strategy A*.

Strategy A is expressed in the starboard-only representation: a boat on port
at angle theta is the mirror image of a boat on starboard at pi/2 - theta, so
only the starboard tacking region D^1 is needed and a tack becomes the angle
jump theta -> pi/2 - theta.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from .dynamics import (
    HALF_PI,
    PORT,
    STARBOARD,
    THREE_HALF_PI,
    PolarState,
    a_star,
    wrap,
)

ALPHA_MAX = math.pi / 8
# inputs such as 0.3926990817 (pi/8 rounded to 10 digits) are accepted
ALPHA_TOL = 1e-9


@dataclass(frozen=True)
class ImpulseA:
    alpha: float
    r0: float

    def __post_init__(self):
        if not 0.0 < self.alpha <= ALPHA_MAX + ALPHA_TOL:
            raise ValueError(f"alpha must lie in (0, pi/8], got {self.alpha}")
        if not self.r0 > 0.0:
            raise ValueError(f"r0 must be > 0, got {self.r0}")

    def validate(self, eta: float) -> None:
        if not self.r0 > eta:
            raise ValueError(f"r0 ({self.r0}) must exceed eta ({eta})")


@dataclass(frozen=True)
class FeedbackAStar:
    pass


StrategyKind = Union[ImpulseA, FeedbackAStar]


class Decision(Enum):
    HOLD = "hold"
    TACK = "tack"


class RegionId(Enum):
    D1_1 = "D1_1"
    D1_2 = "D1_2"
    Dm1_1 = "Dm1_1"
    Dm1_2 = "Dm1_2"
    C1 = "C1"
    Cm1 = "Cm1"


def in_d1_1_angle(w: float, alpha: float) -> bool:
    """Angular part of D^1_1 for a wrapped angle."""
    return w >= THREE_HALF_PI + alpha or w <= -alpha


def in_d1_2_angle(w: float) -> bool:
    return w >= THREE_HALF_PI or w <= 0.0


def in_dm1_1_angle(w: float, alpha: float) -> bool:
    return HALF_PI + alpha <= w <= math.pi - alpha


def in_dm1_2_angle(w: float) -> bool:
    return HALF_PI <= w <= math.pi


def classify_region(s: PolarState, alpha: float, r0: float, eta: float, tack: int = STARBOARD) -> RegionId:
    """Region of ``s``; D-regions are tested first, then the continuation region of ``tack``.

    Points outside ]eta, r0] fall in the continuation region by convention.
    """
    w = wrap(s.theta)
    if eta < s.r < r0:
        if in_d1_1_angle(w, alpha):
            return RegionId.D1_1
        if in_dm1_1_angle(w, alpha):
            return RegionId.Dm1_1
    elif s.r == r0:
        if in_d1_2_angle(w):
            return RegionId.D1_2
        if in_dm1_2_angle(w):
            return RegionId.Dm1_2
    return RegionId.C1 if tack == STARBOARD else RegionId.Cm1


def in_tacking_region(s: PolarState, tack: int, alpha: float, r0: float, eta: float) -> bool:
    w = wrap(s.theta)
    if tack == STARBOARD:
        return (eta < s.r < r0 and in_d1_1_angle(w, alpha)) or (s.r == r0 and in_d1_2_angle(w))
    return (eta < s.r < r0 and in_dm1_1_angle(w, alpha)) or (s.r == r0 and in_dm1_2_angle(w))


def decide_impulse_A(s: PolarState, tack: int, alpha: float, r0: float, eta: float) -> Decision:
    if in_tacking_region(s, tack, alpha, r0, eta):
        return Decision.TACK
    return Decision.HOLD


def decide_a_star(s: PolarState) -> int:
    return int(a_star(s.theta))


def initial_reduction(s: PolarState, tack: int, second: bool = False) -> Tuple[PolarState, int]:
    """Map a start to its payoff-equivalent counterpart.

    A port start (r, theta) becomes the starboard start (r, pi/2 - theta) and
    a starboard start is returned as is (``port_mirror`` is the underlying
    involution). With ``second=True`` the
    mirror theta -> 3pi/2 - theta about the starboard layline is applied
    afterwards.
    """
    if tack not in (STARBOARD, PORT):
        raise ValueError(f"tack must be +1 or -1, got {tack}")
    theta = s.theta
    out_tack = STARBOARD
    if tack == PORT:
        theta = HALF_PI - theta
    if second:
        theta = THREE_HALF_PI - theta
    return PolarState(s.r, theta), out_tack


def port_mirror(s: PolarState, tack: int) -> Tuple[PolarState, int]:
    """The involution (r, theta, a) -> (r, pi/2 - theta, -a)."""
    return PolarState(s.r, HALF_PI - s.theta), -tack


def in_start_set(s: PolarState, alpha: float, r0: float, eta: float) -> bool:
    """Membership in the canonical start set ]eta, r0] x [pi/2 - alpha, pi/2 + alpha]."""
    w = wrap(s.theta)
    return eta < s.r <= r0 and HALF_PI - alpha <= w <= HALF_PI + alpha


__all__ = [
    "ImpulseA",
    "FeedbackAStar",
    "StrategyKind",
    "Decision",
    "RegionId",
    "classify_region",
    "decide_impulse_A",
    "decide_a_star",
    "initial_reduction",
    "port_mirror",
    "in_start_set",
]
