"""Monte Carlo estimators built on the batch engine.

Sums are accumulated as exact rationals so the reported mean and standard
error do not depend on the order in which paths are merged.
"""

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..dynamics import HALF_PI, THREE_HALF_PI, PolarState
from ..engine import BatchResult, SimConfig, run_batch
from ..strategies import ImpulseA
from ..wind import BrownianCircle

MAX_TIMEOUT_FRACTION = 1e-3


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    n: int
    ci95: Tuple[float, float]
    timeout_count: int

    @property
    def healthy(self) -> bool:
        total = self.n + self.timeout_count
        return total > 0 and self.timeout_count <= MAX_TIMEOUT_FRACTION * total

    def to_dict(self):
        return {"mean": self.mean, "stderr": self.stderr, "n": self.n,
                "ci95": list(self.ci95), "timeouts": self.timeout_count}


@dataclass(frozen=True)
class McAccumulator:
    """Commutative monoid over (count, sum, sum of squares, timeouts)."""

    count: int = 0
    total: Fraction = Fraction(0)
    total_sq: Fraction = Fraction(0)
    timeouts: int = 0

    @classmethod
    def of(cls, values: Iterable[float], timeouts: int = 0) -> "McAccumulator":
        acc = cls(timeouts=timeouts)
        n, s, ss = 0, Fraction(0), Fraction(0)
        for x in values:
            f = Fraction(float(x))
            n += 1
            s += f
            ss += f * f
        return replace(acc, count=n, total=s, total_sq=ss)

    def merge(self, other: "McAccumulator") -> "McAccumulator":
        return McAccumulator(self.count + other.count, self.total + other.total,
                             self.total_sq + other.total_sq, self.timeouts + other.timeouts)

    def estimate(self) -> McEstimate:
        if self.count == 0:
            raise ValueError("no completed paths: every path timed out")
        n = self.count
        mean = self.total / n
        if n > 1:
            var = (self.total_sq - n * mean * mean) / (n - 1)
            se = math.sqrt(float(var) / n)
        else:
            se = math.inf
        m = float(mean)
        return McEstimate(m, se, n, (m - 1.96 * se, m + 1.96 * se), self.timeouts)


def estimate_from_samples(values, hit=None) -> McEstimate:
    values = np.asarray(values, dtype=float)
    if hit is None:
        hit = np.isfinite(values)
    hit = np.asarray(hit, dtype=bool)
    return McAccumulator.of(values[hit], timeouts=int(np.sum(~hit))).estimate()


def estimate_payoff(config: SimConfig, start: Tuple[PolarState, int], n_paths: int, workers: int = 1,
                    first_index: int = 0, batch: Optional[BatchResult] = None) -> McEstimate:
    """Mean penalized time to target over the paths that reached it."""
    if n_paths < 2:
        raise ValueError("n_paths must be >= 2")
    if batch is None:
        batch = run_batch(config, start, n_paths, workers=workers, first_index=first_index)
    return estimate_from_samples(batch.payoff, batch.hit)


@dataclass(frozen=True)
class TailPoint:
    i: int
    prob: float
    stderr: float


def tack_tail_from_batch(batch: BatchResult, i_max: int = 10) -> List[TailPoint]:
    """Empirical P{psi_i < tau}, i.e. P{M >= i}, over paths that reached the target."""
    m = batch.tacks[batch.hit]
    n = len(m)
    if n == 0:
        raise ValueError("no completed paths")
    out = []
    for i in range(i_max + 1):
        p = float(np.mean(m >= i))
        out.append(TailPoint(i, p, math.sqrt(p * (1 - p) / n)))
    return out


def tack_tail_distribution(config: SimConfig, start: Tuple[PolarState, int], n_paths: int,
                           i_max: int = 10, workers: int = 1) -> List[TailPoint]:
    if not isinstance(config.strategy, ImpulseA):
        raise ValueError("the tack tail is defined for strategy A")
    return tack_tail_from_batch(run_batch(config, start, n_paths, workers=workers), i_max)


@dataclass(frozen=True)
class SymmetryPair:
    name: str
    left: McEstimate
    right: McEstimate
    diff: float
    combined_stderr: float
    passed: bool


def _pair(name, a: McEstimate, b: McEstimate) -> SymmetryPair:
    se = math.hypot(a.stderr, b.stderr)
    d = a.mean - b.mean
    return SymmetryPair(name, a, b, d, se, abs(d) <= 3 * se)


def symmetry_check(config: SimConfig, r: float, theta: float, n_paths: int, workers: int = 1) -> List[SymmetryPair]:
    """Compare the payoff at (r, theta, +1) with its two mirror images.

    The three estimates use disjoint path indices, hence independent wind.
    """
    if not isinstance(config.strategy, ImpulseA):
        raise ValueError("symmetry_check is defined for strategy A")
    base = estimate_payoff(config, (PolarState(r, theta), 1), n_paths, workers, first_index=0)
    port = estimate_payoff(config, (PolarState(r, HALF_PI - theta), -1), n_paths, workers, first_index=n_paths)
    refl = estimate_payoff(config, (PolarState(r, THREE_HALF_PI - theta), 1), n_paths, workers,
                           first_index=2 * n_paths)
    return [_pair("port_mirror", base, port), _pair("layline_mirror", base, refl)]


def mirrored_config(config: SimConfig) -> SimConfig:
    """Same wind stream with every increment negated."""
    src = config.wind_source()
    if not isinstance(src, BrownianCircle):
        raise ValueError("mirroring needs Brownian wind")
    return replace(config, wind=BrownianCircle(src.sigma, src.seed, sign=-src.sign))
