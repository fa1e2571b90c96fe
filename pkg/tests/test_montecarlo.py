import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sailnav.analysis.bounds import compute_bounds
from sailnav.analysis.montecarlo import (
    McAccumulator,
    estimate_from_samples,
    estimate_payoff,
    mirrored_config,
    symmetry_check,
    tack_tail_distribution,
)
from sailnav.dynamics import STARBOARD, ModelParams, PolarState
from sailnav.engine import SimConfig, run, run_batch
from sailnav.strategies import FeedbackAStar, ImpulseA
from sailnav.wind import Constant

PI = math.pi
A8 = PI / 8
PARAMS = ModelParams(sigma=1.0, v=1.0, c=0.5, eta=0.1)


def impulse_config(params=PARAMS, **kw):
    return SimConfig(params, ImpulseA(A8, 1.0), dt=1e-3, **kw)


class TestAccumulator:
    def test_matches_numpy(self):
        x = np.random.default_rng(0).exponential(size=500)
        est = McAccumulator.of(x).estimate()
        assert est.mean == pytest.approx(x.mean(), rel=1e-14)
        assert est.stderr == pytest.approx(x.std(ddof=1) / math.sqrt(500), rel=1e-12)
        assert est.ci95 == pytest.approx((est.mean - 1.96 * est.stderr, est.mean + 1.96 * est.stderr))

    @settings(max_examples=50)
    @given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=60), st.randoms(use_true_random=False))
    def test_order_independent(self, xs, rnd):
        a = McAccumulator.of(xs).estimate()
        ys = list(xs)
        rnd.shuffle(ys)
        k = rnd.randint(0, len(ys))
        b = McAccumulator.of(ys[k:]).merge(McAccumulator.of(ys[:k])).estimate()
        assert a == b

    def test_all_timeouts(self):
        with pytest.raises(ValueError):
            McAccumulator.of([], timeouts=3).estimate()

    def test_single_sample(self):
        assert math.isinf(McAccumulator.of([1.0]).estimate().stderr)

    def test_samples_with_misses(self):
        est = estimate_from_samples([1.0, math.nan, 3.0])
        assert (est.mean, est.n, est.timeout_count) == (2.0, 2, 1)
        assert not est.healthy
        d = est.to_dict()
        assert d["timeouts"] == 1 and d["n"] == 2


def test_a_star_calm_estimate_exact():
    dt = 1e-3
    cfg = SimConfig(ModelParams(sigma=0.0, v=1.0, eta=1.0), FeedbackAStar(), dt=dt)
    est = estimate_payoff(cfg, (PolarState(2.0, PI / 4), STARBOARD), 20)
    assert est.stderr == 0.0
    assert abs(est.mean - math.sqrt(2)) <= 2 * dt


def test_impulse_estimate_below_value_bound():
    start = (PolarState(1.0, PI / 2), STARBOARD)
    est = estimate_payoff(impulse_config(), start, 2000)
    rep = compute_bounds(PARAMS, A8, 1.0, 1.0)
    assert est.healthy
    assert est.mean <= rep.V_c_eta_bound + 3 * est.stderr


def test_stderr_shrinks_like_root_two():
    cfg = impulse_config()
    start = (PolarState(1.0, PI / 2), STARBOARD)
    batch = run_batch(cfg, start, 20_000)
    half = estimate_from_samples(batch.payoff[:10_000], batch.hit[:10_000])
    full = estimate_from_samples(batch.payoff, batch.hit)
    assert 1.2 <= half.stderr / full.stderr <= 1.7


def test_payoff_order_independent_across_blocks():
    cfg = impulse_config()
    start = (PolarState(1.0, PI / 2), STARBOARD)
    a = estimate_payoff(cfg, start, 60)
    batch = run_batch(cfg, start, 60, block=7)
    idx = list(range(60))
    random.Random(3).shuffle(idx)
    b = estimate_from_samples(batch.payoff[idx], batch.hit[idx])
    assert a == b


def test_estimate_needs_two_paths():
    with pytest.raises(ValueError):
        estimate_payoff(impulse_config(), (PolarState(1.0, PI / 2), STARBOARD), 1)


class TestTail:
    def test_zero_is_one_and_monotone(self):
        tail = tack_tail_distribution(impulse_config(), (PolarState(1.0, PI / 2), STARBOARD), 500)
        assert tail[0].prob == 1.0
        assert all(b.prob <= a.prob for a, b in zip(tail, tail[1:]))

    def test_calm_limit(self):
        params = ModelParams(sigma=1e-3, v=1.0, c=0.5, eta=0.1)
        tail = tack_tail_distribution(impulse_config(params), (PolarState(1.0, PI / 2 - 0.2), STARBOARD), 200)
        assert tail[2].prob == 0.0

    def test_needs_impulse(self):
        cfg = SimConfig(PARAMS, FeedbackAStar(), dt=1e-3)
        with pytest.raises(ValueError):
            tack_tail_distribution(cfg, (PolarState(1.0, 0.0), STARBOARD), 10)


class TestSymmetry:
    def test_diagonal_start_is_noise_only(self):
        pairs = symmetry_check(impulse_config(), 1.0, PI / 4, 400)
        port = pairs[0]
        assert port.name == "port_mirror"
        assert port.passed

    def test_coupled_layline_mirror_is_exact(self):
        cfg = impulse_config()
        mir = mirrored_config(cfg)
        for th in (1.3, 1.7):
            for i in range(30):
                a = run(cfg, (PolarState(0.9, th), STARBOARD), path_index=i)
                b = run(mir, (PolarState(0.9, 1.5 * PI - th), STARBOARD), path_index=i)
                assert a.tacks == b.tacks
                assert a.payoff == pytest.approx(b.payoff, abs=1e-9)

    def test_mirror_needs_brownian(self):
        with pytest.raises(ValueError):
            mirrored_config(impulse_config(wind=Constant(0.0)))

    def test_needs_impulse(self):
        with pytest.raises(ValueError):
            symmetry_check(SimConfig(PARAMS, FeedbackAStar(), dt=1e-3), 1.0, 0.5, 10)
