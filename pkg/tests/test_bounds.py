import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sailnav.analysis.bounds import (
    CLAIMED_C1C2_BOUND,
    c1_sq,
    c1c2_sq_closed,
    c2_sq,
    compute_bounds,
    d1,
    d2,
    gamma_time,
    holding_time_K,
    strip_stay_prob,
)
from sailnav.dynamics import ModelParams

PI = math.pi
A8 = PI / 8


def mc_strip(a, T, sigma, n_paths, n_steps, seed):
    """Discretised Brownian paths with a Brownian-bridge exit correction per step."""
    rng = np.random.default_rng(seed)
    dt = T / n_steps
    x = np.zeros(n_paths)
    alive = np.ones(n_paths, dtype=bool)
    s = sigma * math.sqrt(dt)
    for _ in range(n_steps):
        y = x + s * rng.standard_normal(n_paths)
        out = np.abs(y) >= a
        # bridge crossing probabilities of each barrier between the two grid points
        p_up = np.exp(-2 * np.clip(a - x, 0, None) * np.clip(a - y, 0, None) / (sigma**2 * dt))
        p_dn = np.exp(-2 * np.clip(a + x, 0, None) * np.clip(a + y, 0, None) / (sigma**2 * dt))
        crossed = rng.random(n_paths) < np.clip(p_up + p_dn, 0, 1)
        alive &= ~(out | crossed)
        x = y
    p = alive.mean()
    return p, math.sqrt(p * (1 - p) / n_paths)


class TestConstants:
    def test_K_example(self):
        # direct arithmetic: (pi/8 + 3pi/4)^2 / 4 = (7pi/8)^2 / 4
        assert holding_time_K(2.0, A8) == pytest.approx((7 * PI / 8) ** 2 / 4, rel=1e-14)
        assert holding_time_K(2.0, A8) == pytest.approx(1.889104, abs=1e-6)

    def test_K_needs_sigma(self):
        with pytest.raises(ValueError):
            holding_time_K(0.0, A8)

    def test_d_and_gamma(self):
        assert d1(A8) == pytest.approx(1.080809, abs=1e-6)
        assert d2(A8) == pytest.approx(0.796094, abs=1e-6)
        assert gamma_time(1.0, A8, 1.0, 0.0) == pytest.approx(3.959295, abs=1e-6)

    def test_c1c2_product(self):
        prod = c1_sq(A8) * c2_sq(A8)
        assert prod == pytest.approx(0.72, abs=0.01)
        assert prod == pytest.approx(0.721034, abs=1e-6)
        assert prod == pytest.approx(c1c2_sq_closed(A8), rel=1e-12)
        assert math.sqrt(prod) < 1
        # the printed 3/4 bound on c1 c2 does not hold at pi/8
        assert math.sqrt(prod) > CLAIMED_C1C2_BOUND

    @given(st.floats(1e-4, A8))
    def test_contraction_below_pi_over_8(self, alpha):
        assert c1_sq(alpha) * c2_sq(alpha) < 1
        assert c1_sq(alpha) * c2_sq(alpha) == pytest.approx(c1c2_sq_closed(alpha), rel=1e-10)

    def test_gamma_monotone(self):
        rs = np.linspace(0.2, 5, 50)
        g = [gamma_time(r, A8, 1.0, 0.1) for r in rs]
        assert all(b > a for a, b in zip(g, g[1:]))
        vs = np.linspace(0.2, 5, 50)
        g = [gamma_time(1.0, A8, v, 0.1) for v in vs]
        assert all(b < a for a, b in zip(g, g[1:]))


class TestStrip:
    def test_trivial(self):
        assert strip_stay_prob(1.0, 0.0, 1.0) == 1.0
        assert strip_stay_prob(1.0, 5.0, 0.0) == 1.0

    def test_frozen_values(self):
        assert strip_stay_prob(1.0, 0.1, 1.0) == pytest.approx(0.996869, abs=1e-6)
        assert strip_stay_prob(1.0, 0.5, 1.0) == pytest.approx(0.685446, abs=1e-6)
        assert strip_stay_prob(1.0, 1.0, 1.0) == pytest.approx(0.370777, abs=1e-6)
        assert strip_stay_prob(1.0, 3.0, 1.0) == pytest.approx(0.031444, abs=1e-6)

    @pytest.mark.parametrize("T", [0.05, 0.3, 1.0, 2.0, 8.0])
    def test_series_agree(self, T):
        assert strip_stay_prob(1.0, T, 1.0, "eigen") == pytest.approx(strip_stay_prob(1.0, T, 1.0, "images"),
                                                                        abs=1e-10)

    def test_scipy_oracle(self):
        # the exit time density from the Kolmogorov-type theta series, integrated numerically
        from scipy.integrate import quad

        def density(t):
            return sum(math.pi / 2 * (2 * k + 1) * (-1) ** k * math.exp(-(2 * k + 1) ** 2 * math.pi**2 * t / 8)
                       for k in range(200))

        exit_by_1 = quad(density, 1e-9, 1.0, limit=200)[0]
        assert 1 - exit_by_1 == pytest.approx(strip_stay_prob(1.0, 1.0, 1.0), abs=1e-6)

    def test_monte_carlo_example(self):
        p_mc, se = mc_strip(1.0, 1.0, 1.0, 100_000, 200, seed=1)
        assert abs(p_mc - strip_stay_prob(1.0, 1.0, 1.0)) <= 3 * se

    def test_monte_carlo_random_triples(self):
        rng = np.random.default_rng(2024)
        for k in range(10):
            a, T, sigma = rng.uniform(0.2, 1.5), rng.uniform(0.1, 3.0), rng.uniform(0.3, 2.0)
            p_mc, se = mc_strip(a, T, sigma, 20_000, 100, seed=100 + k)
            assert abs(p_mc - strip_stay_prob(a, T, sigma)) <= 3 * se + 1e-3

    @settings(max_examples=50)
    @given(st.floats(0.05, 3), st.floats(0.01, 10), st.floats(0.1, 3), st.floats(1.01, 2))
    def test_monotone(self, a, T, sigma, f):
        p = strip_stay_prob(a, T, sigma)
        assert strip_stay_prob(a, T * f, sigma) <= p + 1e-12
        assert strip_stay_prob(a * f, T, sigma) >= p - 1e-12

    def test_errors(self):
        with pytest.raises(ValueError):
            strip_stay_prob(0.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            strip_stay_prob(1.0, -1.0, 1.0)
        with pytest.raises(ValueError):
            strip_stay_prob(1.0, 1.0, 1.0, method="bogus")


class TestReport:
    def test_chain(self):
        params = ModelParams(sigma=1.0, v=1.0, c=0.5, eta=0.1)
        rep = compute_bounds(params, A8, 2.0, 1.0)
        assert rep.K == pytest.approx((A8 + 0.75 * PI) ** 2)
        assert 0 < rep.p0 < 1
        assert rep.E_tau_bound == pytest.approx(2 * rep.K / rep.p0)
        assert rep.E_M_bound == pytest.approx(2 / rep.p0 - 1)
        assert rep.V_c_eta_bound == pytest.approx(rep.K * (1 + 2 / rep.p0) + 0.5 * (1 + 2 / rep.p0))
        assert rep.astar_tau_bound == pytest.approx(math.sqrt(2) * 0.9)
        assert rep.c1c2 < 1
        assert not rep.c1c2_within_claim
        d = rep.to_dict()
        assert all(math.isfinite(x) and x > 0 for x in d.values() if isinstance(x, float))

    def test_rounded_pi_over_8_accepted(self):
        rep = compute_bounds(ModelParams(sigma=1.0, eta=0.1), 0.3926990817, 2.0, 2.0)
        assert rep.c1sq_c2sq == pytest.approx(0.72, abs=0.01)

    def test_deterministic(self):
        params = ModelParams(sigma=1.0, v=1.0, c=0.5, eta=0.1)
        assert compute_bounds(params, A8, 1.0, 1.0) == compute_bounds(params, A8, 1.0, 1.0)

    @pytest.mark.parametrize("alpha,r0,r", [(0.0, 1.0, 0.5), (0.5, 1.0, 0.5), (A8, 0.05, 0.05), (A8, 1.0, 1.5),
                                            (A8, 1.0, 0.1)])
    def test_domain(self, alpha, r0, r):
        with pytest.raises(ValueError):
            compute_bounds(ModelParams(sigma=1.0, eta=0.1), alpha, r0, r)

    def test_needs_noise(self):
        with pytest.raises(ValueError):
            compute_bounds(ModelParams(sigma=0.0, eta=0.1), A8, 1.0, 1.0)
