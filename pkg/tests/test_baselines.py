import math
import warnings

import numpy as np
import pytest

from apfilter import baselines
from apfilter.baselines import (
    BoundaryError,
    GridDensity,
    bootstrap_pf,
    empirical_density,
    fd_ks_solver_1d,
    fokker_planck_rhs,
    kalman_bucy,
    simulate,
    systematic_resample,
)
from apfilter.filter import ModelSpec
from apfilter.metrics import hellinger
from apfilter.polyalg import SparsePolynomial

P = SparsePolynomial
X = P.variable(0, 1)
ONE = P.constant(1.0, 1)
ZERO = P.zero(1)


def scalar_model(f=ZERO, rho=ONE, h=ZERO, q=1.0):
    return ModelSpec([f], [[rho]], [[q]], [h])


def normal_pdf(x, mu=0.0, var=1.0):
    return np.exp(-0.5 * (x - mu) ** 2 / var) / math.sqrt(2 * math.pi * var)


def analytic_density(axes, mu=0.0, var=1.0):
    x = baselines.axis_centres(axes)[0]
    return GridDensity(axes, normal_pdf(x, mu, var))


class TestSimulate:
    def test_deterministic_ode(self):
        model = scalar_model(f=P.constant(0.7, 1), rho=ZERO)
        out = simulate(model, [1.0], 1e-2, 100, 0)
        assert out.states[-1, 0] == pytest.approx(1.0 + 0.7 * 1.0, abs=1e-12)
        np.testing.assert_allclose(out.times[[0, -1]], [0.0, 1.0])

    def test_shapes(self):
        out = simulate(scalar_model(h=X), [0.0], 1e-3, 25, 1)
        assert out.states.shape == (26, 1)
        assert out.dy.shape == (25, 1)

    def test_seed_determinism(self):
        a = simulate(scalar_model(f=-X, h=X), [0.5], 1e-3, 200, 42)
        b = simulate(scalar_model(f=-X, h=X), [0.5], 1e-3, 200, 42)
        np.testing.assert_array_equal(a.states, b.states)
        np.testing.assert_array_equal(a.dy, b.dy)

    def test_brownian_variance(self):
        sigma, T = 0.6, 1.0
        model = scalar_model(rho=P.constant(sigma, 1))
        finals = np.array([simulate(model, [0.0], 0.1, 10, s).states[-1, 0] for s in range(10_000)])
        assert finals.var() == pytest.approx(sigma**2 * T, rel=0.05)

    def test_pure_noise_increments(self):
        dt = 1e-3
        out = simulate(scalar_model(), [0.0], dt, 20_000, 3)
        assert out.dy.var() == pytest.approx(dt, rel=0.05)
        assert abs(out.dy.mean()) < 4 * math.sqrt(dt / 20_000)

    def test_bad_dt(self):
        with pytest.raises(ValueError):
            simulate(scalar_model(), [0.0], 0.0, 10, 0)


class TestFiniteDifference:
    AXIS = (-6.0, 6.0, 1000)

    def test_heat_equation_variance(self):
        sigma, var0, T, dt = 0.5, 0.1, 1.0, 1e-4
        model = scalar_model(rho=P.constant(sigma, 1))
        steps = int(round(T / dt))
        out = fd_ks_solver_1d(model, self.AXIS, lambda x: normal_pdf(x, 0.0, var0), dt, np.zeros((steps, 1)), keep=[steps])
        _, cov = out[-1].moments()
        assert cov[0, 0] == pytest.approx(var0 + sigma**2 * T, rel=0.01)

    def test_ou_stationary_law(self):
        dt, T = 1e-4, 10.0
        steps = int(round(T / dt))
        out = fd_ks_solver_1d(scalar_model(f=-X), self.AXIS, lambda x: normal_pdf(x, 1.5, 0.2), dt, np.zeros((steps, 1)), keep=[steps])
        assert hellinger(out[-1], analytic_density((self.AXIS,), 0.0, 0.5)) < 0.01

    def test_mass_conservation(self):
        axes = (self.AXIS,)
        x = baselines.axis_centres(axes)[0]
        dx = 12.0 / 1000
        p = normal_pdf(x, 0.3, 0.4)
        rhs = fokker_planck_rhs(p, -x, np.ones_like(x), dx)
        assert abs(1e-4 * rhs.sum() * dx) < 1e-8

    def test_measurement_step_normalized(self):
        model = scalar_model(rho=ZERO, h=X)
        out = fd_ks_solver_1d(model, self.AXIS, lambda x: normal_pdf(x, 0.0, 0.3), 1e-4, [[0.05]])
        assert out[-1].integral() == pytest.approx(1.0, abs=1e-12)
        mean, _ = out[-1].moments()
        assert mean[0] > 0

    def test_boundary_violation(self):
        with pytest.raises(BoundaryError):
            fd_ks_solver_1d(scalar_model(), (-2.0, 2.0, 200), lambda x: normal_pdf(x), 1e-4, np.zeros((5, 1)))

    def test_unstable_step_rejected(self):
        with pytest.raises(ValueError):
            fd_ks_solver_1d(scalar_model(), self.AXIS, lambda x: normal_pdf(x), 1e-3, np.zeros((1, 1)))

    def test_two_dimensional_rejected(self):
        x0, x1 = P.variable(0, 2), P.variable(1, 2)
        one = P.constant(1.0, 2)
        model = ModelSpec([x0, x1], [[one], [one]], [[1.0]], [x0])
        with pytest.raises(ValueError):
            fd_ks_solver_1d(model, self.AXIS, lambda x: normal_pdf(x), 1e-4, [])


class TestSystematicResample:
    @pytest.mark.parametrize("u", [0.0, 0.25, 0.5, 0.999])
    def test_two_equal_weights(self, u):
        np.testing.assert_array_equal(np.sort(systematic_resample([0.5, 0.5], u)), [0, 1])

    def test_expected_offspring(self):
        w = np.array([0.05, 0.1, 0.15, 0.3, 0.4])
        n = len(w)
        rng = np.random.default_rng(0)
        counts = np.zeros(n)
        draws = 200_000
        for _ in range(draws):
            counts += np.bincount(systematic_resample(w, rng.uniform()), minlength=n)
        np.testing.assert_allclose(counts / draws, n * w, rtol=0.02)


class TestParticleFilter:
    def test_uninformative_weights(self):
        sampler = lambda rng, n: rng.standard_normal((n, 1))
        out = bootstrap_pf(scalar_model(f=-X), 500, sampler, 1e-2, np.zeros((20, 1)) + 0.3, 0)
        for s in out:
            np.testing.assert_allclose(s.weights, 1.0 / 500, rtol=1e-12)
            assert not s.resampled

    def test_seed_determinism(self):
        sampler = lambda rng, n: rng.standard_normal((n, 1))
        dys = np.full((30, 1), 0.01)
        a = bootstrap_pf(scalar_model(f=-X, h=X), 200, sampler, 1e-2, dys, 5)
        b = bootstrap_pf(scalar_model(f=-X, h=X), 200, sampler, 1e-2, dys, 5)
        np.testing.assert_array_equal(a[-1].particles, b[-1].particles)

    def test_needs_two_particles(self):
        with pytest.raises(ValueError):
            bootstrap_pf(scalar_model(), 1, lambda rng, n: np.zeros((n, 1)), 1e-2, [], 0)

    def test_linear_model_vs_kalman_bucy(self):
        model = scalar_model(f=-X, h=X)
        dt, steps = 1e-3, 1000
        sim = simulate(model, [0.8], dt, steps, 11)
        out = bootstrap_pf(model, 100_000, lambda rng, n: rng.standard_normal((n, 1)), dt, sim.dy, 12)
        km, _ = kalman_bucy(model, [0.0], [[1.0]], dt, sim.dy)
        pf_mean = np.array([s.mean()[0] for s in out])
        assert np.sqrt(np.mean((pf_mean - km[:, 0]) ** 2)) < 0.05


class TestKalmanBucy:
    def test_pure_diffusion(self):
        model = scalar_model(rho=P.constant(0.5, 1))
        _, covs = kalman_bucy(model, [0.0], [[2.0]], 1e-2, np.zeros((100, 1)))
        assert covs[-1, 0, 0] == pytest.approx(2.0 + 0.25 * 1.0, abs=1e-12)

    def test_riccati_steady_state(self):
        model = scalar_model(f=-X, h=X)
        _, covs = kalman_bucy(model, [0.0], [[1.0]], 1e-3, np.zeros((20_000, 1)))
        assert covs[-1, 0, 0] == pytest.approx(math.sqrt(2) - 1, abs=1e-4)

    def test_dt_refinement(self):
        model = scalar_model(f=-X, h=X)
        p_coarse = kalman_bucy(model, [0.0], [[1.0]], 1e-4, np.zeros((10_000, 1)))[1][-1, 0, 0]
        p_fine = kalman_bucy(model, [0.0], [[1.0]], 5e-5, np.zeros((20_000, 1)))[1][-1, 0, 0]
        assert abs(p_coarse - p_fine) < 1e-4

    def test_rejects_nonlinear(self):
        with pytest.raises(ValueError):
            kalman_bucy(scalar_model(f=-X * X * X, h=X), [0.0], [[1.0]], 1e-3, [[0.0]])


class TestEmpiricalDensity:
    AXES = ((-5.0, 5.0, 200),)

    def test_delta(self):
        g = empirical_density(np.full((50, 1), 0.01), self.AXES)
        assert np.count_nonzero(g.values) == 1
        assert g.integral() == pytest.approx(1.0, abs=1e-14)

    def test_normal_samples(self):
        samples = np.random.default_rng(0).standard_normal((1_000_000, 1))
        assert hellinger(empirical_density(samples, self.AXES), analytic_density(self.AXES)) < 0.01

    def test_coverage_warning(self):
        pts = np.concatenate([np.zeros(98), np.full(2, 10.0)])[:, None]
        with pytest.warns(RuntimeWarning, match="covers"):
            empirical_density(pts, self.AXES)

    def test_no_warning_when_covered(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            empirical_density(np.zeros((10, 1)), self.AXES)

    def test_empty(self):
        with pytest.raises(ValueError):
            empirical_density(np.zeros((0, 1)), self.AXES)

    def test_weighted(self):
        g = empirical_density([[-1.0], [1.0]], self.AXES, weights=[0.25, 0.75])
        mean, _ = g.moments()
        assert mean[0] == pytest.approx(0.5, abs=0.05)


class TestGridDensity:
    def test_csv_roundtrip(self, tmp_path):
        rng = np.random.default_rng(0)
        g = GridDensity(((-1.0, 2.0, 4), (0.0, 1.0, 3)), rng.random((4, 3)))
        g.to_csv(tmp_path / "g.csv")
        back = GridDensity.from_csv(tmp_path / "g.csv")
        assert back.axes == g.axes
        np.testing.assert_array_equal(back.values, g.values)

    def test_normalized(self):
        g = GridDensity(((0.0, 1.0, 10),), np.arange(10.0)).normalized()
        assert g.integral() == pytest.approx(1.0, abs=1e-12)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            GridDensity(((0.0, 1.0, 10),), np.ones(9))

    def test_point_order(self):
        pts = GridDensity(((0.0, 2.0, 2), (0.0, 3.0, 3)), np.ones((2, 3))).points()
        np.testing.assert_allclose(pts[:3], [[0.5, 0.5], [0.5, 1.5], [0.5, 2.5]])
