import numpy as np
import pytest

from apfilter.bijection import GaussianBijection, StaticBijection, picard_iterate
from apfilter.expfam import (
    ExpFamily,
    FisherError,
    QuadratureError,
    cholesky_with_jitter,
    defect_gradient,
    expectation_ratio,
    extended_expectations,
    fisher_solve,
    full_cgf,
    log_partition,
    moments_and_fisher,
    normalization_defect,
    ratio_moments,
)
from apfilter.polyalg import SparsePolynomial
from apfilter.quadrature import QuadratureGrid, from_rule, gauss_chebyshev, gauss_hermite_1d, smolyak

from oracles import dense_log_partition, gaussian_psi, gaussian_theta_1d

GAUSS = ExpFamily.gaussian(1)
QUARTIC = ExpFamily.polynomial(1, 4)
THETA0 = np.array([0.0, 2.0, 0.0, -1.0])


def gh(n):
    return from_rule(gauss_hermite_1d(n))


def matched_gh(mu, var):
    return GaussianBijection.from_moments([mu], [[var]], "hermite_affine")


def x_pow(k):
    return SparsePolynomial.monomial((k,))


class TestFamily:
    def test_dimensions(self):
        fam = ExpFamily.polynomial(2, 4)
        assert (fam.dim, fam.m, fam.m_h) == (2, 14, 0)

    def test_extended_must_start_with_stats(self):
        with pytest.raises(ValueError):
            ExpFamily(QUARTIC.stats, (x_pow(5),))

    def test_distinct(self):
        with pytest.raises(ValueError):
            ExpFamily((x_pow(1), x_pow(1)))

    def test_index_of(self):
        fam = QUARTIC.with_extension(QUARTIC.stats + (x_pow(6),))
        assert fam.index_of((6,)) == 4
        with pytest.raises(KeyError):
            fam.index_of((5,))


class TestLogPartition:
    @pytest.mark.parametrize("n", [1, 2, 5, 9, 31])
    def test_standard_gaussian_exact(self, n):
        psi = log_partition([0.0, -0.5], matched_gh(0, 1), gh(n), GAUSS)
        assert abs(psi - 0.5 * np.log(2 * np.pi)) < 1e-12

    def test_shifted_gaussian(self):
        psi = log_partition([1.0, -0.5], matched_gh(1, 1), gh(7), GAUSS)
        assert abs(psi - (0.5 + 0.5 * np.log(2 * np.pi))) < 1e-12

    def test_quartic_gcq9_against_dense(self):
        grid = from_rule(gauss_chebyshev(9))
        bij, _ = picard_iterate(THETA0, QUARTIC, GaussianBijection.standard(1), grid)
        psi_ref, *_ = dense_log_partition(THETA0, QUARTIC)
        assert abs(log_partition(THETA0, bij, grid, QUARTIC) - psi_ref) < 1e-4

    def test_quartic_patterson_against_dense(self):
        grid = smolyak(1, 5, "gauss_patterson")
        bij, _ = picard_iterate(THETA0, QUARTIC, GaussianBijection.standard(1), grid)
        psi_ref, *_ = dense_log_partition(THETA0, QUARTIC)
        assert abs(log_partition(THETA0, bij, grid, QUARTIC) - psi_ref) < 1e-10

    def test_overflow_safe(self):
        # exponents of several hundred must not overflow
        theta = np.array([400.0, -1.0])
        psi = log_partition(theta, matched_gh(200, 0.5), gh(9), GAUSS)
        assert psi == pytest.approx(gaussian_psi(theta), rel=1e-12)

    def test_incompatible_domain(self):
        with pytest.raises(ValueError):
            log_partition([0.0, -0.5], matched_gh(0, 1), from_rule(gauss_chebyshev(5)), GAUSS)

    def test_non_finite_integrand(self):
        with pytest.raises(QuadratureError), np.errstate(invalid="ignore"):
            log_partition([np.inf, -0.5], matched_gh(0, 1), gh(5), GAUSS)

    def test_reordering_invariance(self):
        grid = smolyak(1, 5, "gauss_patterson")
        perm = np.random.default_rng(0).permutation(len(grid))
        shuffled = QuadratureGrid(1, grid.level, grid.family, grid.nodes[perm], grid.weights[perm])
        bij = GaussianBijection.from_moments([0.1], [[0.7]])
        a = log_partition(THETA0, bij, grid, QUARTIC)
        b = log_partition(THETA0, bij, shuffled, QUARTIC)
        assert np.exp(a) == pytest.approx(np.exp(b), rel=1e-12)


class TestMomentsAndFisher:
    def test_standard_gaussian(self):
        res = moments_and_fisher([0.0, -0.5], matched_gh(0, 1), gh(9), GAUSS)
        np.testing.assert_allclose(res.eta, [0, 1], atol=1e-12)
        np.testing.assert_allclose(res.fisher, [[1, 0], [0, 2]], atol=1e-12)

    def test_mean_one_variance_four(self):
        res = moments_and_fisher(gaussian_theta_1d(1.0, 4.0), matched_gh(1, 4), gh(9), GAUSS)
        np.testing.assert_allclose(res.eta, [1, 5], rtol=1e-12)

    def test_ad_matches_ratio_formulas(self):
        grid = smolyak(1, 5, "gauss_patterson")
        bij = GaussianBijection.from_moments([0.2], [[0.9]])
        rng = np.random.default_rng(4)
        for _ in range(20):
            theta = np.array([rng.uniform(-1, 1), rng.uniform(-1, 2), rng.uniform(-0.5, 0.5), rng.uniform(-1.5, -0.5)])
            res = moments_and_fisher(theta, bij, grid, QUARTIC)
            eta, cov = ratio_moments(theta, bij, grid, QUARTIC)
            np.testing.assert_allclose(res.eta, eta, rtol=1e-9, atol=1e-12)
            np.testing.assert_allclose(res.fisher, cov, rtol=1e-9, atol=1e-12)
            assert expectation_ratio(SparsePolynomial.constant(1.0, 1), theta, bij, grid, QUARTIC) == pytest.approx(1.0, abs=1e-12)

    def test_full_cgf_consistent(self):
        fam = QUARTIC.with_extension(QUARTIC.stats + (x_pow(5), x_pow(6)))
        grid = smolyak(1, 5, "gauss_patterson")
        bij = GaussianBijection.standard(1)
        a = full_cgf(THETA0, fam, bij, grid)
        b = moments_and_fisher(THETA0, bij, grid, fam)
        np.testing.assert_allclose(a.eta_ext[:4], b.eta, rtol=1e-9, atol=1e-12)
        np.testing.assert_allclose(a.fisher, b.fisher, rtol=1e-9, atol=1e-12)
        assert a.psi == pytest.approx(b.psi, abs=1e-12)


class TestExpectationRatio:
    def test_unit(self):
        val = expectation_ratio(SparsePolynomial.constant(1.0, 1), [0.0, -0.5], matched_gh(0, 1), gh(9), GAUSS)
        assert val == pytest.approx(1.0, abs=1e-14)

    def test_odd_symmetry(self):
        assert abs(expectation_ratio(x_pow(1), [0.0, -0.5], matched_gh(0, 1), gh(9), GAUSS)) < 1e-12

    def test_third_moment(self):
        grid = from_rule(gauss_hermite_1d(31))
        val = expectation_ratio(x_pow(3), gaussian_theta_1d(0.5, 1.0), matched_gh(0.5, 1.0), grid, GAUSS)
        assert abs(val - 1.625) < 1e-6


class TestExtendedExpectations:
    fam = QUARTIC.with_extension(QUARTIC.stats + (x_pow(5), x_pow(6)))
    theta = np.array([0.0, -0.5, 0.0, -1e-8])

    def test_agrees_with_ratio(self):
        grid = smolyak(1, 5, "gauss_patterson")
        bij = GaussianBijection.from_moments([0.1], [[1.2]])
        eta_ext = extended_expectations(THETA0, self.fam, bij, grid)
        for k, s in enumerate(self.fam.extended):
            assert eta_ext[k] == pytest.approx(expectation_ratio(s, THETA0, bij, grid, self.fam), rel=1e-9, abs=1e-12)

    def test_odd_fifth_moment(self):
        grid = from_rule(gauss_chebyshev(15))
        bij, _ = picard_iterate(self.theta, self.fam, GaussianBijection.standard(1), grid)
        assert abs(extended_expectations(self.theta, self.fam, bij, grid)[4]) < 1e-6

    def test_sixth_moment_gcq15(self):
        grid = from_rule(gauss_chebyshev(15))
        bij, _ = picard_iterate(self.theta, self.fam, GaussianBijection.standard(1), grid)
        assert abs(extended_expectations(self.theta, self.fam, bij, grid)[5] - 15.0) < 1e-3

    def test_sixth_moment_hermite(self):
        bij = GaussianBijection.standard(1, "hermite_affine")
        assert abs(extended_expectations(self.theta, self.fam, bij, gh(9))[5] - 15.0) < 1e-3

    def test_erf_map_converges_with_level(self):
        errors = []
        for level in (3, 4, 5, 6, 7):
            grid = smolyak(1, level, "gauss_patterson")
            bij, _ = picard_iterate(self.theta, self.fam, GaussianBijection.standard(1), grid)
            errors.append(abs(extended_expectations(self.theta, self.fam, bij, grid)[5] - 15.0))
        assert all(a > b for a, b in zip(errors, errors[1:]))


class TestNormalizationDefect:
    def test_matched_gaussian(self):
        psi_ref = gaussian_psi([0.3, -0.8])
        bij = matched_gh(0.3 / 1.6, 1 / 1.6)
        assert abs(normalization_defect([0.3, -0.8], bij, gh(5), GAUSS, psi_ref)) < 1e-12

    def test_static_bijection_shifted_mean(self):
        theta = gaussian_theta_1d(np.pi / 2, 1.0)
        d = normalization_defect(theta, StaticBijection(1), from_rule(gauss_chebyshev(16)), GAUSS, gaussian_psi(theta))
        assert abs(d) > 1e-2

    def test_decreases_with_level(self):
        psi_ref, *_ = dense_log_partition(THETA0, QUARTIC)
        defects = []
        for level in (3, 4, 5):
            grid = smolyak(1, level, "gauss_patterson")
            bij, _ = picard_iterate(THETA0, QUARTIC, GaussianBijection.standard(1), grid)
            defects.append(abs(normalization_defect(THETA0, bij, grid, QUARTIC, psi_ref)))
        assert defects[0] > defects[1] > defects[2]


class TestDefectGradient:
    @pytest.mark.parametrize("mu,var", [(0.3, 0.8), (-0.4, 1.3)])
    def test_against_finite_differences(self, mu, var):
        psi_ref, *_ = dense_log_partition(THETA0, QUARTIC)
        grid = from_rule(gauss_chebyshev(9))

        def sq(m, v):
            return normalization_defect(THETA0, GaussianBijection.from_moments([m], [[v]]), grid, QUARTIC, psi_ref) ** 2

        grad = defect_gradient(THETA0, GaussianBijection.from_moments([mu], [[var]]), grid, QUARTIC, psi_ref)
        h = 1e-6
        fd = np.array([(sq(mu + h, var) - sq(mu - h, var)) / (2 * h), (sq(mu, var + h) - sq(mu, var - h)) / (2 * h)])
        np.testing.assert_allclose(grad, fd, rtol=1e-4)


class TestFisherSolve:
    def test_solves(self):
        rng = np.random.default_rng(1)
        a = rng.normal(size=(5, 5))
        g = a @ a.T + 5 * np.eye(5)
        b = rng.normal(size=5)
        np.testing.assert_allclose(fisher_solve(g, b), np.linalg.solve(g, b), rtol=1e-10)

    def test_badly_scaled(self):
        # diagonal spanning 20 orders of magnitude is harmless after equilibration
        d = np.logspace(-10, 10, 4)
        g = np.diag(d) + 0.1 * np.sqrt(np.outer(d, d)) * (1 - np.eye(4))
        f = cholesky_with_jitter(g)
        assert f.jitter == 0.0
        b = np.ones(4)
        x = f.solve(b)
        # residual measured against the size of the summands in g @ x
        assert np.all(np.abs(g @ x - b) <= 1e-12 * (np.abs(g) @ np.abs(x)))

    def test_jitter_ladder(self):
        g = np.array([[1.0, 1.0], [1.0, 1.0]])
        assert cholesky_with_jitter(g).jitter > 0

    def test_indefinite(self):
        with pytest.raises(FisherError):
            cholesky_with_jitter(np.array([[1.0, 2.0], [2.0, 1.0]]))
        with pytest.raises(FisherError):
            cholesky_with_jitter(np.array([[0.0, 0.0], [0.0, 1.0]]))
