import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apfilter.config import default_config
from apfilter.filter import ModelSpec
from apfilter.polyalg import (
    SparsePolynomial,
    SpanError,
    build_decomposition,
    diffusion_covariance,
    generator_apply,
    monomials_up_to,
    reconstruct,
)

P = SparsePolynomial


def x(i, d):
    return P.variable(i, d)


def random_poly(rng, dim=2, degree=4, n_terms=6):
    terms = {}
    for _ in range(n_terms):
        e = rng.integers(0, degree + 1, size=dim)
        while e.sum() > degree:
            e[rng.integers(dim)] -= 1
        terms[tuple(e)] = rng.normal()
    return P(terms, dim)


def cubic_model():
    return default_config("cubic").model


class TestArithmetic:
    def test_additive_inverse_is_empty(self):
        z = x(0, 1) + (-x(0, 1))
        assert z.is_zero()
        assert z.terms == {}

    def test_add_small(self):
        p = P({(0,): 1, (2,): 1}, 1) + x(0, 1)
        assert p.terms == {(0,): 1.0, (1,): 1.0, (2,): 1.0}

    def test_mul_monomials(self):
        assert (x(0, 2) * x(1, 2)).terms == {(1, 1): 1.0}

    def test_binomial(self):
        p = (1 + x(0, 1)) ** 2
        assert p.terms == {(0,): 1.0, (1,): 2.0, (2,): 1.0}

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            x(0, 1) + x(0, 2)
        with pytest.raises(ValueError):
            x(0, 1) * x(0, 2)

    def test_canonical_form_drops_tiny(self):
        p = P({(1,): 1.0, (2,): 1e-16}, 1)
        assert p.terms == {(1,): 1.0}
        assert (x(0, 1) * 0.0).is_zero()

    def test_evaluation_oracle(self):
        rng = np.random.default_rng(0)
        pts = rng.uniform(-1.5, 1.5, size=(100, 2))
        for _ in range(10):
            p, q = random_poly(rng), random_poly(rng)
            np.testing.assert_allclose((p + q)(pts), p(pts) + q(pts), atol=1e-12, rtol=0)
            prod = (p * q)(pts)
            np.testing.assert_allclose(prod, p(pts) * q(pts), rtol=1e-12, atol=1e-12)
            assert (p * q).degree() == p.degree() + q.degree()

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.floats(-3, 3), min_size=2, max_size=2), st.integers(0, 1000))
    def test_ring_axioms(self, pt, seed):
        rng = np.random.default_rng(seed)
        p, q, r = random_poly(rng), random_poly(rng), random_poly(rng)
        lhs = (p * (q + r))(pt)
        rhs = p(pt) * q(pt) + p(pt) * r(pt)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-9)

    def test_ordering_graded_lex(self):
        keys = list(P({(0, 2): 1, (1, 0): 1, (2, 0): 1, (1, 1): 1, (0, 0): 1, (0, 1): 1}, 2).terms)
        assert keys == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]

    def test_text_roundtrip(self):
        p = random_poly(np.random.default_rng(3))
        assert P.from_text(p.to_text(), 2) == p


class TestDiff:
    def test_simple(self):
        p = P({(2, 1): 1.0}, 2)
        assert p.diff(0) == P({(1, 1): 2.0}, 2)

    def test_constant(self):
        assert P.constant(3.0, 1).diff(0).is_zero()

    def test_axis_out_of_range(self):
        with pytest.raises(IndexError):
            x(0, 2).diff(2)

    def test_finite_difference(self):
        rng = np.random.default_rng(1)
        p = random_poly(rng)
        h = 1e-6
        for pt in rng.uniform(-1, 1, size=(10, 2)):
            for axis in range(2):
                e = np.zeros(2)
                e[axis] = h
                fd = (p(pt + e) - p(pt - e)) / (2 * h)
                exact = p.diff(axis)(pt)
                assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))


class TestGenerator:
    def test_drift_of_identity(self):
        out = generator_apply([P.constant(0.25, 1)], [[P.constant(0.16, 1)]], x(0, 1))
        assert out == P.constant(0.25, 1)

    def test_ito_correction(self):
        out = generator_apply([P.zero(1)], [[P.constant(0.16, 1)]], x(0, 1) ** 2)
        assert out == P.constant(0.16, 1)

    def test_cubic_sensor_x4(self):
        out = generator_apply([P.constant(0.25, 1)], [[P.constant(0.16, 1)]], x(0, 1) ** 4)
        assert out.terms == pytest.approx({(3,): 1.0, (2,): 0.96})

    def test_linear_in_phi(self):
        rng = np.random.default_rng(2)
        f = [random_poly(rng), random_poly(rng)]
        a01 = random_poly(rng)
        a = [[random_poly(rng), a01], [a01, random_poly(rng)]]
        phi, gamma = random_poly(rng), random_poly(rng)
        lhs = generator_apply(f, a, 2.0 * phi - 3.0 * gamma)
        rhs = 2.0 * generator_apply(f, a, phi) - 3.0 * generator_apply(f, a, gamma)
        diff = lhs - rhs
        assert all(abs(v) < 1e-10 for v in diff.terms.values())

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            generator_apply([P.zero(2)], [[P.zero(2)]], x(0, 2))


class TestDecomposition:
    def test_linear_model(self):
        model = ModelSpec([-x(0, 1)], [[P.constant(1.0, 1)]], np.eye(1), [x(0, 1)])
        dc = build_decomposition(model, monomials_up_to(1, 2))
        np.testing.assert_array_equal(dc.lam[:, 0], [1.0, 0.0])
        assert dc.b0 == 0.0
        np.testing.assert_allclose(dc.b_h[:2], [0.0, 0.5])

    def test_cubic_sensor(self):
        dc = build_decomposition(cubic_model(), monomials_up_to(1, 4))
        np.testing.assert_allclose(dc.lam[:, 0], [0, 0, 0.8, 0])
        degrees = [s.degree() for s in dc.extended]
        # x**5 never appears in L[c] or (h^T h) c for this model
        assert degrees == [1, 2, 3, 4, 6, 7, 8, 9, 10]
        assert all(s.is_monomial() for s in dc.extended)

    @pytest.mark.parametrize("name", ["cubic", "vdp", "sir", "linear"])
    def test_reconstruction(self, name):
        cfg = default_config(name)
        model = cfg.model.normalized()
        stats = monomials_up_to(model.dim, cfg.degree)
        dc = build_decomposition(model, stats)
        cov = diffusion_covariance(model.diffusion, model.q_spec)
        hh = P.zero(model.dim)
        for h in model.obs:
            hh = hh + h * h
        for i, c in enumerate(stats):
            target = generator_apply(model.drift, cov, c) - 0.5 * hh * c
            diff = reconstruct(dc, i) - target
            assert all(abs(v) < 1e-9 for v in diff.terms.values()), (i, diff)
        half = P.constant(dc.b0, model.dim)
        for coeff, s in zip(dc.b_h, dc.extended):
            half = half + coeff * s
        assert all(abs(v) < 1e-9 for v in (half - 0.5 * hh).terms.values())
        for k, h in enumerate(model.obs):
            rec = P.constant(dc.lambda0[k], model.dim)
            for coeff, s in zip(dc.lam[:, k], stats):
                rec = rec + coeff * s
            assert all(abs(v) < 1e-12 for v in (rec - h).terms.values())
        assert len(set(dc.extended)) == len(dc.extended)

    def test_span_error_reports_monomial(self):
        model = ModelSpec([P.zero(1)], [[P.constant(1.0, 1)]], np.eye(1), [x(0, 1) ** 3])
        with pytest.raises(SpanError) as info:
            build_decomposition(model, monomials_up_to(1, 2))
        assert info.value.monomial == (3,)
