"""Projection filter on an exponential family with a bijected quadrature.

The natural parameter follows

    d theta = g^-1 [a0 + b0 eta + (A0 + eta b_h^T) eta_ext] dt + lambda dy,

integrated by explicit Euler.  After every parameter update the Gaussian
bijection is moved by one approximated moment-matching step computed from the
expectations of the pre-update parameter.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from apfilter import expfam
from apfilter.bijection import BijectionCollapse, GaussianBijection, StaticBijection, matched_bijection, picard_iterate
from apfilter.expfam import CgfResult, ExpFamily, FisherError, QuadratureError
from apfilter.polyalg import CoefficientDecomposition, SparsePolynomial, build_decomposition
from apfilter.quadrature import QuadratureGrid

log = logging.getLogger(__name__)


class FilterDivergence(RuntimeError):
    """The filter could not take a step; ``step_index`` says where it stopped."""

    def __init__(self, message: str, step_index: int, last_state: "FilterState | None" = None):
        super().__init__(f"step {step_index}: {message}")
        self.step_index = step_index
        self.last_state = last_state
        self.trajectory: list = []


@dataclass(frozen=True)
class ModelSpec:
    """``dx = f dt + rho dW`` with ``E[dW dW^T] = Q dt`` and ``dy = h dt + dV`` with ``E[dV dV^T] = R dt``."""

    drift: tuple[SparsePolynomial, ...]
    diffusion: tuple[tuple[SparsePolynomial, ...], ...]
    q_spec: np.ndarray
    obs: tuple[SparsePolynomial, ...]
    obs_noise: np.ndarray | None = None

    def __post_init__(self):
        drift = tuple(self.drift)
        diffusion = tuple(tuple(row) for row in self.diffusion)
        obs = tuple(self.obs)
        d = len(drift)
        dims = {p.dim for p in drift} | {p.dim for row in diffusion for p in row} | {p.dim for p in obs}
        if dims != {d}:
            raise ValueError("all model polynomials must share the state dimension")
        if len(diffusion) != d:
            raise ValueError("diffusion needs one row per state component")
        dw = len(diffusion[0])
        if any(len(row) != dw for row in diffusion):
            raise ValueError("diffusion rows have unequal lengths")
        q = np.atleast_2d(np.asarray(self.q_spec, dtype=float))
        if q.shape != (dw, dw):
            raise ValueError("Q must be d_w x d_w")
        r = np.eye(len(obs)) if self.obs_noise is None else np.atleast_2d(np.asarray(self.obs_noise, dtype=float))
        if r.shape != (len(obs), len(obs)):
            raise ValueError("R must be d_y x d_y")
        object.__setattr__(self, "drift", drift)
        object.__setattr__(self, "diffusion", diffusion)
        object.__setattr__(self, "obs", obs)
        object.__setattr__(self, "q_spec", q)
        object.__setattr__(self, "obs_noise", r)

    @property
    def dim(self) -> int:
        return len(self.drift)

    @property
    def dim_obs(self) -> int:
        return len(self.obs)

    @property
    def dim_noise(self) -> int:
        return self.q_spec.shape[0]

    def whitening(self) -> np.ndarray:
        """``R^-1/2`` (inverse of the lower Cholesky factor)."""
        return np.linalg.inv(np.linalg.cholesky(self.obs_noise))

    def normalized(self) -> "ModelSpec":
        """Equivalent model with unit measurement noise; transform increments with :meth:`whiten`."""
        w = self.whitening()
        dim = self.dim
        obs = []
        for row in w:
            acc = SparsePolynomial.zero(dim)
            for coeff, h in zip(row, self.obs):
                if coeff:
                    acc = acc + coeff * h
            obs.append(acc)
        return replace(self, obs=tuple(obs), obs_noise=np.eye(self.dim_obs))

    def whiten(self, dy) -> np.ndarray:
        """Map measurement increments (``(steps, d_y)``) to the unit-noise model."""
        return np.atleast_2d(np.asarray(dy, dtype=float)) @ self.whitening().T


@dataclass(frozen=True)
class FilterState:
    theta: np.ndarray
    bij: GaussianBijection | StaticBijection
    t: float
    cache: CgfResult = field(repr=False)


@dataclass
class ProjectionFilter:
    """Bundles a unit-noise model with its family, grid and coefficient data."""

    model: ModelSpec
    family: ExpFamily
    grid: QuadratureGrid
    decomp: CoefficientDecomposition

    @classmethod
    def build(cls, model: ModelSpec, stats: Sequence[SparsePolynomial], grid: QuadratureGrid) -> "ProjectionFilter":
        if not np.allclose(model.obs_noise, np.eye(model.dim_obs)):
            raise ValueError("normalize the model to unit measurement noise first (ModelSpec.normalized)")
        decomp = build_decomposition(model, stats)
        return cls(model, ExpFamily(tuple(stats), decomp.extended), grid, decomp)

    def evaluate(self, theta, bij) -> CgfResult:
        return expfam.full_cgf(theta, self.family, bij, self.grid)

    def initial_state(self, theta0, bij0=None, t0: float = 0.0, tol: float = 1e-8) -> FilterState:
        """Start state; a Gaussian bijection is first moment-matched to ``theta0`` by Picard iteration."""
        theta0 = np.asarray(theta0, dtype=float).copy()
        if bij0 is None:
            bij0 = GaussianBijection.standard(self.family.dim)
        if isinstance(bij0, GaussianBijection):
            bij0, history = picard_iterate(theta0, self.family, bij0, self.grid, tol=tol)
            if history and history[-1] >= tol:
                log.warning("initial Picard iteration stopped at residual %.3g", history[-1])
        return FilterState(theta0, bij0, t0, self.evaluate(theta0, bij0))

    def drift_term(self, cache: CgfResult) -> np.ndarray:
        """``a0 + b0 eta + (A0 + eta b_h^T) eta_ext``."""
        dc = self.decomp
        eta_ext = cache.eta_ext
        return dc.a0 + dc.b0 * cache.eta + dc.A0 @ eta_ext + cache.eta * float(dc.b_h @ eta_ext)

    def increment(self, cache: CgfResult, dt: float, dy) -> tuple[np.ndarray, float]:
        """Euler increment of ``theta`` and the jitter used in the Fisher solve."""
        factor = expfam.cholesky_with_jitter(cache.fisher)
        dtheta = factor.solve(self.drift_term(cache)) * dt
        return dtheta + self.decomp.lam @ np.atleast_1d(np.asarray(dy, dtype=float)), factor.jitter

    def step(self, state: FilterState, dt: float, dy, index: int = 0) -> FilterState:
        if not dt > 0:
            raise ValueError("dt must be positive")
        try:
            dtheta, _ = self.increment(state.cache, dt, dy)
            if not np.all(np.isfinite(dtheta)):
                raise FilterDivergence("non-finite parameter increment", index, state)
            theta = state.theta + dtheta
            bij = state.bij
            if isinstance(bij, GaussianBijection):
                bij = matched_bijection(state.cache.eta_ext, self.family, bij.variant)
            cache = self.evaluate(theta, bij)
        except (FisherError, QuadratureError, BijectionCollapse, ValueError) as exc:
            raise FilterDivergence(str(exc), index, state) from exc
        return FilterState(theta, bij, state.t + dt, cache)

    def run(
        self,
        state: FilterState,
        dt: float,
        measurements: Iterable,
        log_path=None,
        thin: int = 1,
        keep: Iterable[int] | None = None,
    ) -> list[FilterState]:
        """Apply :meth:`step` over all increments.

        Returns the initial state followed by the states after the steps in
        ``keep`` (all steps when ``None``).  When ``log_path`` is given a CSV
        row is written for the initial state and every ``thin``-th step.
        On divergence the exception carries the last good state and the
        trajectory collected so far (``trajectory`` attribute).
        """
        keep = None if keep is None else set(keep)
        out = [state]
        writer, fh = None, None
        if log_path is not None:
            fh = open(log_path, "w", newline="")
            writer = csv.writer(fh)
            writer.writerow(log_header(self.family.m, self.family.dim))
            writer.writerow(log_row(state))
        try:
            for k, dy in enumerate(measurements, start=1):
                state = self.step(state, dt, dy, index=k)
                if keep is None or k in keep:
                    out.append(state)
                if writer is not None and k % thin == 0:
                    writer.writerow(log_row(state))
        except FilterDivergence as exc:
            exc.trajectory = out
            raise
        finally:
            if fh is not None:
                fh.close()
        return out


def log_header(m: int, d: int) -> list[str]:
    cols = ["t"] + [f"theta_{i + 1}" for i in range(m)] + [f"mu_{i + 1}" for i in range(d)]
    cols += [f"sigma_{i + 1}{j + 1}" for i in range(d) for j in range(d)]
    return cols + ["psi", "cond_g"]


def log_row(state: FilterState) -> list[str]:
    bij = state.bij
    d = bij.dim
    if isinstance(bij, GaussianBijection):
        mu, sigma = bij.mu, bij.sigma
    else:
        mu, sigma = np.full(d, np.nan), np.full((d, d), np.nan)
    vals = [state.t, *state.theta, *mu, *sigma.ravel(), state.cache.psi, condition_number(state.cache.fisher)]
    return [repr(float(v)) for v in vals]


def condition_number(g: np.ndarray) -> float:
    """Condition number of the Jacobi-equilibrated Fisher metric (``inf`` if it cannot be factored)."""
    try:
        return expfam.cholesky_with_jitter(g).condition()
    except expfam.FisherError:
        return float("inf")
