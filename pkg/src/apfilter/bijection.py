"""Bijections from the quadrature domain to state space.

* :class:`StaticBijection` -- ``x = atanh(x~)`` on the hypercube.
* :class:`GaussianBijection` with ``variant=ERF_HYPERCUBE`` --
  ``x = mu + sqrt(2) T^-1 Lambda^(1/2) erfinv(x~)`` on the hypercube, the
  inverse of the Gaussian "CDF" map ``zeta``; here ``|det dphi/dx~| = 1 / (2^d q(x))``.
* :class:`GaussianBijection` with ``variant=HERMITE_AFFINE`` --
  ``x = mu + sqrt(2) T^-1 Lambda^(1/2) x~`` on the real space for
  Gauss-Hermite grids.

The Gaussian parameters follow the covariance ``Sigma = T^T diag(Lambda) T``
with ``T`` orthogonal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy import special

from apfilter import expfam
from apfilter.quadrature import Domain, QuadratureGrid

EIG_FLOOR = 1e-12
_SQRT_PI_2 = np.sqrt(np.pi) / 2.0


class BijectionCollapse(ArithmeticError):
    """The Gaussian bijection covariance degenerated."""


def erf(x):
    return special.erf(x)


def erf_inv(y):
    """Inverse error function on (-1, 1) with one Newton correction."""
    y = np.asarray(y, dtype=float)
    if np.any(np.abs(y) >= 1):
        raise ValueError("erf_inv is only finite on the open interval (-1, 1)")
    x = special.erfinv(y)
    # Newton on erf(x) - y; derivative 2/sqrt(pi) exp(-x^2)
    x = x - (special.erf(x) - y) * _SQRT_PI_2 * np.exp(x * x)
    return x if x.ndim else float(x)


def sym_eigen(sigma) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition ``sigma = T^T diag(lam) T`` with orthogonal ``T``.

    Eigenvalues are ascending; each eigenvector (row of ``T``) is signed so
    that its largest-magnitude entry is positive.
    """
    sigma = np.asarray(sigma, dtype=float)
    sym = 0.5 * (sigma + sigma.T)
    lam, vecs = np.linalg.eigh(sym)
    t_rot = vecs.T.copy()
    for row in t_rot:
        k = np.argmax(np.abs(row))
        if row[k] < 0:
            row *= -1
    return t_rot, lam


class StaticBijection:
    """Fixed ``atanh`` map from the hypercube."""

    domain = Domain.HYPERCUBE

    def __init__(self, dim: int = 1):
        self.dim = dim

    def forward(self, x_tilde) -> tuple[np.ndarray, np.ndarray]:
        """Map nodes (``(N, d)``) and return ``(x, log|det dphi/dx~|)``."""
        xt = np.atleast_2d(np.asarray(x_tilde, dtype=float))
        if np.any(np.abs(xt) >= 1):
            raise ValueError("static bijection is defined on the open hypercube only")
        return np.arctanh(xt), -np.log1p(-xt * xt).sum(axis=1)

    def __repr__(self):
        return f"StaticBijection(dim={self.dim})"


class Variant(str, enum.Enum):
    ERF_HYPERCUBE = "erf_hypercube"
    HERMITE_AFFINE = "hermite_affine"


@dataclass(frozen=True)
class GaussianBijection:
    mu: np.ndarray
    sigma: np.ndarray
    t_rot: np.ndarray
    lambda_diag: np.ndarray
    variant: Variant = Variant.ERF_HYPERCUBE

    @classmethod
    def from_moments(cls, mu, sigma, variant: Variant | str = Variant.ERF_HYPERCUBE) -> "GaussianBijection":
        """Build from a mean and covariance, flooring eigenvalues at ``1e-12 * max``."""
        mu = np.atleast_1d(np.asarray(mu, dtype=float)).copy()
        sigma = np.atleast_2d(np.asarray(sigma, dtype=float))
        if sigma.shape != (mu.shape[0], mu.shape[0]):
            raise ValueError("covariance shape does not match the mean")
        if not (np.all(np.isfinite(mu)) and np.all(np.isfinite(sigma))):
            raise BijectionCollapse("non-finite bijection parameters")
        t_rot, lam = sym_eigen(sigma)
        top = lam.max()
        if not top > 0:
            raise BijectionCollapse("covariance has no positive eigenvalue")
        lam = np.maximum(lam, EIG_FLOOR * top)
        sigma = t_rot.T @ np.diag(lam) @ t_rot
        return cls(mu, 0.5 * (sigma + sigma.T), t_rot, lam, Variant(variant))

    @classmethod
    def standard(cls, dim: int, variant: Variant | str = Variant.ERF_HYPERCUBE) -> "GaussianBijection":
        return cls.from_moments(np.zeros(dim), np.eye(dim), variant)

    @property
    def dim(self) -> int:
        return self.mu.shape[0]

    @property
    def domain(self) -> Domain:
        return Domain.HYPERCUBE if self.variant is Variant.ERF_HYPERCUBE else Domain.REAL_SPACE

    def _scale(self) -> np.ndarray:
        # columns of T^-1 Lambda^(1/2) sqrt(2)
        return self.t_rot.T * np.sqrt(2.0 * self.lambda_diag)

    def forward(self, x_tilde) -> tuple[np.ndarray, np.ndarray]:
        """Map nodes (``(N, d)``) and return ``(x, log|det dphi/dx~|)``."""
        xt = np.atleast_2d(np.asarray(x_tilde, dtype=float))
        half_logdet = 0.5 * np.sum(np.log(2.0 * self.lambda_diag))
        if self.variant is Variant.HERMITE_AFFINE:
            x = self.mu + xt @ self._scale().T
            return x, np.full(xt.shape[0], half_logdet)
        if np.any(np.abs(xt) >= 1):
            raise ValueError("erf bijection is defined on the open hypercube only")
        e = erf_inv(xt)
        x = self.mu + e @ self._scale().T
        logdet = half_logdet + self.dim * np.log(_SQRT_PI_2) + (e * e).sum(axis=1)
        return x, logdet

    def inverse(self, x) -> np.ndarray:
        """``zeta(x)``: back to the hypercube (or to R^d for the affine variant)."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        z = (x - self.mu) @ self.t_rot.T / np.sqrt(2.0 * self.lambda_diag)
        return z if self.variant is Variant.HERMITE_AFFINE else erf(z)

    def density(self, x) -> np.ndarray:
        """Gaussian density ``q(x)`` of the bijection."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        z = (x - self.mu) @ self.t_rot.T / np.sqrt(self.lambda_diag)
        logq = -0.5 * (z * z).sum(axis=1) - 0.5 * np.sum(np.log(2 * np.pi * self.lambda_diag))
        return np.exp(logq)

    def with_variant(self, variant: Variant | str) -> "GaussianBijection":
        return GaussianBijection(self.mu, self.sigma, self.t_rot, self.lambda_diag, Variant(variant))


def moment_match_from_family(eta_ext, family: "expfam.ExpFamily") -> tuple[np.ndarray, np.ndarray]:
    """Gaussian ``(mu, Sigma)`` read off the expectations of ``x_i`` and ``x_i x_j``."""
    eta_ext = np.asarray(eta_ext, dtype=float)
    d = family.dim
    mu = np.empty(d)
    second = np.empty((d, d))
    for i in range(d):
        e = [0] * d
        e[i] = 1
        mu[i] = eta_ext[family.index_of(e)]
        for j in range(i, d):
            e2 = [0] * d
            e2[i] += 1
            e2[j] += 1
            second[i, j] = second[j, i] = eta_ext[family.index_of(e2)]
    sigma = second - np.outer(mu, mu)
    return mu, 0.5 * (sigma + sigma.T)


def matched_bijection(eta_ext, family, variant: Variant | str) -> GaussianBijection:
    mu, sigma = moment_match_from_family(eta_ext, family)
    return GaussianBijection.from_moments(mu, sigma, variant)


def picard_residual(old: GaussianBijection, new: GaussianBijection) -> float:
    dmu = np.max(np.abs(new.mu - old.mu))
    dsig = np.max(np.abs(new.sigma - old.sigma)) / np.trace(new.sigma)
    return float(max(dmu, dsig))


def picard_update(theta, family, bij_in: GaussianBijection, grid: QuadratureGrid) -> tuple[GaussianBijection, float]:
    """One approximated moment-matching step; returns the new bijection and the residual."""
    eta_ext = expfam.extended_expectations(theta, family, bij_in, grid)
    bij_out = matched_bijection(eta_ext, family, bij_in.variant)
    return bij_out, picard_residual(bij_in, bij_out)


def picard_iterate(
    theta, family, bij0: GaussianBijection, grid: QuadratureGrid, tol: float = 1e-8, max_iter: int = 100
) -> tuple[GaussianBijection, list[float]]:
    """Iterate :func:`picard_update` until the residual drops below ``tol``."""
    bij = bij0
    history = []
    for _ in range(max_iter):
        bij, res = picard_update(theta, family, bij, grid)
        history.append(res)
        if res < tol:
            break
    return bij, history
