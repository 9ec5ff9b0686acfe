"""Exponential-family manifold evaluated through a bijected quadrature grid.

For a bijection ``phi`` from the grid's domain to state space, the log-partition
function is approximated by

    psi_N(theta) = log sum_i w_i exp(c(phi(x_i)) . theta) |det dphi/dx(x_i)| / omega(x_i)

and its first and second derivatives (taken by forward-mode AD) give the
moments and the Fisher metric.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from apfilter.autodiff import Jet2, lift
from apfilter.polyalg import PolynomialVector, SparsePolynomial, monomials_up_to
from apfilter.quadrature import Domain, QuadratureGrid

JITTER_LADDER = (0.0, 1e-12, 1e-10, 1e-8)


class QuadratureError(FloatingPointError):
    """The bijected quadrature sum is not a finite positive number."""


class FisherError(np.linalg.LinAlgError):
    """The Fisher metric is not positive definite even after jitter."""


@dataclass(frozen=True)
class ExpFamily:
    """Natural statistics ``c`` and extended statistics ``c_ext = [c; c_h]``."""

    stats: tuple[SparsePolynomial, ...]
    extended: tuple[SparsePolynomial, ...] = ()
    _vec: PolynomialVector = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        stats = tuple(self.stats)
        extended = tuple(self.extended) or stats
        if not stats:
            raise ValueError("an exponential family needs at least one statistic")
        if extended[: len(stats)] != stats:
            raise ValueError("extended statistics must start with the natural statistics")
        if len(set(extended)) != len(extended):
            raise ValueError("statistics must be pairwise distinct")
        if any(s.dim != stats[0].dim for s in extended):
            raise ValueError("statistics must share a dimension")
        object.__setattr__(self, "stats", stats)
        object.__setattr__(self, "extended", extended)
        object.__setattr__(self, "_vec", PolynomialVector(extended))

    @classmethod
    def polynomial(cls, dim: int, degree: int) -> "ExpFamily":
        """All monomials of total degree 1..degree."""
        return cls(tuple(monomials_up_to(dim, degree)))

    @classmethod
    def gaussian(cls, dim: int) -> "ExpFamily":
        return cls.polynomial(dim, 2)

    def with_extension(self, extended: Sequence[SparsePolynomial]) -> "ExpFamily":
        return ExpFamily(self.stats, tuple(extended))

    @property
    def dim(self) -> int:
        return self.stats[0].dim

    @property
    def m(self) -> int:
        return len(self.stats)

    @property
    def m_h(self) -> int:
        return len(self.extended) - len(self.stats)

    def evaluate(self, points, extended: bool = True) -> np.ndarray:
        """Statistic values at ``points`` (``(N, d)``), shape ``(N, m)`` or ``(N, m + m_h)``."""
        vals = self._vec(points)
        return vals if extended else vals[:, : self.m]

    def index_of(self, index: Sequence[int]) -> int:
        """Position of the monomial ``x**index`` in the extended statistics."""
        target = SparsePolynomial.monomial(index)
        try:
            return self.extended.index(target)
        except ValueError:
            raise KeyError(f"monomial {tuple(index)} is not an extended statistic") from None


@dataclass(frozen=True)
class CgfResult:
    psi: float
    eta: np.ndarray
    fisher: np.ndarray
    eta_ext: np.ndarray | None = None


@dataclass(frozen=True)
class NodeData:
    """Per-node quantities of a family on a bijected grid."""

    points: np.ndarray
    stats: np.ndarray
    log_factor: np.ndarray
    weights: np.ndarray


def check_compatible(bij, grid: QuadratureGrid) -> None:
    if bij.domain is not grid.domain:
        raise ValueError(f"{type(bij).__name__} maps from {bij.domain.value} but grid lives on {grid.domain.value}")
    if bij.dim != grid.dim:
        raise ValueError(f"bijection dimension {bij.dim} does not match grid dimension {grid.dim}")


def node_data(family: ExpFamily, bij, grid: QuadratureGrid) -> NodeData:
    """Bijected nodes, extended statistic values and ``log|det| - log omega`` per node."""
    if len(grid) == 0:
        raise QuadratureError("empty quadrature grid")
    check_compatible(bij, grid)
    x, logdet = bij.forward(grid.nodes)
    lf = logdet + grid.log_inv_omega()
    stats = family.evaluate(x)
    if not (np.all(np.isfinite(stats)) and np.all(np.isfinite(lf))):
        raise QuadratureError("bijected nodes produce non-finite statistics")
    return NodeData(x, stats, lf, grid.weights)


def _signed_logsumexp(a: np.ndarray, w: np.ndarray) -> float:
    if not np.all(np.isfinite(a)):
        raise QuadratureError("non-finite integrand at a quadrature node")
    shift = a.max()
    s = float(np.dot(w, np.exp(a - shift)))
    if not s > 0 or not np.isfinite(s):
        raise QuadratureError("quadrature sum is not positive; theta outside the usable region")
    return shift + np.log(s)


def _log_partition_nodes(theta: np.ndarray, nd: NodeData, k: int) -> float:
    return _signed_logsumexp(nd.stats[:, :k] @ theta + nd.log_factor, nd.weights)


def log_partition(theta, bij, grid: QuadratureGrid, family: ExpFamily) -> float:
    """``psi_N(theta)`` via an overflow-safe signed log-sum-exp."""
    theta = np.asarray(theta, dtype=float)
    return _log_partition_nodes(theta, node_data(family, bij, grid), family.m)


def probabilities(theta, nd: NodeData, k: int) -> tuple[np.ndarray, float]:
    """Self-normalized node masses ``w_i exp(a_i - psi_N)`` and ``psi_N``."""
    a = nd.stats[:, :k] @ theta + nd.log_factor
    psi = _signed_logsumexp(a, nd.weights)
    return nd.weights * np.exp(a - psi), psi


def cgf_jet(theta, nd: NodeData) -> Jet2:
    """Second-order jet of ``psi_N`` at ``theta`` over the first ``len(theta)`` statistics.

    Statistics are centred at their quadrature mean before differentiation so
    the Hessian is accumulated as a covariance instead of as a difference of
    raw moments; ``psi`` picks up the matching linear term.
    """
    theta = np.asarray(theta, dtype=float)
    k = theta.shape[0]
    cmat = nd.stats[:, :k]
    p, _ = probabilities(theta, nd, k)
    center = p @ cmat
    th = lift(theta)
    y = (cmat - center) @ th + nd.log_factor
    shift = float(y.value.max())
    total = (y - shift).exp().sum(nd.weights)
    if not total.value > 0:
        raise QuadratureError("quadrature sum is not positive; theta outside the usable region")
    return (total.log() + shift + center @ th).symmetrized()


@dataclass(frozen=True)
class FisherFactor:
    """Cholesky factor of the Jacobi-equilibrated metric ``D^-1 g D^-1``, ``D = sqrt(diag g)``."""

    factor: tuple
    scale: np.ndarray
    jitter: float

    def solve(self, rhs) -> np.ndarray:
        rhs = np.asarray(rhs, dtype=float)
        s = self.scale if rhs.ndim == 1 else self.scale[:, None]
        return cho_solve(self.factor, rhs / s) / s

    def condition(self) -> float:
        """2-norm condition number of the equilibrated metric."""
        lower = np.tril(self.factor[0])
        sv = np.linalg.svd(lower, compute_uv=False)
        return float((sv[0] / sv[-1]) ** 2)


def cholesky_with_jitter(g: np.ndarray) -> FisherFactor:
    """Factor ``g`` after Jacobi equilibration, walking the bounded jitter ladder.

    The jitter is ``eps * trace / m`` of the equilibrated matrix (whose
    diagonal is one), so it acts relative to every statistic's own scale.
    """
    g = 0.5 * (g + g.T)
    if not np.all(np.isfinite(g)):
        raise FisherError("Fisher metric has non-finite entries")
    diag = np.diag(g)
    if not np.all(diag > 0):
        raise FisherError("Fisher metric has a non-positive diagonal entry")
    scale = np.sqrt(diag)
    ge = g / np.outer(scale, scale)
    m = g.shape[0]
    for eps in JITTER_LADDER:
        try:
            jitter = eps * np.trace(ge) / m
            return FisherFactor(cho_factor(ge + jitter * np.eye(m), lower=True), scale, jitter)
        except np.linalg.LinAlgError:
            continue
    raise FisherError("Fisher metric is not positive definite after maximal jitter")


def fisher_solve(g: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    return cholesky_with_jitter(g).solve(rhs)


def moments_and_fisher(theta, bij, grid: QuadratureGrid, family: ExpFamily) -> CgfResult:
    """``psi_N``, ``eta = grad psi_N`` and ``g = hess psi_N`` by automatic differentiation."""
    nd = node_data(family, bij, grid)
    jet = cgf_jet(np.asarray(theta, dtype=float)[: family.m], nd)
    cholesky_with_jitter(jet.hess)
    return CgfResult(float(jet.value), jet.grad.copy(), jet.hess.copy())


def extended_expectations(theta, family: ExpFamily, bij, grid: QuadratureGrid) -> np.ndarray:
    """Expectations of all extended statistics as the gradient of the augmented log-partition at ``(theta, 0)``."""
    return full_cgf(theta, family, bij, grid).eta_ext


def full_cgf(theta, family: ExpFamily, bij, grid: QuadratureGrid, nd: NodeData | None = None) -> CgfResult:
    """One AD pass over the augmented parameter giving ``psi_N``, ``eta``, ``g`` and ``eta_ext``.

    At zero augmentation the leading ``m x m`` Hessian block is the Fisher
    metric of the family itself.
    """
    nd = nd if nd is not None else node_data(family, bij, grid)
    theta = np.asarray(theta, dtype=float)
    aug = np.concatenate([theta, np.zeros(family.m_h)])
    jet = cgf_jet(aug, nd)
    m = family.m
    return CgfResult(float(jet.value), jet.grad[:m].copy(), jet.hess[:m, :m].copy(), jet.grad.copy())


def expectation_ratio(f: SparsePolynomial, theta, bij, grid: QuadratureGrid, family: ExpFamily) -> float:
    """Self-normalized quadrature expectation ``E_N[f] / E_N[1]``."""
    nd = node_data(family, bij, grid)
    p, _ = probabilities(np.asarray(theta, dtype=float), nd, family.m)
    return float(p @ f(nd.points))


def ratio_moments(theta, bij, grid: QuadratureGrid, family: ExpFamily) -> tuple[np.ndarray, np.ndarray]:
    """Direct quadrature-ratio mean and covariance of the natural statistics."""
    nd = node_data(family, bij, grid)
    p, _ = probabilities(np.asarray(theta, dtype=float), nd, family.m)
    c = nd.stats[:, : family.m]
    eta = p @ c
    second = (c * p[:, None]).T @ c
    return eta, second - np.outer(eta, eta)


def normalization_defect(theta, bij, grid: QuadratureGrid, family: ExpFamily, psi_ref: float) -> float:
    """``E_N[1] = 1 - exp(psi_N - psi_ref)`` for a reference log-partition ``psi_ref``."""
    return float(-np.expm1(log_partition(theta, bij, grid, family) - psi_ref))


def defect_gradient(theta, bij, grid: QuadratureGrid, family: ExpFamily, psi_ref: float) -> np.ndarray:
    """Gradient of ``E_N[1]**2`` with respect to ``(mu, sigma**2)`` of a 1-D Gaussian bijection.

    Uses ``d E_N^2 / d xi = -2 E_N[1] E_{theta,N}[(1/u) du/dxi]`` where, with
    ``z = (x - mu) / sigma``, ``(1/u) du/dmu = c'(x) . theta`` and
    ``(1/u) du/dsigma2 = c'(x) . theta * z / (2 sigma) + 1 / (2 sigma**2)``.
    """
    if family.dim != 1:
        raise ValueError("defect_gradient is implemented for one-dimensional families")
    theta = np.asarray(theta, dtype=float)
    nd = node_data(family, bij, grid)
    a = nd.stats[:, : family.m] @ theta + nd.log_factor - psi_ref
    mass = nd.weights * np.exp(a)
    defect = 1.0 - mass.sum()
    x = nd.points[:, 0]
    slope = sum(t * s.diff(0)(x) for t, s in zip(theta, family.stats))
    sigma = float(np.sqrt(bij.sigma[0, 0]))
    z = (x - bij.mu[0]) / sigma
    dmu = slope
    dvar = slope * z / (2 * sigma) + 1.0 / (2 * sigma**2)
    return -2.0 * defect * np.array([mass @ dmu, mass @ dvar])


def density_values(theta, family: ExpFamily, psi: float, points) -> np.ndarray:
    """``exp(c(x) . theta - psi)`` at ``points``."""
    theta = np.asarray(theta, dtype=float)
    with np.errstate(over="raise"):
        try:
            return np.exp(family.evaluate(points, extended=False) @ theta - psi)
        except FloatingPointError as exc:
            raise OverflowError("density overflows on the requested points") from exc
