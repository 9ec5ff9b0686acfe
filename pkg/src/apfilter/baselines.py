"""Reference solutions: SDE simulation, a 1-D Kushner-Stratonovich finite-difference
solver, a bootstrap particle filter and the Kalman-Bucy filter.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from apfilter.polyalg import PolynomialVector, SparsePolynomial

BOUNDARY_TOL = 1e-12
NEGATIVE_TOL = -1e-10
COVERAGE = 0.999


class BoundaryError(RuntimeError):
    """Density mass reached the edge of the finite-difference domain."""


class DegeneracyError(RuntimeError):
    """All particle weights vanished."""


class ModelFunctions:
    """Vectorized evaluation of ``f``, ``rho`` and ``h`` of a model at ``(N, d)`` points."""

    def __init__(self, model):
        self.model = model
        self._f = PolynomialVector(model.drift)
        self._rho = PolynomialVector([p for row in model.diffusion for p in row])
        self._h = PolynomialVector(model.obs)
        self._q_half = np.linalg.cholesky(model.q_spec)
        self._r_half = np.linalg.cholesky(model.obs_noise)

    def drift(self, x: np.ndarray) -> np.ndarray:
        return self._f(x)

    def diffusion(self, x: np.ndarray) -> np.ndarray:
        n = x.shape[0]
        return self._rho(x).reshape(n, self.model.dim, self.model.dim_noise)

    def obs(self, x: np.ndarray) -> np.ndarray:
        return self._h(x)

    def noise_step(self, x: np.ndarray, dt: float, normals: np.ndarray) -> np.ndarray:
        """``rho(x) Q^1/2 sqrt(dt) eps`` for ``normals`` of shape ``(N, d_w)``."""
        dw = normals @ self._q_half.T * np.sqrt(dt)
        return np.einsum("nij,nj->ni", self.diffusion(x), dw)

    def em_step(self, x: np.ndarray, dt: float, normals: np.ndarray) -> np.ndarray:
        return x + self.drift(x) * dt + self.noise_step(x, dt, normals)

    def log_likelihood(self, x: np.ndarray, dy: np.ndarray, dt: float) -> np.ndarray:
        """``h^T R^-1 dy - 1/2 h^T R^-1 h dt`` per point."""
        h = self.obs(x)
        rinv = np.linalg.inv(self.model.obs_noise)
        hr = h @ rinv
        return hr @ dy - 0.5 * np.einsum("ni,ni->n", hr, h) * dt


# ---------------------------------------------------------------------------
# simulation


@dataclass(frozen=True)
class SimulationOutput:
    """``states[k]`` is the state at ``times[k]``; ``dy[k]`` is the increment over ``[times[k], times[k+1]]``."""

    times: np.ndarray
    states: np.ndarray
    dy: np.ndarray
    seed: int | np.random.SeedSequence


def substreams(seed: int | np.random.SeedSequence, n: int) -> list[np.random.Generator]:
    """Independent generators spawned from one seed."""
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    return [np.random.default_rng(s) for s in ss.spawn(n)]


def simulate(model, x0, dt: float, steps: int, seed: int | np.random.SeedSequence) -> SimulationOutput:
    """Euler-Maruyama path and measurement increments ``dy = h(x) dt + R^1/2 dV``."""
    if not dt > 0:
        raise ValueError("dt must be positive")
    fn = ModelFunctions(model)
    rng_w, rng_v = substreams(seed, 2)
    x = np.atleast_1d(np.asarray(x0, dtype=float))[None, :].copy()
    states = np.empty((steps + 1, model.dim))
    dys = np.empty((steps, model.dim_obs))
    states[0] = x[0]
    r_half = np.linalg.cholesky(model.obs_noise)
    for k in range(steps):
        dv = rng_v.standard_normal(model.dim_obs) * np.sqrt(dt)
        dys[k] = fn.obs(x)[0] * dt + r_half @ dv
        x = fn.em_step(x, dt, rng_w.standard_normal((1, model.dim_noise)))
        states[k + 1] = x[0]
    return SimulationOutput(np.arange(steps + 1) * dt, states, dys, seed)


# ---------------------------------------------------------------------------
# grid densities


@dataclass(frozen=True)
class GridDensity:
    """Values at the cell centres of a regular grid; ``axes`` holds ``(min, max, count)`` per axis."""

    axes: tuple[tuple[float, float, int], ...]
    values: np.ndarray

    def __post_init__(self):
        axes = tuple((float(lo), float(hi), int(n)) for lo, hi, n in self.axes)
        values = np.asarray(self.values, dtype=float)
        if values.shape != tuple(n for _, _, n in axes):
            raise ValueError("values do not match the axis counts")
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "values", values)

    @property
    def dim(self) -> int:
        return len(self.axes)

    @property
    def spacing(self) -> np.ndarray:
        return np.array([(hi - lo) / n for lo, hi, n in self.axes])

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def centres(self) -> list[np.ndarray]:
        return axis_centres(self.axes)

    def points(self) -> np.ndarray:
        return grid_points(self.axes)

    def integral(self) -> float:
        return float(self.values.sum() * self.cell_volume)

    def normalized(self) -> "GridDensity":
        total = self.integral()
        if not total > 0:
            raise ValueError("cannot normalize a density with no mass")
        return GridDensity(self.axes, self.values / total)

    def moments(self) -> tuple[np.ndarray, np.ndarray]:
        """Mean and covariance of the (normalized) grid density."""
        x = self.points()
        p = self.values.ravel() / self.values.sum()
        mean = p @ x
        xc = x - mean
        return mean, (xc * p[:, None]).T @ xc

    def to_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("# axis,min,max,count\n")
            for i, (lo, hi, n) in enumerate(self.axes):
                fh.write(f"# {i + 1},{lo!r},{hi!r},{n}\n")
            fh.write("value\n")
            for v in self.values.ravel():
                fh.write(f"{float(v)!r}\n")

    @classmethod
    def from_csv(cls, path) -> "GridDensity":
        axes = []
        with open(path) as fh:
            fh.readline()
            line = fh.readline()
            while line.startswith("#"):
                _, lo, hi, n = line[1:].strip().split(",")
                axes.append((float(lo), float(hi), int(n)))
                line = fh.readline()
            values = np.array([float(v) for v in fh.read().split()])
        return cls(tuple(axes), values.reshape([n for _, _, n in axes]))


def axis_centres(axes) -> list[np.ndarray]:
    return [lo + (np.arange(n) + 0.5) * (hi - lo) / n for lo, hi, n in axes]


def grid_points(axes) -> np.ndarray:
    """Cell centres as ``(N, d)``, row-major over the axes."""
    mesh = np.meshgrid(*axis_centres(axes), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


def empirical_density(particles, axes, weights=None) -> GridDensity:
    """Weighted histogram normalized by total weight and cell volume."""
    particles = np.atleast_2d(np.asarray(particles, dtype=float))
    if particles.shape[0] == 0:
        raise ValueError("empty particle set")
    if particles.shape[1] != len(axes):
        particles = particles.reshape(-1, len(axes))
    w = np.full(particles.shape[0], 1.0) if weights is None else np.asarray(weights, dtype=float)
    w = w / w.sum()
    edges = [np.linspace(lo, hi, n + 1) for lo, hi, n in axes]
    hist, _ = np.histogramdd(particles, bins=edges, weights=w)
    covered = hist.sum()
    if covered < COVERAGE:
        warnings.warn(f"grid covers only {covered:.4f} of the particle mass", RuntimeWarning, stacklevel=2)
    vol = float(np.prod([(hi - lo) / n for lo, hi, n in axes]))
    return GridDensity(tuple(axes), hist / vol)


# ---------------------------------------------------------------------------
# finite-difference Kushner-Stratonovich solver


def fokker_planck_rhs(p: np.ndarray, f: np.ndarray, a: np.ndarray, dx: float) -> np.ndarray:
    """``-(f p)' + 1/2 (a p)''`` by central differences with zero density outside the grid."""
    fp = np.pad(f * p, 1)
    ap = np.pad(a * p, 1)
    return -(fp[2:] - fp[:-2]) / (2 * dx) + 0.5 * (ap[2:] - 2 * ap[1:-1] + ap[:-2]) / dx**2


def fd_ks_solver_1d(
    model,
    axis: tuple[float, float, int],
    p0: GridDensity | Callable[[np.ndarray], np.ndarray],
    dt: float,
    dys: Iterable,
    keep: Iterable[int] | None = None,
) -> list[GridDensity]:
    """Explicit finite-difference solution of the Kushner-Stratonovich equation in one dimension.

    Each step applies a Fokker-Planck Euler step and then the multiplicative
    likelihood factor ``exp(h dy - 1/2 h^2 dt)`` followed by renormalization.
    The returned list holds the initial density and the densities after the
    steps listed in ``keep`` (every step when ``None``).
    """
    if model.dim != 1:
        raise ValueError("the finite-difference solver is one-dimensional")
    fn = ModelFunctions(model)
    axes = (tuple(axis),)
    x = grid_points(axes)
    dx = (axis[1] - axis[0]) / axis[2]
    f = fn.drift(x)[:, 0]
    rho = fn.diffusion(x)[:, 0, :]
    a = np.einsum("ni,ij,nj->n", rho, model.q_spec, rho)
    if dt * a.max() > dx**2:
        raise ValueError(f"explicit step unstable: dt={dt} exceeds dx^2/max(a)={dx**2 / a.max():.3g}")
    if callable(p0):
        p = np.asarray(p0(x[:, 0]), dtype=float)
    else:
        if p0.axes != axes:
            raise ValueError("initial density lives on a different grid")
        p = p0.values.copy()
    p = p / (p.sum() * dx)
    h = fn.obs(x)
    rinv = np.linalg.inv(model.obs_noise)
    hh = np.einsum("ni,ij,nj->n", h, rinv, h)
    hr = h @ rinv

    keep = None if keep is None else set(keep)
    out = [GridDensity(axes, p.copy())]
    for k, dy in enumerate(dys, start=1):
        p = p + dt * fokker_planck_rhs(p, f, a, dx)
        if p.min() < NEGATIVE_TOL * p.max():
            raise FloatingPointError(f"step {k}: negative density {p.min():.3g}")
        p = np.maximum(p, 0.0)
        loglik = hr @ np.atleast_1d(dy) - 0.5 * hh * dt
        p = p * np.exp(loglik - loglik.max())
        p = p / (p.sum() * dx)
        edge = max(p[0], p[-1])
        if edge > BOUNDARY_TOL:
            raise BoundaryError(f"step {k}: boundary density {edge:.3g} exceeds {BOUNDARY_TOL}")
        if keep is None or k in keep:
            out.append(GridDensity(axes, p.copy()))
    return out


# ---------------------------------------------------------------------------
# particle filter


@dataclass(frozen=True)
class ParticleSet:
    t: float
    particles: np.ndarray
    weights: np.ndarray
    resampled: bool = False

    def mean(self) -> np.ndarray:
        return self.weights @ self.particles

    def density(self, axes) -> GridDensity:
        return empirical_density(self.particles, axes, self.weights)


def systematic_resample(weights, u: float) -> np.ndarray:
    """Indices drawn with one uniform ``u`` in ``[0, 1)`` and stratified positions ``(u + i) / n``."""
    w = np.asarray(weights, dtype=float)
    n = w.shape[0]
    cdf = np.cumsum(w / w.sum())
    cdf[-1] = 1.0
    positions = (u + np.arange(n)) / n
    return np.searchsorted(cdf, positions, side="right")


def effective_sample_size(weights) -> float:
    w = np.asarray(weights, dtype=float)
    return float(w.sum() ** 2 / (w @ w))


def bootstrap_pf(
    model,
    n_particles: int,
    x0_sampler: Callable[[np.random.Generator, int], np.ndarray],
    dt: float,
    dys: Iterable,
    seed: int,
    keep: Iterable[int] | None = None,
    threshold: float = 0.5,
) -> list[ParticleSet]:
    """Bootstrap particle filter with systematic resampling.

    Per step: reweight with the likelihood increment of the current positions,
    resample when the effective sample size falls below ``threshold * n`` and
    propagate by Euler-Maruyama.  Returns the initial cloud and the clouds
    after the steps in ``keep`` (every step when ``None``).
    """
    if n_particles < 2:
        raise ValueError("need at least two particles")
    fn = ModelFunctions(model)
    rng_init, rng_prop, rng_res = substreams(seed, 3)
    x = np.asarray(x0_sampler(rng_init, n_particles), dtype=float).reshape(n_particles, model.dim)
    logw = np.zeros(n_particles)
    keep = None if keep is None else set(keep)
    out = [ParticleSet(0.0, x.copy(), np.full(n_particles, 1.0 / n_particles))]
    for k, dy in enumerate(dys, start=1):
        logw = logw + fn.log_likelihood(x, np.atleast_1d(dy), dt)
        top = logw.max()
        if not np.isfinite(top):
            raise DegeneracyError(f"step {k}: all particle weights vanished")
        w = np.exp(logw - top)
        w /= w.sum()
        resampled = effective_sample_size(w) < threshold * n_particles
        if resampled:
            x = x[systematic_resample(w, rng_res.uniform())]
            logw = np.zeros(n_particles)
            w = np.full(n_particles, 1.0 / n_particles)
        else:
            logw = logw - top
        x = fn.em_step(x, dt, rng_prop.standard_normal((n_particles, model.dim_noise)))
        if keep is None or k in keep:
            out.append(ParticleSet(k * dt, x.copy(), w.copy(), resampled))
    return out


# ---------------------------------------------------------------------------
# Kalman-Bucy


def linear_coefficients(polys: Sequence[SparsePolynomial]) -> tuple[np.ndarray, np.ndarray]:
    """``(M, b)`` with ``p_i(x) = M[i] . x + b[i]``; raises on nonlinear entries."""
    d = polys[0].dim
    mat = np.zeros((len(polys), d))
    off = np.zeros(len(polys))
    for i, p in enumerate(polys):
        if p.degree() > 1:
            raise ValueError(f"polynomial {p} is not affine")
        off[i] = p.coefficient((0,) * d)
        for j in range(d):
            e = [0] * d
            e[j] = 1
            mat[i, j] = p.coefficient(e)
    return mat, off


def kalman_bucy(model, m0, p0, dt: float, dys: Iterable) -> tuple[np.ndarray, np.ndarray]:
    """Euler integration of the Kalman-Bucy filter; returns means ``(steps+1, d)`` and covariances."""
    a_mat, a_off = linear_coefficients(model.drift)
    h_mat, h_off = linear_coefficients(model.obs)
    if any(p.degree() > 0 for row in model.diffusion for p in row):
        raise ValueError("Kalman-Bucy needs a constant diffusion")
    rho = np.array([[p.coefficient((0,) * model.dim) for p in row] for row in model.diffusion])
    qq = rho @ model.q_spec @ rho.T
    rinv = np.linalg.inv(model.obs_noise)
    m = np.atleast_1d(np.asarray(m0, dtype=float)).copy()
    p = np.atleast_2d(np.asarray(p0, dtype=float)).copy()
    means, covs = [m.copy()], [p.copy()]
    for dy in dys:
        gain = p @ h_mat.T @ rinv
        innov = np.atleast_1d(dy) - (h_mat @ m + h_off) * dt
        m = m + (a_mat @ m + a_off) * dt + gain @ innov
        p = p + (a_mat @ p + p @ a_mat.T + qq - gain @ h_mat @ p) * dt
        p = 0.5 * (p + p.T)
        means.append(m.copy())
        covs.append(p.copy())
    return np.array(means), np.array(covs)
