"""Experiment runners shared by the command line and the acceptance tests.

Every runner writes into an output directory:

* ``manifest.json`` -- config echo, seed, grid sizes, status and timings,
* ``<label>.csv`` -- the filter log of each projection variant,
* ``reference.csv`` -- moments of the reference solution,
* ``comparison.csv`` -- Hellinger distance against the reference per variant,
* optional ``snapshot_*.csv`` density dumps.
"""

from __future__ import annotations

import csv
import json
import logging
import platform
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

import apfilter
from apfilter import baselines, metrics
from apfilter.bijection import GaussianBijection, StaticBijection
from apfilter.config import ExperimentConfig, VariantConfig, parse_vector
from apfilter.expfam import ExpFamily
from apfilter.filter import FilterDivergence, FilterState, ModelSpec, ProjectionFilter
from apfilter.polyalg import SparsePolynomial, monomials_up_to
from apfilter.quadrature import QuadratureGrid, from_rule, gauss_chebyshev, gauss_hermite_1d, prune, smolyak, tensor_product

log = logging.getLogger(__name__)

_BIJECTION_VARIANT = {"erf_gaussian": "erf_hypercube", "gh_affine": "hermite_affine"}


def make_grid(variant: VariantConfig, dim: int) -> QuadratureGrid:
    if variant.level is not None:
        grid = smolyak(dim, variant.level, variant.quadrature)
    else:
        rule = gauss_hermite_1d(variant.nodes) if variant.quadrature == "gauss_hermite" else gauss_chebyshev(variant.nodes)
        grid = from_rule(rule) if dim == 1 else tensor_product(rule, dim)
    return prune(grid, variant.prune) if variant.prune > 0 else grid


def make_bijection(variant: VariantConfig, dim: int, mean=None, cov=None):
    """Bijection of a variant; Gaussian ones start from ``(mean, cov)`` when given, else the standard normal."""
    if variant.bijection == "static":
        return StaticBijection(dim)
    if mean is None:
        return GaussianBijection.standard(dim, _BIJECTION_VARIANT[variant.bijection])
    return GaussianBijection.from_moments(mean, cov, _BIJECTION_VARIANT[variant.bijection])


def gaussian_theta(stats, mean, cov) -> np.ndarray:
    """Natural parameter of ``N(mean, cov)`` in a family containing every monomial of degree 1 and 2."""
    mean = np.atleast_1d(np.asarray(mean, dtype=float))
    prec = np.linalg.inv(np.atleast_2d(np.asarray(cov, dtype=float)))
    d = mean.shape[0]
    quad = SparsePolynomial.zero(d)
    lin = prec @ mean
    for i in range(d):
        quad = quad + lin[i] * SparsePolynomial.variable(i, d)
        for j in range(d):
            quad = quad - 0.5 * prec[i, j] * SparsePolynomial.variable(i, d) * SparsePolynomial.variable(j, d)
    theta = np.zeros(len(stats))
    for k, s in enumerate(stats):
        (index, coeff), = s.items()
        theta[k] = quad.coefficient(index) / coeff
    return theta


def gaussian_moments(stats, theta) -> tuple[np.ndarray, np.ndarray]:
    """Mean and covariance implied by a parameter whose only non-zero entries have degree <= 2."""
    d = stats[0].dim
    prec = np.zeros((d, d))
    lin = np.zeros(d)
    for s, t in zip(stats, theta):
        (index, coeff), = s.items()
        deg = sum(index)
        if deg == 1:
            lin[int(np.argmax(index))] += t * coeff
        elif deg == 2:
            nz = [i for i, e in enumerate(index) for _ in range(e)]
            i, j = nz
            if i == j:
                prec[i, i] -= 2 * t * coeff
            else:
                prec[i, j] -= t * coeff
                prec[j, i] -= t * coeff
        elif t != 0:
            raise ValueError("parameter has non-Gaussian components")
    cov = np.linalg.inv(prec)
    return cov @ lin, cov


@dataclass
class VariantResult:
    label: str
    grid_nodes: int
    states: list[FilterState] = field(default_factory=list)
    status: str = "ok"
    error: str = ""
    seconds: float = 0.0
    family: ExpFamily | None = None


@dataclass
class ExperimentResult:
    out_dir: Path
    times: np.ndarray
    hellinger: dict[str, np.ndarray]
    variants: dict[str, VariantResult]
    manifest: dict

    @property
    def ok(self) -> bool:
        return all(v.status == "ok" for v in self.variants.values())


def projection_filter(cfg: ExperimentConfig, variant: VariantConfig, model: ModelSpec) -> ProjectionFilter:
    stats = monomials_up_to(model.dim, cfg.degree)
    return ProjectionFilter.build(model, stats, make_grid(variant, model.dim))


def initial_theta(cfg: ExperimentConfig, stats) -> np.ndarray:
    if cfg.theta0 is not None:
        return np.asarray(cfg.theta0, dtype=float)
    return gaussian_theta(stats, cfg.initial_mean, cfg.initial_cov)


def run_variant(cfg, variant, model, dys, keep, out_dir: Path) -> VariantResult:
    start = time.perf_counter()
    pf = projection_filter(cfg, variant, model)
    res = VariantResult(variant.label, len(pf.grid), family=pf.family)
    try:
        bij0 = make_bijection(variant, model.dim, cfg.initial_mean, cfg.initial_cov)
        s0 = pf.initial_state(initial_theta(cfg, pf.family.stats), bij0)
        res.states = pf.run(s0, cfg.dt, dys, log_path=out_dir / f"{variant.label}.csv", thin=cfg.log_every, keep=keep)
    except FilterDivergence as exc:
        res.status, res.error = "diverged", str(exc)
        res.states = exc.trajectory
        log.error("variant %s diverged: %s", variant.label, exc)
    res.seconds = time.perf_counter() - start
    return res


def _manifest(cfg: ExperimentConfig, extra: dict) -> dict:
    return {
        "kind": cfg.kind,
        "seed": cfg.seed,
        "dt": cfg.dt,
        "t_end": cfg.t_end,
        "steps": cfg.steps,
        "package_version": apfilter.__version__,
        "numpy_version": np.__version__,
        "python_version": platform.python_version(),
        "config": cfg.source,
        **extra,
    }


def _write_json(path: Path, data: dict) -> None:
    path.write_text(json.dumps(data, indent=2, default=float))


def _write_comparison(path: Path, times, columns: dict[str, np.ndarray]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t"] + [f"hellinger_{k}" for k in columns])
        for i, t in enumerate(times):
            w.writerow([repr(float(t))] + [repr(float(c[i])) if i < len(c) else "" for c in columns.values()])


def _variant_manifest(results: dict[str, VariantResult]) -> dict:
    return {
        k: {"grid_nodes": v.grid_nodes, "status": v.status, "error": v.error, "seconds": round(v.seconds, 3)}
        for k, v in results.items()
    }


def _compare_steps(cfg: ExperimentConfig) -> list[int]:
    return list(range(0, cfg.steps + 1, cfg.compare_every))


def _hellinger_series(res: VariantResult, reference: list, axes_of) -> np.ndarray:
    """Hellinger distances for every logged state that has a matching reference density.

    The projection density is renormalized on the comparison grid so the
    quadrature error in ``psi_N`` does not enter the distance.
    """
    out = []
    for k, state in enumerate(res.states):
        if k >= len(reference):
            break
        ref = reference[k]
        axes = axes_of(k)
        try:
            proj = metrics.density_on_grid(state.theta, res.family, state.cache.psi, axes).normalized()
        except (OverflowError, ValueError):
            out.append(1.0)
            continue
        out.append(metrics.hellinger(proj, ref))
    return np.array(out)


def run_cubic(cfg: ExperimentConfig, out_dir) -> ExperimentResult:
    """Finite-difference reference plus every configured projection variant on one measurement record."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    model = cfg.model.normalized()
    sim = baselines.simulate(cfg.model, cfg.x0, cfg.dt, cfg.steps, cfg.seed)
    dys = cfg.model.whiten(sim.dy)
    steps = _compare_steps(cfg)
    keep = set(steps[1:])

    lo, hi, n = parse_vector(cfg.reference.get("axis", "-6 6 1200"))
    n = int(n)
    stats = monomials_up_to(1, cfg.degree)
    theta0 = initial_theta(cfg, stats)
    p0 = lambda x: np.exp(np.polynomial.polynomial.polyval(x, np.concatenate([[0.0], theta0])))
    fd_start = time.perf_counter()
    fd = baselines.fd_ks_solver_1d(model, (lo, hi, n), p0, cfg.dt, dys, keep=keep)
    fd_seconds = time.perf_counter() - fd_start
    times = np.array(steps[: len(fd)]) * cfg.dt
    with open(out_dir / "reference.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "mean", "variance"])
        for t, dens in zip(times, fd):
            mean, cov = dens.moments()
            w.writerow([repr(float(t)), repr(float(mean[0])), repr(float(cov[0, 0]))])

    results, columns = {}, {}
    for v in cfg.variants:
        res = run_variant(cfg, v, model, dys, keep, out_dir)
        results[v.label] = res
        columns[v.label] = _hellinger_series(res, fd, lambda k: fd[k].axes)
    _write_comparison(out_dir / "comparison.csv", times, columns)
    manifest = _manifest(
        cfg,
        {
            "reference": {"method": "finite_difference", "axis": [lo, hi, n], "seconds": round(fd_seconds, 3)},
            "variants": _variant_manifest(results),
            "wall_clock_seconds": round(time.perf_counter() - t0, 3),
        },
    )
    _write_json(out_dir / "manifest.json", manifest)
    return ExperimentResult(out_dir, times, columns, results, manifest)


def particle_axes(ps: baselines.ParticleSet, bins, coverage: float, margin: float = 0.1):
    """Per-axis ranges covering the central ``coverage`` of the weighted cloud, padded by ``margin``."""
    axes = []
    tail = 0.5 * (1.0 - coverage) / ps.particles.shape[1]
    for j, nb in enumerate(bins):
        x = ps.particles[:, j]
        order = np.argsort(x)
        cdf = np.cumsum(ps.weights[order])
        lo = x[order][np.searchsorted(cdf, tail)]
        hi = x[order][min(np.searchsorted(cdf, 1.0 - tail), len(x) - 1)]
        pad = margin * (hi - lo)
        axes.append((float(lo - pad), float(hi + pad), int(nb)))
    return tuple(axes)


def measurement_record(cfg: ExperimentConfig):
    """Unit-noise model, true initial state, whitened increments, prior sampler and the particle-filter seed.

    The config seed is split into independent streams for the initial state,
    the simulated path and the particle filter.
    """
    model = cfg.model.normalized()
    mean0 = np.atleast_1d(np.asarray(cfg.initial_mean, dtype=float))
    chol0 = np.linalg.cholesky(np.atleast_2d(cfg.initial_cov))
    sampler = lambda rng, n: mean0 + rng.standard_normal((n, model.dim)) @ chol0.T
    seed_init, seed_sim, seed_pf = np.random.SeedSequence(cfg.seed).spawn(3)
    x0 = cfg.x0 if cfg.x0 is not None else sampler(np.random.default_rng(seed_init), 1)[0]
    sim = baselines.simulate(cfg.model, x0, cfg.dt, cfg.steps, seed_sim)
    return model, x0, cfg.model.whiten(sim.dy), sampler, seed_pf


def run_particle_experiment(cfg: ExperimentConfig, out_dir, particles: int | None = None) -> ExperimentResult:
    """Bootstrap particle filter reference plus the projection variants (two-dimensional experiments)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    model, x0, dys, sampler, seed_pf = measurement_record(cfg)
    d = model.dim

    steps = _compare_steps(cfg)
    snap_steps = {int(round(t / cfg.dt)) for t in cfg.snapshot_times}
    keep_steps = sorted(set(steps) | snap_steps)
    keep = set(keep_steps[1:]) if keep_steps and keep_steps[0] == 0 else set(keep_steps)
    n_particles = particles or int(cfg.reference.get("particles", 100000))
    bins = [int(b) for b in cfg.reference.get("bins", "60 60").split()]
    coverage = float(cfg.reference.get("coverage", 0.9995))

    pf_start = time.perf_counter()
    clouds = baselines.bootstrap_pf(model, n_particles, sampler, cfg.dt, dys, seed_pf, keep=keep)
    pf_seconds = time.perf_counter() - pf_start
    axes_list = [particle_axes(c, bins, coverage) for c in clouds]
    refs = [c.density(a) for c, a in zip(clouds, axes_list)]
    times = np.array(keep_steps[: len(clouds)]) * cfg.dt
    with open(out_dir / "reference.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "resampled"] + [f"mean_{i + 1}" for i in range(d)] + [f"sigma_{i + 1}{j + 1}" for i in range(d) for j in range(d)])
        for t, c in zip(times, clouds):
            mean = c.mean()
            xc = c.particles - mean
            cov = (xc * c.weights[:, None]).T @ xc
            w.writerow([repr(float(t)), int(c.resampled)] + [repr(float(v)) for v in [*mean, *cov.ravel()]])

    results, columns = {}, {}
    for v in cfg.variants:
        res = run_variant(cfg, v, model, dys, keep, out_dir)
        results[v.label] = res
        columns[v.label] = _hellinger_series(res, refs, lambda k: axes_list[k])
        for k, state in enumerate(res.states):
            if keep_steps[k] in snap_steps:
                tag = f"{keep_steps[k] * cfg.dt:.4f}"
                metrics.density_on_grid(state.theta, res.family, state.cache.psi, axes_list[k]).to_csv(
                    out_dir / f"snapshot_{v.label}_t{tag}.csv"
                )
    for k, step in enumerate(keep_steps[: len(refs)]):
        if step in snap_steps:
            refs[k].to_csv(out_dir / f"snapshot_reference_t{step * cfg.dt:.4f}.csv")
    _write_comparison(out_dir / "comparison.csv", times, columns)
    manifest = _manifest(
        cfg,
        {
            "x0": list(map(float, x0)),
            "reference": {"method": "particle_filter", "particles": n_particles, "bins": bins, "seconds": round(pf_seconds, 3)},
            "variants": _variant_manifest(results),
            "wall_clock_seconds": round(time.perf_counter() - t0, 3),
        },
    )
    _write_json(out_dir / "manifest.json", manifest)
    return ExperimentResult(out_dir, times, columns, results, manifest)


@dataclass
class LinearCheckResult:
    out_dir: Path
    mean_error: dict[str, float]
    variance_error: dict[str, float]
    pf_rmse: float
    manifest: dict


def run_linear_check(cfg: ExperimentConfig, out_dir, particles: int | None = None) -> LinearCheckResult:
    """Projection variants and a particle filter against the Kalman-Bucy filter."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    model, x0, dys, sampler, seed_pf = measurement_record(cfg)
    mean0 = np.atleast_1d(np.asarray(cfg.initial_mean, dtype=float))
    kb_mean, kb_cov = baselines.kalman_bucy(model, mean0, np.atleast_2d(cfg.initial_cov), cfg.dt, dys)

    mean_err, var_err, status = {}, {}, {}
    for v in cfg.variants:
        res = run_variant(cfg, v, model, dys, None, out_dir)
        status[v.label] = {"grid_nodes": res.grid_nodes, "status": res.status, "error": res.error}
        stats = res.family.stats
        rows = []
        for k, s in enumerate(res.states):
            m, c = gaussian_moments(stats, s.theta)
            rows.append((s.t, m[0], c[0, 0], kb_mean[k, 0], kb_cov[k, 0, 0]))
        rows = np.array(rows)
        mean_err[v.label] = float(np.abs(rows[:, 1] - rows[:, 3]).max())
        var_err[v.label] = float(np.abs(rows[:, 2] / rows[:, 4] - 1).max())
        with open(out_dir / f"errors_{v.label}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t", "mean", "variance", "kb_mean", "kb_variance", "mean_abs_error", "variance_rel_error"])
            for r in rows:
                w.writerow([repr(float(x)) for x in r] + [repr(float(abs(r[1] - r[3]))), repr(float(abs(r[2] / r[4] - 1)))])

    n_particles = particles or int(cfg.reference.get("particles", 100000))
    clouds = baselines.bootstrap_pf(model, n_particles, sampler, cfg.dt, dys, seed_pf)
    pf_mean = np.array([c.mean() for c in clouds])
    pf_rmse = float(np.sqrt(np.mean((pf_mean[:, 0] - kb_mean[:, 0]) ** 2)))
    manifest = _manifest(
        cfg,
        {
            "x0": list(map(float, x0)),
            "variants": status,
            "mean_abs_error": mean_err,
            "variance_rel_error": var_err,
            "pf_particles": n_particles,
            "pf_mean_rmse": pf_rmse,
            "wall_clock_seconds": round(time.perf_counter() - t0, 3),
        },
    )
    _write_json(out_dir / "manifest.json", manifest)
    return LinearCheckResult(out_dir, mean_err, var_err, pf_rmse, manifest)
