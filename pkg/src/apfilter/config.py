"""Experiment configuration files.

Configs are INI files read with :mod:`configparser`.  Model polynomials use the
polynomial text format (one ``e1 .. ed coeff`` term per line), e.g.::

    [model]
    dim = 1
    drift_1 = 0 0.25
    diffusion_1_1 = 0 0.4
    q = 1
    obs_1 = 3 0.8

Matrices are written row by row, rows separated by ``;``.  Each
``[variant <label>]`` section describes one projection filter.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from apfilter.filter import ModelSpec
from apfilter.polyalg import SparsePolynomial

BIJECTIONS = ("static", "erf_gaussian", "gh_affine")
_DOMAIN_OF_BIJECTION = {"static": "hypercube", "erf_gaussian": "hypercube", "gh_affine": "real_space"}
_DOMAIN_OF_QUADRATURE = {"gauss_chebyshev": "hypercube", "gauss_patterson": "hypercube", "gauss_hermite": "real_space"}


class ConfigError(ValueError):
    pass


def parse_vector(text: str) -> np.ndarray:
    return np.array([float(v) for v in text.replace(",", " ").split()])


def parse_matrix(text: str) -> np.ndarray:
    rows = [parse_vector(r) for r in text.split(";") if r.strip()]
    if len({len(r) for r in rows}) != 1:
        raise ConfigError(f"ragged matrix: {text!r}")
    return np.array(rows)


@dataclass(frozen=True)
class VariantConfig:
    label: str
    bijection: str
    quadrature: str
    nodes: int | None = None
    level: int | None = None
    prune: float = 0.0

    def __post_init__(self):
        if self.bijection not in BIJECTIONS:
            raise ConfigError(f"variant {self.label}: unknown bijection {self.bijection!r}")
        if self.quadrature not in _DOMAIN_OF_QUADRATURE:
            raise ConfigError(f"variant {self.label}: unknown quadrature {self.quadrature!r}")
        if _DOMAIN_OF_BIJECTION[self.bijection] != _DOMAIN_OF_QUADRATURE[self.quadrature]:
            raise ConfigError(f"variant {self.label}: {self.bijection} bijection cannot use {self.quadrature} nodes")
        if (self.nodes is None) == (self.level is None):
            raise ConfigError(f"variant {self.label}: give exactly one of nodes or level")
        if self.nodes is not None and self.quadrature == "gauss_patterson":
            raise ConfigError(f"variant {self.label}: Patterson rules are selected by level")


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    model: ModelSpec
    degree: int
    dt: float
    t_end: float
    seed: int
    variants: tuple[VariantConfig, ...]
    theta0: np.ndarray | None = None
    initial_mean: np.ndarray | None = None
    initial_cov: np.ndarray | None = None
    x0: np.ndarray | None = None
    compare_every: int = 1
    log_every: int = 1
    reference: dict = field(default_factory=dict)
    snapshot_times: tuple[float, ...] = ()
    source: str = ""

    @property
    def steps(self) -> int:
        return int(round(self.t_end / self.dt))


def _model_from_section(sec) -> ModelSpec:
    dim = sec.getint("dim")
    if dim is None:
        raise ConfigError("[model] needs dim")

    def poly(key):
        text = sec.get(key, "").strip()
        return SparsePolynomial.from_text(text, dim) if text else SparsePolynomial.zero(dim)

    q = parse_matrix(sec.get("q", "1"))
    dw = q.shape[0]
    drift = [poly(f"drift_{i + 1}") for i in range(dim)]
    diffusion = [[poly(f"diffusion_{i + 1}_{j + 1}") for j in range(dw)] for i in range(dim)]
    obs_keys = sorted((k for k in sec if k.startswith("obs_") and k[4:].isdigit()), key=lambda k: int(k[4:]))
    if not obs_keys:
        raise ConfigError("[model] needs at least obs_1")
    obs = [poly(k) for k in obs_keys]
    r = parse_matrix(sec["obs_noise"]) if "obs_noise" in sec else None
    return ModelSpec(drift, diffusion, q, obs, r)


def parse_config(text: str, overrides: dict | None = None) -> ExperimentConfig:
    cp = configparser.ConfigParser()
    cp.read_string(text)
    if "experiment" not in cp or "model" not in cp:
        raise ConfigError("config needs [experiment] and [model] sections")
    ex = cp["experiment"]
    variants = []
    for name in cp.sections():
        if not name.startswith("variant "):
            continue
        sec = cp[name]
        variants.append(
            VariantConfig(
                label=name.split(None, 1)[1].strip(),
                bijection=sec.get("bijection"),
                quadrature=sec.get("quadrature"),
                nodes=sec.getint("nodes"),
                level=sec.getint("level"),
                prune=sec.getfloat("prune", 0.0),
            )
        )
    model = _model_from_section(cp["model"])
    kw = dict(
        kind=ex.get("kind"),
        model=model,
        degree=ex.getint("degree"),
        dt=ex.getfloat("dt"),
        t_end=ex.getfloat("t_end"),
        seed=ex.getint("seed", 0),
        variants=tuple(variants),
        compare_every=ex.getint("compare_every", 1),
        log_every=ex.getint("log_every", 1),
        reference=dict(cp["reference"]) if "reference" in cp else {},
        snapshot_times=tuple(parse_vector(ex.get("snapshot_times", ""))),
        source=text,
    )
    if "theta0" in ex:
        kw["theta0"] = parse_vector(ex["theta0"])
    if "initial_mean" in ex:
        kw["initial_mean"] = parse_vector(ex["initial_mean"])
        kw["initial_cov"] = parse_matrix(ex["initial_cov"])
    if "x0" in ex:
        kw["x0"] = parse_vector(ex["x0"])
    if "theta0" not in kw and "initial_mean" not in kw:
        raise ConfigError("give theta0 or initial_mean/initial_cov")
    kw.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return ExperimentConfig(**kw)


def load_config(path, overrides: dict | None = None) -> ExperimentConfig:
    return parse_config(Path(path).read_text(), overrides)


def default_config_text(name: str) -> str:
    return resources.files("apfilter.configs").joinpath(f"{name}.cfg").read_text()


def default_config(name: str, overrides: dict | None = None) -> ExperimentConfig:
    return parse_config(default_config_text(name), overrides)
