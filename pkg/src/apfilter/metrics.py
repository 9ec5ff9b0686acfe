"""Grid evaluation of exponential-family densities and Hellinger distances."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from apfilter.baselines import GridDensity, grid_points
from apfilter.expfam import ExpFamily, density_values


@dataclass(frozen=True)
class ComparisonRow:
    t: float
    hellinger: float
    moment_errors: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        if not -1e-12 <= self.hellinger <= 1 + 1e-12:
            raise ValueError(f"Hellinger distance {self.hellinger} outside [0, 1]")
        object.__setattr__(self, "moment_errors", np.atleast_1d(np.asarray(self.moment_errors, dtype=float)))


def density_on_grid(theta, family: ExpFamily, psi: float, axes) -> GridDensity:
    """``exp(c(x) . theta - psi)`` at the cell centres of ``axes``."""
    axes = tuple(tuple(a) for a in axes)
    values = density_values(theta, family, psi, grid_points(axes))
    return GridDensity(axes, values.reshape([int(n) for _, _, n in axes]))


def integral_defect(density: GridDensity) -> float:
    return abs(density.integral() - 1.0)


def hellinger(p: GridDensity, q: GridDensity) -> float:
    """``sqrt(1 - sum sqrt(p q) vol)`` clamped to ``[0, 1]``."""
    if p.axes != q.axes:
        raise ValueError("densities live on different grids")
    bc = float(np.sqrt(p.values * q.values).sum() * p.cell_volume)
    return float(np.sqrt(min(max(1.0 - bc, 0.0), 1.0)))


def moment_errors(p: GridDensity, q: GridDensity) -> np.ndarray:
    """Absolute differences of the means followed by those of the covariance entries."""
    mp, cp = p.moments()
    mq, cq = q.moments()
    return np.concatenate([np.abs(mp - mq), np.abs(cp - cq).ravel()])


def compare(t: float, p: GridDensity, q: GridDensity) -> ComparisonRow:
    return ComparisonRow(t, hellinger(p, q), moment_errors(p, q))


def write_comparison(path, rows: Sequence[ComparisonRow], labels: Sequence[str] = ()) -> None:
    """CSV with columns ``t, hellinger[, moment errors...]``."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        k = len(rows[0].moment_errors) if rows else 0
        writer.writerow(["t", "hellinger"] + (list(labels) or [f"moment_err_{i + 1}" for i in range(k)]))
        for r in rows:
            writer.writerow([repr(float(r.t)), repr(r.hellinger)] + [repr(float(v)) for v in r.moment_errors])
