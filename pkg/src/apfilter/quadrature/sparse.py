"""Smolyak sparse grids built from the 1-D level sequences."""

from __future__ import annotations

import csv
import enum
import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from apfilter.quadrature.rules import Family, Rule1D, rule_at_level

MERGE_TOL = 1e-12


class Domain(str, enum.Enum):
    HYPERCUBE = "hypercube"
    REAL_SPACE = "real_space"


def domain_of(family: Family) -> Domain:
    return Domain.REAL_SPACE if Family(family) is Family.GAUSS_HERMITE else Domain.HYPERCUBE


@dataclass(frozen=True)
class QuadratureGrid:
    """Nodes and (possibly negative) weights of a d-dimensional rule.

    The rule integrates against the family's weight function ``omega``:
    Chebyshev ``prod (1 - x_i**2)**-0.5``, Patterson ``1``, Hermite
    ``exp(-|x|**2)``.
    """

    dim: int
    level: int
    family: Family
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def domain(self) -> Domain:
        return domain_of(self.family)

    def __len__(self):
        return self.weights.shape[0]

    def log_inv_omega(self) -> np.ndarray:
        """``-log omega`` at every node."""
        if self.family is Family.GAUSS_CHEBYSHEV:
            return 0.5 * np.log1p(-self.nodes**2).sum(axis=1)
        if self.family is Family.GAUSS_HERMITE:
            return (self.nodes**2).sum(axis=1)
        return np.zeros(len(self))

    def integrate(self, func) -> float:
        """``sum_i w_i func(x_i)`` with ``func`` vectorized over rows of nodes."""
        return float(np.dot(self.weights, func(self.nodes)))

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([f"x{i + 1}" for i in range(self.dim)] + ["weight"])
            for x, w in zip(self.nodes, self.weights):
                writer.writerow([repr(float(v)) for v in x] + [repr(float(w))])

    @classmethod
    def from_csv(cls, path, family: Family | str, level: int = -1) -> "QuadratureGrid":
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(data.shape[1] - 1, level, Family(family), data[:, :-1], data[:, -1])


def from_rule(rule: Rule1D) -> QuadratureGrid:
    """One-dimensional grid wrapping a 1-D rule."""
    return QuadratureGrid(1, rule.level, rule.family, rule.nodes[:, None].copy(), rule.weights.copy())


def _merge(nodes: np.ndarray, weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.lexsort(nodes.T[::-1])
    nodes, weights = nodes[order], weights[order]
    keep_nodes = [nodes[0]]
    keep_w = [weights[0]]
    for x, w in zip(nodes[1:], weights[1:]):
        if np.all(np.abs(x - keep_nodes[-1]) <= MERGE_TOL):
            keep_w[-1] += w
        else:
            keep_nodes.append(x)
            keep_w.append(w)
    return np.array(keep_nodes), np.array(keep_w)


def smolyak(dim: int, level: int, family: Family | str) -> QuadratureGrid:
    """Classic Smolyak combination of 1-D rules with ``N(1, l) = 2**(l + 1) - 1`` nodes.

    ``Q = sum_{level-d+1 <= |i| <= level} (-1)**(level-|i|) C(d-1, level-|i|) Q_i1 x ... x Q_id``
    with 0-based multi-index levels; coincident nodes are merged and their
    weights summed.
    """
    if dim < 1:
        raise ValueError("dim must be positive")
    family = Family(family)
    rules = [rule_at_level(family, l) for l in range(level + 1)]
    all_nodes, all_weights = [], []
    for index in itertools.product(range(level + 1), repeat=dim):
        total = sum(index)
        if total < level - dim + 1 or total > level:
            continue
        coef = (-1) ** (level - total) * comb(dim - 1, level - total)
        parts = [rules[i] for i in index]
        mesh = np.meshgrid(*[r.nodes for r in parts], indexing="ij")
        wmesh = np.meshgrid(*[r.weights for r in parts], indexing="ij")
        all_nodes.append(np.stack([m.ravel() for m in mesh], axis=1))
        all_weights.append(coef * np.prod([w.ravel() for w in wmesh], axis=0))
    nodes, weights = _merge(np.concatenate(all_nodes), np.concatenate(all_weights))
    return QuadratureGrid(dim, level, family, nodes, weights)


def prune(grid: QuadratureGrid, threshold: float) -> QuadratureGrid:
    """Drop nodes whose weight magnitude is below ``threshold``; survivors keep their order."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    keep = np.abs(grid.weights) >= threshold
    return QuadratureGrid(grid.dim, grid.level, grid.family, grid.nodes[keep], grid.weights[keep])


def tensor_product(rule: Rule1D, dim: int) -> QuadratureGrid:
    """Full tensor grid of a 1-D rule."""
    mesh = np.meshgrid(*([rule.nodes] * dim), indexing="ij")
    wmesh = np.meshgrid(*([rule.weights] * dim), indexing="ij")
    nodes = np.stack([m.ravel() for m in mesh], axis=1)
    weights = np.prod([w.ravel() for w in wmesh], axis=0)
    return QuadratureGrid(dim, rule.level, rule.family, nodes, weights)
