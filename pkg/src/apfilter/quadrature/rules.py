"""One-dimensional Gauss-type rules."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from apfilter.quadrature import _patterson

MAX_LEVEL = 7


class Family(str, enum.Enum):
    GAUSS_CHEBYSHEV = "gauss_chebyshev"
    GAUSS_PATTERSON = "gauss_patterson"
    GAUSS_HERMITE = "gauss_hermite"


@dataclass(frozen=True)
class Rule1D:
    family: Family
    level: int
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return self.nodes.shape[0]

    def integrate(self, func) -> float:
        return float(np.dot(self.weights, func(self.nodes)))


def level_size(level: int) -> int:
    """Number of 1-D nodes used at a sparse-grid level: ``2**(level + 1) - 1``."""
    if level < 0:
        raise ValueError("level must be non-negative")
    return 2 ** (level + 1) - 1


def gauss_chebyshev(n: int, level: int = -1) -> Rule1D:
    """Gauss-Chebyshev rule (first kind) for the weight ``(1 - x**2)**-0.5`` on (-1, 1)."""
    if n < 1:
        raise ValueError("Gauss-Chebyshev rule needs at least one node")
    i = np.arange(n, 0, -1)
    nodes = np.cos((2 * i - 1) * np.pi / (2 * n))
    nodes = 0.5 * (nodes - nodes[::-1])
    if n % 2:
        nodes[n // 2] = 0.0
    return Rule1D(Family.GAUSS_CHEBYSHEV, level, nodes, np.full(n, np.pi / n))


def gauss_patterson_1d(level: int) -> Rule1D:
    """Nested Gauss-Patterson rule on (-1, 1) with unit weight function.

    Level 0 is the one-point midpoint rule, level ``l`` has ``2**(l + 1) - 1``
    nodes and integrates polynomials up to degree ``(3 * 2**l - 1)`` for
    ``l >= 1`` (degree 1 at level 0, 5 at level 1).
    """
    if not 0 <= level <= MAX_LEVEL:
        raise ValueError(f"Gauss-Patterson level must be in [0, {MAX_LEVEL}], got {level}")
    nodes = np.array(_patterson.NODES[level])
    weights = np.array(_patterson.WEIGHTS[level])
    return Rule1D(Family.GAUSS_PATTERSON, level, nodes, weights)


def patterson_degree(level: int) -> int:
    """Polynomial exactness degree of the Gauss-Patterson rule at ``level``."""
    if level == 0:
        return 1
    return 3 * 2 ** level - 1


def _hermite_weights(nodes: np.ndarray, n: int) -> np.ndarray:
    # Christoffel numbers from the orthonormal recurrence; relative accuracy
    # holds even for weights far below machine epsilon.
    p_prev = np.zeros_like(nodes)
    p = np.full_like(nodes, np.pi ** -0.25)
    total = p * p
    for k in range(1, n):
        p_next = np.sqrt(2.0 / k) * nodes * p - np.sqrt((k - 1) / k) * p_prev
        p_prev, p = p, p_next
        total += p * p
    return 1.0 / total


def _hermite_newton(nodes: np.ndarray, n: int, iters: int = 2) -> np.ndarray:
    for _ in range(iters):
        p_prev = np.zeros_like(nodes)
        p = np.full_like(nodes, np.pi ** -0.25)
        for k in range(1, n + 1):
            p_next = np.sqrt(2.0 / k) * nodes * p - np.sqrt((k - 1) / k) * p_prev
            p_prev, p = p, p_next
        # p = p_n, p_prev = p_{n-1}; d/dx p_n = sqrt(2 n) p_{n-1}
        step = p / (np.sqrt(2.0 * n) * p_prev)
        nodes = nodes - step
    return nodes


def gauss_hermite_1d(n: int, level: int = -1) -> Rule1D:
    """Gauss-Hermite rule for the weight ``exp(-x**2)`` on the real line.

    Nodes come from the Golub-Welsch eigenproblem of the Jacobi matrix and are
    polished by Newton steps on the orthonormal recurrence; weights are the
    Christoffel numbers, so ``sum(weights) == sqrt(pi)`` to rounding.
    """
    if n < 1:
        raise ValueError("Gauss-Hermite rule needs at least one node")
    if n == 1:
        return Rule1D(Family.GAUSS_HERMITE, level, np.zeros(1), np.array([np.sqrt(np.pi)]))
    off = np.sqrt(np.arange(1, n) / 2.0)
    try:
        nodes = eigh_tridiagonal(np.zeros(n), off, eigvals_only=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise RuntimeError(f"Golub-Welsch eigen-solver failed for n={n}") from exc
    nodes = _hermite_newton(np.sort(nodes), n)
    nodes = 0.5 * (nodes - nodes[::-1])
    if n % 2:
        nodes[n // 2] = 0.0
    weights = _hermite_weights(nodes, n)
    weights = 0.5 * (weights + weights[::-1])
    return Rule1D(Family.GAUSS_HERMITE, level, nodes, weights)


def rule_at_level(family: Family | str, level: int) -> Rule1D:
    """1-D rule of the sparse-grid level sequence ``N(1, l) = 2**(l + 1) - 1``."""
    family = Family(family)
    if family is Family.GAUSS_PATTERSON:
        return gauss_patterson_1d(level)
    if not 0 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be in [0, {MAX_LEVEL}], got {level}")
    n = level_size(level)
    if family is Family.GAUSS_HERMITE:
        return gauss_hermite_1d(n, level)
    return gauss_chebyshev(n, level)
