"""Second-order forward-mode automatic differentiation.

A :class:`Jet2` carries a value together with its gradient and Hessian with
respect to ``m`` seed variables.  Jets may be batched: a value of shape ``S``
comes with a gradient of shape ``S + (m,)`` and a Hessian of shape
``S + (m, m)``, which lets one pass propagate derivatives through all
quadrature nodes at once.
"""

from __future__ import annotations

from typing import Callable

import numpy as np


class Jet2:
    __slots__ = ("value", "grad", "hess")

    # let ``ndarray @ jet`` and ``ndarray * jet`` dispatch to our reflected ops
    __array_ufunc__ = None

    def __init__(self, value, grad, hess):
        self.value = np.asarray(value, dtype=float)
        self.grad = np.asarray(grad, dtype=float)
        self.hess = np.asarray(hess, dtype=float)

    @property
    def m(self) -> int:
        return self.grad.shape[-1]

    @property
    def shape(self):
        return self.value.shape

    def __repr__(self):
        return f"Jet2(value={self.value!r}, grad={self.grad!r}, hess={self.hess!r})"

    @classmethod
    def constant(cls, value, m: int) -> "Jet2":
        value = np.asarray(value, dtype=float)
        return cls(value, np.zeros(value.shape + (m,)), np.zeros(value.shape + (m, m)))

    def _lift(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return other
        return Jet2.constant(other, self.m)

    def __getitem__(self, key) -> "Jet2":
        return Jet2(self.value[key], self.grad[key], self.hess[key])

    # linear operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Jet2):
            return Jet2(self.value + other, self.grad, self.hess)
        return Jet2(self.value + other.value, self.grad + other.grad, self.hess + other.hess)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.value, -self.grad, -self.hess)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> "Jet2":
        """Multiply by constants broadcast against the batch shape."""
        factor = np.asarray(factor, dtype=float)
        return Jet2(self.value * factor, self.grad * factor[..., None], self.hess * factor[..., None, None])

    def __rmatmul__(self, matrix) -> "Jet2":
        """``matrix @ jet`` for a 1-D batch of jets (a linear map)."""
        matrix = np.asarray(matrix, dtype=float)
        return Jet2(matrix @ self.value, matrix @ self.grad, np.tensordot(matrix, self.hess, axes=(-1, 0)))

    def sum(self, weights=None) -> "Jet2":
        """Reduce the leading batch axis, optionally with constant weights."""
        if weights is None:
            return Jet2(self.value.sum(axis=0), self.grad.sum(axis=0), self.hess.sum(axis=0))
        w = np.asarray(weights, dtype=float)
        return Jet2(w @ self.value, np.tensordot(w, self.grad, axes=(0, 0)), np.tensordot(w, self.hess, axes=(0, 0)))

    # nonlinear operations -------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            return self.scale(other)
        a, b = self, other
        outer = a.grad[..., :, None] * b.grad[..., None, :]
        return Jet2(
            a.value * b.value,
            a.grad * b.value[..., None] + b.grad * a.value[..., None],
            a.hess * b.value[..., None, None] + b.hess * a.value[..., None, None] + outer + np.swapaxes(outer, -1, -2),
        )

    __rmul__ = __mul__

    def _unary(self, f0, f1, f2) -> "Jet2":
        g = self.grad
        return Jet2(
            f0,
            g * f1[..., None],
            self.hess * f1[..., None, None] + (g[..., :, None] * g[..., None, :]) * f2[..., None, None],
        )

    def exp(self) -> "Jet2":
        e = np.exp(self.value)
        return self._unary(e, e, e)

    def log(self) -> "Jet2":
        if np.any(self.value <= 0):
            raise ValueError("log of a non-positive jet value")
        inv = 1.0 / self.value
        return self._unary(np.log(self.value), inv, -inv * inv)

    def reciprocal(self) -> "Jet2":
        if np.any(self.value == 0):
            raise ZeroDivisionError("division by a jet with zero value")
        inv = 1.0 / self.value
        return self._unary(inv, -inv * inv, 2.0 * inv**3)

    def __truediv__(self, other):
        if not isinstance(other, Jet2):
            return self.scale(1.0 / np.asarray(other, dtype=float))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int):
        if not float(n).is_integer() or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        n = int(n)
        v = self.value
        return self._unary(v**n, n * v ** max(n - 1, 0), n * (n - 1) * v ** max(n - 2, 0))

    def symmetrized(self) -> "Jet2":
        return Jet2(self.value, self.grad, 0.5 * (self.hess + np.swapaxes(self.hess, -1, -2)))


def lift(point) -> Jet2:
    """Seed jets for every coordinate of ``point``: gradient ``e_i``, zero Hessian."""
    point = np.asarray(point, dtype=float)
    if not np.all(np.isfinite(point)):
        raise ValueError("cannot seed jets at a non-finite point")
    m = point.shape[0]
    return Jet2(point.copy(), np.eye(m), np.zeros((m, m, m)))


def exp(x: Jet2) -> Jet2:
    return x.exp()


def log(x: Jet2) -> Jet2:
    return x.log()


def hessian_of(func: Callable[[Jet2], Jet2], point) -> Jet2:
    """Value, gradient and symmetric Hessian of a scalar function at ``point``."""
    out = func(lift(point))
    if out.value.ndim != 0:
        raise ValueError("function must return a scalar jet")
    return out.symmetrized()
