"""Sparse multivariate polynomials and the symbolic preprocessing of a filter model.

A polynomial is stored as a map from exponent tuples to float coefficients.
Monomials are ordered graded-lexicographically (total degree first, then
larger exponents of the earlier variables first), so in two variables the
order is ``1, x1, x2, x1**2, x1*x2, x2**2, ...``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

#: Coefficients whose magnitude falls below this after arithmetic are dropped.
ZERO_TOL = 1e-14

MultiIndex = tuple[int, ...]


def monomial_key(index: MultiIndex) -> tuple:
    """Sort key implementing graded lexicographic order."""
    return (sum(index), tuple(-e for e in index))


class SparsePolynomial:
    """Immutable polynomial in ``dim`` real variables.

    Parameters
    ----------
    terms : mapping
        Exponent tuple -> coefficient.  Zero (and near-zero) coefficients are
        dropped so that the stored form is canonical.
    dim : int
        Number of variables.
    """

    __slots__ = ("_terms", "_dim", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], float], dim: int):
        if dim < 1:
            raise ValueError("dim must be positive")
        clean: dict[MultiIndex, float] = {}
        for index, coeff in terms.items():
            index = tuple(int(e) for e in index)
            if len(index) != dim:
                raise ValueError(f"multi-index {index} does not have length {dim}")
            if any(e < 0 for e in index):
                raise ValueError(f"negative exponent in {index}")
            coeff = float(coeff)
            if abs(coeff) >= ZERO_TOL:
                clean[index] = clean.get(index, 0.0) + coeff
        self._terms = {k: clean[k] for k in sorted(clean, key=monomial_key) if abs(clean[k]) >= ZERO_TOL}
        self._dim = dim
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, value: float, dim: int) -> "SparsePolynomial":
        return cls({(0,) * dim: value}, dim)

    @classmethod
    def monomial(cls, index: Sequence[int], coeff: float = 1.0) -> "SparsePolynomial":
        index = tuple(index)
        return cls({index: coeff}, len(index))

    @classmethod
    def variable(cls, axis: int, dim: int) -> "SparsePolynomial":
        index = [0] * dim
        index[axis] = 1
        return cls.monomial(index)

    @classmethod
    def zero(cls, dim: int) -> "SparsePolynomial":
        return cls({}, dim)

    # basic protocol -------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> dict[MultiIndex, float]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1.0

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(k) for k in self._terms), default=-1)

    def coefficient(self, index: Sequence[int]) -> float:
        return self._terms.get(tuple(index), 0.0)

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = SparsePolynomial.constant(other, self._dim)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._dim, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"SparsePolynomial({self._terms!r}, dim={self._dim})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for index, coeff in self._terms.items():
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(index) if e]
            parts.append(f"{coeff:g}" + ("*" + "*".join(factors) if factors else ""))
        return " + ".join(parts)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            if other._dim != self._dim:
                raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return SparsePolynomial.constant(float(other), self._dim)
        raise TypeError(f"cannot combine SparsePolynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0.0) + v
        return SparsePolynomial(out, self._dim)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial({k: -v for k, v in self._terms.items()}, self._dim)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return SparsePolynomial({k: v * other for k, v in self._terms.items()}, self._dim)
        other = self._coerce(other)
        out: dict[MultiIndex, float] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0.0) + v1 * v2
        return SparsePolynomial(out, self._dim)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = SparsePolynomial.constant(1.0, self._dim)
        for _ in range(n):
            result = result * self
        return result

    def diff(self, axis: int) -> "SparsePolynomial":
        """Formal partial derivative with respect to variable ``axis``."""
        if not 0 <= axis < self._dim:
            raise IndexError(f"axis {axis} out of range for dim {self._dim}")
        out = {}
        for k, v in self._terms.items():
            if k[axis]:
                nk = list(k)
                nk[axis] -= 1
                out[tuple(nk)] = v * k[axis]
        return SparsePolynomial(out, self._dim)

    # evaluation -----------------------------------------------------------

    def __call__(self, x) -> np.ndarray | float:
        """Evaluate at a point (shape ``(dim,)``) or a batch (shape ``(N, dim)``)."""
        x = np.asarray(x, dtype=float)
        if x.ndim == 0 or (x.ndim == 1 and x.shape[0] == self._dim):
            scalar, pts = True, x.reshape(1, self._dim)
        elif x.ndim == 1 and self._dim == 1:
            scalar, pts = False, x[:, None]
        else:
            scalar, pts = False, x
        if pts.ndim != 2 or pts.shape[1] != self._dim:
            raise ValueError(f"points have {pts.shape[1]} coordinates, expected {self._dim}")
        if not self._terms:
            val = np.zeros(pts.shape[0])
        else:
            exps = np.array(list(self._terms), dtype=int)
            coefs = np.fromiter(self._terms.values(), float, len(self._terms))
            val = monomial_values(exps, pts) @ coefs
        return float(val[0]) if scalar else val

    # serialization --------------------------------------------------------

    def to_text(self) -> str:
        """One line per term: exponents then the coefficient (round-trip repr)."""
        return "\n".join(" ".join(str(e) for e in k) + " " + repr(v) for k, v in self._terms.items())

    @classmethod
    def from_text(cls, text: str, dim: int | None = None) -> "SparsePolynomial":
        terms: dict[MultiIndex, float] = {}
        for raw in text.strip().splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            index = tuple(int(f) for f in fields[:-1])
            if dim is None:
                dim = len(index)
            terms[index] = terms.get(index, 0.0) + float(fields[-1])
        if dim is None:
            raise ValueError("cannot infer dimension of an empty polynomial")
        return cls(terms, dim)


def monomial_values(exponents: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Matrix ``M[i, k] = prod_j points[i, j] ** exponents[k, j]``."""
    exponents = np.asarray(exponents, dtype=int)
    points = np.asarray(points, dtype=float)
    out = np.ones((points.shape[0], exponents.shape[0]))
    for j in range(points.shape[1]):
        col = exponents[:, j]
        top = int(col.max(initial=0))
        if top == 0:
            continue
        powers = np.ones((points.shape[0], top + 1))
        for p in range(1, top + 1):
            powers[:, p] = powers[:, p - 1] * points[:, j]
        out *= powers[:, col]
    return out


def monomials_up_to(dim: int, max_degree: int, min_degree: int = 1) -> list[SparsePolynomial]:
    """All monomials with ``min_degree <= |index| <= max_degree`` in graded lex order."""
    idx = [k for k in itertools.product(range(max_degree + 1), repeat=dim) if min_degree <= sum(k) <= max_degree]
    return [SparsePolynomial.monomial(k) for k in sorted(idx, key=monomial_key)]


class PolynomialVector:
    """A fixed list of polynomials evaluated together through a shared monomial basis."""

    def __init__(self, polys: Sequence[SparsePolynomial]):
        if not polys:
            raise ValueError("empty polynomial vector")
        dim = polys[0].dim
        if any(p.dim != dim for p in polys):
            raise ValueError("polynomials must share a dimension")
        self.polys = tuple(polys)
        self.dim = dim
        basis = sorted({k for p in polys for k in p.terms}, key=monomial_key)
        self._exponents = np.array(basis, dtype=int).reshape(len(basis), dim)
        pos = {k: i for i, k in enumerate(basis)}
        self._coef = np.zeros((len(basis), len(polys)))
        for j, p in enumerate(polys):
            for k, v in p.items():
                self._coef[pos[k], j] = v

    def __len__(self):
        return len(self.polys)

    def __call__(self, points) -> np.ndarray:
        """Values at ``points`` (shape ``(N, dim)``) as an ``(N, len(self))`` array."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return monomial_values(self._exponents, points) @ self._coef


# --------------------------------------------------------------------------
# generator and EM(c*) decomposition
# --------------------------------------------------------------------------


def generator_apply(
    drift: Sequence[SparsePolynomial],
    diffusion_cov: Sequence[Sequence[SparsePolynomial]],
    phi: SparsePolynomial,
) -> SparsePolynomial:
    """Backward diffusion operator ``L[phi] = f . grad(phi) + 1/2 tr(a hess(phi))``.

    ``diffusion_cov`` is the symmetric matrix ``a = rho Q rho^T``.
    """
    d = phi.dim
    if len(drift) != d or len(diffusion_cov) != d or any(len(row) != d for row in diffusion_cov):
        raise ValueError("drift/diffusion dimensions do not match the test function")
    out = SparsePolynomial.zero(d)
    grads = [phi.diff(i) for i in range(d)]
    for i in range(d):
        out = out + drift[i] * grads[i]
    for i in range(d):
        for j in range(d):
            if not diffusion_cov[i][j].is_zero():
                out = out + 0.5 * diffusion_cov[i][j] * grads[i].diff(j)
    return out


class SpanError(ValueError):
    """A polynomial is not in the span of ``{1, c}`` (EM(c*) assumption violated)."""

    def __init__(self, message: str, monomial: MultiIndex):
        super().__init__(message)
        self.monomial = monomial


@dataclass(frozen=True)
class CoefficientDecomposition:
    """Constant data of the projected filter equation.

    ``L[c] - 1/2 (h^T h) c = a0 + A0 c_ext``, ``1/2 h^T h = b0 + b_h . c_ext`` and
    ``h = lambda0 + lam^T c`` hold as polynomial identities.
    """

    a0: np.ndarray
    A0: np.ndarray
    b0: float
    b_h: np.ndarray
    lam: np.ndarray
    lambda0: np.ndarray
    extended: tuple[SparsePolynomial, ...]

    @property
    def m(self) -> int:
        return self.a0.shape[0]


def _coordinates(poly: SparsePolynomial, basis: Sequence[SparsePolynomial]) -> tuple[float, np.ndarray]:
    """Express ``poly`` as ``const + coeffs . basis``; raise SpanError if impossible."""
    const = poly.coefficient((0,) * poly.dim)
    rest = poly - const
    if rest.is_zero():
        return const, np.zeros(len(basis))
    monos = sorted({k for b in basis for k in b.terms} | set(rest.terms), key=monomial_key)
    pos = {k: i for i, k in enumerate(monos)}
    mat = np.zeros((len(monos), len(basis)))
    for j, b in enumerate(basis):
        for k, v in b.items():
            mat[pos[k], j] = v
    rhs = np.zeros(len(monos))
    for k, v in rest.items():
        rhs[pos[k]] = v
    coeffs, *_ = np.linalg.lstsq(mat, rhs, rcond=None)
    resid = rhs - mat @ coeffs
    bad = np.flatnonzero(np.abs(resid) > 1e-9 * max(1.0, np.abs(rhs).max()))
    if bad.size:
        raise SpanError(f"{rest} is not in the span of the statistics (monomial {monos[bad[0]]})", monos[bad[0]])
    coeffs[np.abs(coeffs) < ZERO_TOL] = 0.0
    return const, coeffs


def extend_statistics(stats: Sequence[SparsePolynomial], targets: Iterable[SparsePolynomial]) -> tuple[SparsePolynomial, ...]:
    """Append to ``stats`` the monomials of ``targets`` that are not already spanned."""
    stats = list(stats)
    d = stats[0].dim
    present = set()
    for s in stats:
        present |= set(s.terms)
    candidates = sorted({k for t in targets for k in t.terms if sum(k) > 0} - present, key=monomial_key)
    extra = []
    for k in candidates:
        mono = SparsePolynomial.monomial(k)
        try:
            _coordinates(mono, stats + extra)
        except SpanError:
            extra.append(mono)
    if extra and extra[0].dim != d:
        raise ValueError("dimension mismatch")
    return tuple(stats + extra)


def diffusion_covariance(
    diffusion: Sequence[Sequence[SparsePolynomial]], q_spec: np.ndarray
) -> list[list[SparsePolynomial]]:
    """Polynomial matrix ``rho Q rho^T``."""
    d = len(diffusion)
    dw = len(diffusion[0])
    q_spec = np.asarray(q_spec, dtype=float).reshape(dw, dw)
    dim = diffusion[0][0].dim
    out = [[SparsePolynomial.zero(dim) for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            acc = SparsePolynomial.zero(dim)
            for k in range(dw):
                for l in range(dw):
                    if q_spec[k, l] != 0.0:
                        acc = acc + q_spec[k, l] * diffusion[i][k] * diffusion[j][l]
            out[i][j] = acc
    return out


def build_decomposition(model, stats: Sequence[SparsePolynomial]) -> CoefficientDecomposition:
    """Coefficient data ``(a0, A0, b0, b_h, lambda0, lambda)`` for ``model`` and statistics ``stats``.

    The extended statistics are ``stats`` followed by every further monomial
    appearing in ``L[c]``, ``h^T h`` and ``(h^T h) c``, in graded lex order.
    """
    stats = list(stats)
    m = len(stats)
    cov = diffusion_covariance(model.diffusion, model.q_spec)
    hh = SparsePolynomial.zero(stats[0].dim)
    for h in model.obs:
        hh = hh + h * h

    lam = np.zeros((m, len(model.obs)))
    lambda0 = np.zeros(len(model.obs))
    for k, h in enumerate(model.obs):
        try:
            lambda0[k], lam[:, k] = _coordinates(h, stats)
        except SpanError as exc:
            raise SpanError(f"observation component {k} violates the EM(c*) assumption: {exc}", exc.monomial) from None

    lhs = [generator_apply(model.drift, cov, c) - 0.5 * hh * c for c in stats]
    extended = extend_statistics(stats, lhs + [hh])

    a0 = np.zeros(m)
    A0 = np.zeros((m, len(extended)))
    for i, poly in enumerate(lhs):
        a0[i], A0[i] = _coordinates(poly, extended)
    b0, b_h = _coordinates(0.5 * hh, extended)
    return CoefficientDecomposition(a0=a0, A0=A0, b0=float(b0), b_h=b_h, lam=lam, lambda0=lambda0, extended=extended)


def reconstruct(decomp: CoefficientDecomposition, index: int) -> SparsePolynomial:
    """``a0[index] + A0[index] . c_ext`` as a polynomial (for round-trip checks)."""
    dim = decomp.extended[0].dim
    out = SparsePolynomial.constant(decomp.a0[index], dim)
    for coeff, s in zip(decomp.A0[index], decomp.extended):
        if coeff:
            out = out + coeff * s
    return out
