"""Gauss rules and sparse grids."""

from apfilter.quadrature.rules import (
    MAX_LEVEL,
    Family,
    Rule1D,
    gauss_chebyshev,
    gauss_hermite_1d,
    gauss_patterson_1d,
    level_size,
    patterson_degree,
    rule_at_level,
)
from apfilter.quadrature.sparse import Domain, QuadratureGrid, from_rule, prune, smolyak, tensor_product

__all__ = [
    "MAX_LEVEL",
    "Domain",
    "Family",
    "QuadratureGrid",
    "Rule1D",
    "from_rule",
    "gauss_chebyshev",
    "gauss_hermite_1d",
    "gauss_patterson_1d",
    "level_size",
    "patterson_degree",
    "prune",
    "rule_at_level",
    "smolyak",
    "tensor_product",
]
