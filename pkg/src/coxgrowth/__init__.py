"""Exact growth series, certified growth rates and simplex volume classes
for Coxeter systems."""

from .classify import IrreducibleType, classify_irreducible, exponents, is_affine, is_spherical
from .compare import Embedding, dominates, extensions, minimal_rate
from .coxfile import parse_cox, serialize_cox
from .graph import (
    INF,
    CanonicalForm,
    CoxeterGraph,
    canonical_form,
    connected_components,
    from_linear_symbol,
    induced_subgraph,
    is_isomorphic,
    validate,
    y_shape,
)
from .growth import (
    GrowthRate,
    GrowthSeries,
    finite_subsets,
    growth_rate,
    growth_series,
    series_coeffs,
    steinberg,
)
from .oracle import bfs_counts, group_order, tits_representation
from .poly import IntPoly, RatFunc, RootInterval, bracket, bracket_product, smallest_positive_root
from .replay import replay
from .simplex import VolumeClass, gram, ideal_link_partitions, signature, simplex_class

__version__ = "0.1.0"

__all__ = [
    "INF",
    "CanonicalForm",
    "CoxeterGraph",
    "Embedding",
    "GrowthRate",
    "GrowthSeries",
    "IntPoly",
    "IrreducibleType",
    "RatFunc",
    "RootInterval",
    "VolumeClass",
    "bfs_counts",
    "bracket",
    "bracket_product",
    "canonical_form",
    "classify_irreducible",
    "connected_components",
    "dominates",
    "exponents",
    "extensions",
    "finite_subsets",
    "from_linear_symbol",
    "gram",
    "group_order",
    "growth_rate",
    "growth_series",
    "ideal_link_partitions",
    "induced_subgraph",
    "is_affine",
    "is_isomorphic",
    "is_spherical",
    "minimal_rate",
    "parse_cox",
    "replay",
    "serialize_cox",
    "series_coeffs",
    "signature",
    "simplex_class",
    "smallest_positive_root",
    "steinberg",
    "tits_representation",
    "validate",
    "y_shape",
]
