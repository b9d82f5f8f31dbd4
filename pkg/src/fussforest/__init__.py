"""Exact combinatorics of complete binary trees and colored complete ternary trees.

The package provides four layers that double-check each other:

- exact counting formulas (binomials, k-ary Catalan and forest numbers,
  closed-form identity evaluators),
- exhaustive deterministic tree and forest generators,
- a weight-preserving bijection between the two tree families,
- a truncated power-series engine for the generating-function route.

``python -m fussforest verify --suite all`` runs every cross-check.
"""

from .exact import (
    Count,
    ExactnessError,
    Identity,
    Side,
    binomial,
    colored_ternary_count,
    forest_catalan,
    identity_side,
    k_catalan,
)
from .trees import (
    BINARY,
    COLORED_TERNARY,
    LEAF,
    BinaryTree,
    ColoredTernaryTree,
    ParseError,
    SizeCapError,
    ValidationReport,
    color_sum,
    enumerate_binary,
    enumerate_colored_ternary,
    enumerate_forests,
    internal_count,
    leaf,
    leaf_count,
    node,
    parse_binary,
    parse_forest,
    parse_ternary,
    serialize,
    serialize_forest,
    ternary_weight,
    to_dot,
    validate,
)
from .bijection import (
    BijectionError,
    TreePath,
    binarize,
    contract_l_paths,
    contract_r_paths,
    expand_colors,
    maximal_l_paths,
    maximal_r_paths,
    phi,
    phi_forest,
    phi_inverse,
    phi_inverse_forest,
)
from .series import (
    TruncatedSeries,
    colored_ternary_series,
    colored_tree_series,
    forest_expansion_series,
    fuss_catalan_power_coefficients,
    fuss_catalan_series,
    geometric_series_power,
    verify_quinary_forest_series,
)
from .verify import VerificationReport, run_suite
