"""Cyclic descent extensions on skew standard Young tableaux."""

from .errors import DomainError, InternalError, NotExtendable, ParseError, ResourceLimitError
from .shapes import (
    Composition,
    CyclicComposition,
    Partition,
    SkewShape,
    SubsetOfN,
    all_skew_shapes,
    ccomp_of_subset,
    classify_shape,
    comp_of_subset,
    direct_sum,
    format_shape,
    hook_sum_shape,
    parse_shape,
    ribbon_shape,
    straight_shape,
    strip_shape,
)
from .tableaux import StandardTableau, count_syt, enumerate_syt, promotion
from .symfunc import SchurVector, affine_ribbon_schur, hall_inner, ribbon_schur, skew_schur
from .cyclic import (
    CyclicExtension,
    FiberTable,
    build_extension,
    des_fibers,
    fiber_table_formula,
    fiber_table_inner,
    gw_invariant,
    validate_extension,
)

__all__ = [
    "DomainError",
    "InternalError",
    "NotExtendable",
    "ParseError",
    "ResourceLimitError",
    "Composition",
    "CyclicComposition",
    "Partition",
    "SkewShape",
    "SubsetOfN",
    "all_skew_shapes",
    "ccomp_of_subset",
    "classify_shape",
    "comp_of_subset",
    "direct_sum",
    "format_shape",
    "hook_sum_shape",
    "parse_shape",
    "ribbon_shape",
    "straight_shape",
    "strip_shape",
    "StandardTableau",
    "count_syt",
    "enumerate_syt",
    "promotion",
    "SchurVector",
    "affine_ribbon_schur",
    "hall_inner",
    "ribbon_schur",
    "skew_schur",
    "CyclicExtension",
    "FiberTable",
    "build_extension",
    "des_fibers",
    "fiber_table_formula",
    "fiber_table_inner",
    "gw_invariant",
    "validate_extension",
]
