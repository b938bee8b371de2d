"""Exact conic-bundle models of birational involutions of the real plane."""

from ._core import (
    PolyParseError,
    __version__,
    classify,
    compare,
    cremona_apply,
    cremona_base_points,
    cremona_self_check,
    dejonquieres,
    family_demo,
    invariants,
    parse_poly,
    validate,
)

__all__ = [
    "PolyParseError",
    "__version__",
    "classify",
    "compare",
    "cremona_apply",
    "cremona_base_points",
    "cremona_self_check",
    "dejonquieres",
    "family_demo",
    "invariants",
    "parse_poly",
    "validate",
]
