"""Exact tools for polynomial automorphisms of the plane and equivalence of polynomials under them."""

from .automorph import Auto, apply, compose, factor, invert, parse_auto
from .canon import canonical_model, equivalent, is_coordinate
from .polycore import BiPoly, UniPoly, parse_poly

__all__ = [
    "Auto",
    "BiPoly",
    "UniPoly",
    "apply",
    "canonical_model",
    "compose",
    "equivalent",
    "factor",
    "invert",
    "is_coordinate",
    "parse_auto",
    "parse_poly",
]
