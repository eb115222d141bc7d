from .parse import PolySyntaxError, format_poly, format_unipoly, parse_poly, parse_unipoly
from .poly import (
    MINUS_INFINITY,
    BiPoly,
    UniPoly,
    as_rational,
    degree_form,
    format_rational,
    gcd_many,
    height,
    linear_power_root,
    proper_power_root,
    unipoly_gcd,
)
from .roots import RationalRoots, rational_roots, square_free_part

__all__ = [
    "MINUS_INFINITY",
    "BiPoly",
    "UniPoly",
    "PolySyntaxError",
    "RationalRoots",
    "as_rational",
    "degree_form",
    "format_poly",
    "format_rational",
    "format_unipoly",
    "gcd_many",
    "height",
    "linear_power_root",
    "parse_poly",
    "parse_unipoly",
    "proper_power_root",
    "rational_roots",
    "square_free_part",
    "unipoly_gcd",
]
