"""Triangle / segment Newton-polygon shape ``a x^n + b y^m + (terms under the hypotenuse)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .polycore import BiPoly, format_rational


@dataclass(frozen=True)
class NewtonData:
    n: int  # exponent of the pure x-power
    m: int  # exponent of the pure y-power
    a: object
    b: object
    support: frozenset
    #: c_ij with i, j > 0
    mixed: Dict[Tuple[int, int], object] = field(default_factory=dict)
    #: remaining terms on the axes (lower pure powers, constant)
    lower: Dict[Tuple[int, int], object] = field(default_factory=dict)

    def leading_part(self) -> BiPoly:
        """Terms on the hypotenuse ``i*m + j*n == m*n``."""
        terms = {(self.n, 0): self.a, (0, self.m): self.b}
        for (i, j), c in {**self.mixed, **self.lower}.items():
            if i * self.m + j * self.n == self.m * self.n:
                terms[(i, j)] = c
        return BiPoly(terms)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "mixed": {f"{i},{j}": format_rational(c) for (i, j), c in sorted(self.mixed.items())},
        }


def newton_shape(p: BiPoly) -> Optional[NewtonData]:
    """Shape data when every term lies in the triangle spanned by ``x^n`` and ``y^m``.

    ``n`` and ``m`` are the largest pure powers of ``x`` and ``y``.
    """
    if p.is_constant():
        raise ValueError("newton_shape needs a nonconstant polynomial")
    xs = [i for (i, j) in p.support() if j == 0 and i > 0]
    ys = [j for (i, j) in p.support() if i == 0 and j > 0]
    if not xs or not ys:
        return None
    n, m = max(xs), max(ys)
    mixed, lower = {}, {}
    for (i, j), c in p.items():
        if (i, j) in ((n, 0), (0, m)):
            continue
        if i * m + j * n > m * n:
            return None
        (mixed if i > 0 and j > 0 else lower)[(i, j)] = c
    return NewtonData(n, m, p.coeff(n, 0), p.coeff(0, m), p.support(), mixed, lower)
