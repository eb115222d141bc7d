"""Screening for polynomials whose zero fiber may be an irreducible simply connected curve.

Such a polynomial is equivalent to ``x^k - y^l`` with ``gcd(k, l) = 1``; its
Newton polygon is a triangle or a segment, ``max(k, l) <= deg p`` and one of
``k, l`` divides ``deg p``.  :func:`zl_screen` checks these conditions by
inspection.  :func:`zl_decide` uses a polynomial parametrization of the fiber
and peak reduction of the pair ``(u, v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple, Union

from .newton import NewtonData, newton_shape
from .peakred import ETWord, PolyPair, reduce_pair
from .polycore import BiPoly, UniPoly, format_poly, format_rational, format_unipoly, parse_unipoly
from .polycore.poly import proper_power_root

__all__ = [
    "Candidates",
    "DegenerateBranch",
    "EquivalentToStandard",
    "FiberError",
    "NewtonData",
    "Parametrization",
    "RuledOut",
    "ZLUnknown",
    "newton_shape",
    "zl_decide",
    "zl_screen",
]


@dataclass(frozen=True)
class RuledOut:
    reason: str  # shape, max-bound, divisibility, coprime, degenerate-power
    detail: str = ""

    def to_json(self) -> dict:
        return {"reason": self.reason, "detail": self.detail}


@dataclass(frozen=True)
class Candidates:
    """Coprime ``(k, l)`` with ``k >= l``; ``orientation`` maps a variable to its exponent."""

    pairs: Tuple[Tuple[int, int], ...]
    orientation: Tuple[Tuple[str, int], ...] = ()
    note: str = ""

    def to_json(self) -> dict:
        out = {"pairs": [list(p) for p in self.pairs], "orientation": dict(self.orientation)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class DegenerateBranch:
    """The weighted leading part is ``c * base^exponent``; the screen cannot decide."""

    base: BiPoly
    exponent: int
    scale: object = 1

    def to_json(self) -> dict:
        return {"base": format_poly(self.base), "exponent": self.exponent, "scale": format_rational(self.scale)}


ZLScreenResult = Union[RuledOut, Candidates, DegenerateBranch]


def _weighted_leading(shape: NewtonData) -> BiPoly:
    return shape.leading_part()


def zl_screen(p: BiPoly) -> ZLScreenResult:
    """Inspect the Newton shape of ``p``.

    >>> from tamepoly.polycore import parse_poly
    >>> zl_screen(parse_poly("x^2 - y^3")).pairs
    ((3, 2),)
    """
    if p.is_constant():
        raise ValueError("zl_screen needs a nonconstant polynomial")
    D = p.degree
    if D == 1:
        return Candidates(((1, 1),), note="linear")
    shape = newton_shape(p)
    if shape is None:
        return RuledOut("shape", "support is not under the segment joining the pure powers")
    n, m = shape.n, shape.m
    orient = (("x", n), ("y", m))
    if n % m and m % n:
        k, l = max(n, m), min(n, m)
        if k > D:
            return RuledOut("max-bound", f"max({k}, {l}) > deg p = {D}")
        if D % k and D % l:
            return RuledOut("divisibility", f"neither {k} nor {l} divides deg p = {D}")
        if gcd(k, l) != 1:
            return RuledOut("coprime", f"gcd({k}, {l}) = {gcd(k, l)}")
        return Candidates(((k, l),), orient)
    if min(n, m) == 1:
        # a*x^n + b*y + (pure x-powers): nothing fits under the segment, p is elementary
        return Candidates(((1, 1),), orient, note="coordinate")
    lead = _weighted_leading(shape)
    root = proper_power_root(lead)
    if root is None:
        return RuledOut("degenerate-power", f"leading part {format_poly(lead)} is not a proper power")
    c, g, e = root
    if BiPoly.const(c) * g**e != lead:
        raise AssertionError("proper power witness failed to expand")
    return DegenerateBranch(g, e, c)


# -- decision with a parametrization ----------------------------------------------


@dataclass(frozen=True)
class Parametrization:
    u: UniPoly
    v: UniPoly

    @classmethod
    def parse(cls, text: str) -> "Parametrization":
        parts = text.split(";")
        if len(parts) != 2:
            raise ValueError("parametrization needs the form '<u>; <v>'")
        return cls(parse_unipoly(parts[0]), parse_unipoly(parts[1]))

    def pair(self) -> PolyPair:
        return PolyPair(self.u, self.v)

    def __str__(self) -> str:
        return f"{format_unipoly(self.u)}; {format_unipoly(self.v)}"


class FiberError(ValueError):
    """The parametrization does not lie on ``p = 0``."""

    def __init__(self, residual: UniPoly):
        self.residual = residual
        super().__init__(f"p(u(t), v(t)) = {format_unipoly(residual)}, not 0")


@dataclass(frozen=True)
class EquivalentToStandard:
    k: int
    l: int
    minimal: PolyPair
    trace: ETWord
    normalized: PolyPair

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "minimal": [format_unipoly(self.minimal.u), format_unipoly(self.minimal.v)],
            "normalized": [format_unipoly(self.normalized.u), format_unipoly(self.normalized.v)],
            "trace": self.trace.to_json(),
        }


@dataclass(frozen=True)
class ZLUnknown:
    reason: str
    minimal: Optional[PolyPair] = None

    def to_json(self) -> dict:
        out = {"reason": self.reason}
        if self.minimal is not None:
            out["minimal"] = [format_unipoly(self.minimal.u), format_unipoly(self.minimal.v)]
        return out


def _is_monomial(w: UniPoly) -> bool:
    return bool(w) and all(c == 0 for c in w.coeffs[:-1])


def _normalize_minimal(u: UniPoly, v: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Shift ``t``, translate the plane and clear the lower slot from the higher one.

    These moves keep the curve up to an automorphism; a monomial pair survives
    them only if it was one to begin with.
    """
    lo, hi = (u, v) if u.degree < v.degree else (v, u)
    b = lo.degree
    beta = -Fraction(lo.coeff(b - 1)) / (b * Fraction(lo.lc()))
    shift = UniPoly([beta, 1])
    lo, hi = lo.compose(shift), hi.compose(shift)
    # hi -> hi - g(lo): peel every exponent that is a multiple of deg lo, top down
    for j in range(int(hi.degree) // b * b, b - 1, -b):
        c = hi.coeff(j)
        if c:
            hi = hi - (lo ** (j // b)).scale(Fraction(c) / Fraction(lo.lc()) ** (j // b))
    lo = lo - UniPoly([lo.coeff(0)])
    hi = hi - UniPoly([hi.coeff(0)])
    return (lo, hi) if u.degree < v.degree else (hi, lo)


def zl_decide(p: BiPoly, par: Parametrization) -> Union[EquivalentToStandard, ZLUnknown]:
    """Certify ``p ~ x^k - y^l`` from a parametrization of ``p = 0``.

    Raises :class:`FiberError` when ``p(u, v) != 0``.
    """
    residual = p.eval_uni(par.u, par.v)
    if residual:
        raise FiberError(residual)
    minimal, trace = reduce_pair(par.pair())
    u, v = minimal
    du, dv = u.degree, v.degree
    if max(du, dv) < 1:
        return ZLUnknown("constant parametrization", minimal)
    if min(du, dv) < 1:
        if max(du, dv) == 1:
            return EquivalentToStandard(1, 1, minimal, trace, minimal)
        return ZLUnknown("one slot constant, other of degree >= 2", minimal)
    nu, nv = _normalize_minimal(u, v)
    if not (_is_monomial(nu) and _is_monomial(nv)):
        return ZLUnknown("minimal pair is not monomial", minimal)
    # x = t^l, y = t^k satisfies x^k = y^l
    k, l = nv.degree, nu.degree
    if gcd(k, l) != 1:
        return ZLUnknown(f"exponents {l}, {k} are not coprime", minimal)
    return EquivalentToStandard(k, l, minimal, trace, PolyPair(nu, nv))
