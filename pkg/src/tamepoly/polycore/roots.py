"""Rational roots of one-variable polynomials over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import List, NamedTuple

from .poly import UniPoly, height, unipoly_gcd


class RationalRoots(NamedTuple):
    roots: List[Fraction]
    #: square-free nonconstant factor(s) carrying the roots outside Q
    residual: List[UniPoly]


def primitive_integer_coeffs(g: UniPoly) -> List[int]:
    """Coefficients of the primitive integer polynomial proportional to ``g``."""
    cs = [Fraction(c) for c in g.coeffs]
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if ints[-1] < 0:
        content = -content
    return [v // content for v in ints]


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def square_free_part(g: UniPoly) -> UniPoly:
    if g.degree <= 0:
        return g.monic()
    return (g // unipoly_gcd(g, g.derivative())).monic()


def _root_candidates(ints: List[int]) -> List[Fraction]:
    a0, an = ints[0], ints[-1]
    if len(ints) == 2:
        return [Fraction(-a0, an)]
    if len(ints) == 3:
        a, b, c = ints[2], ints[1], ints[0]
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        r = isqrt(disc)
        if r * r != disc:
            return []
        return [Fraction(-b + r, 2 * a), Fraction(-b - r, 2 * a)]
    cands = set()
    for p in _divisors(a0):
        for q in _divisors(an):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return list(cands)


def rational_roots(g: UniPoly) -> RationalRoots:
    """All rational roots of ``g`` plus the root-free square-free remainder.

    Candidates come from the rational-root theorem applied to the primitive
    integer form; each is confirmed by exact evaluation.

    >>> rational_roots(UniPoly([-1, 0, 1])).roots
    [Fraction(-1, 1), Fraction(1, 1)]
    """
    if g.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    sqf = square_free_part(g)
    roots: List[Fraction] = []
    rest = sqf
    if rest.degree >= 1 and rest.coeff(0) == 0:
        roots.append(Fraction(0))
        rest = rest // UniPoly.t()
    if rest.degree >= 1:
        ints = primitive_integer_coeffs(rest)
        for r in _root_candidates(ints):
            if r not in roots and rest(r) == 0:
                roots.append(r)
        for r in roots:
            if r != 0:
                rest = rest // UniPoly([-r, 1])
    residual = [rest.monic()] if rest.degree >= 1 else []
    return RationalRoots(sorted(roots), residual)


def smallest_height(values):
    """Deterministic pick: smallest height, then smallest value."""
    return min(values, key=lambda r: (height(r), r))
