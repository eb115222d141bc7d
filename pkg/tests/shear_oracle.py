"""Exhaustive search for degree-lowering shears on a bounded grid.

Independent of the cancellation-system solver: it tries every integer linear
map with entries in [-3, 3], every exponent 2 <= k <= 5 and every rational
lambda of height <= 20, on both sides.  The only pruning is the elementary
fact that ``y -> y + lam*x^k`` leaves the coefficient of ``x^a y^b`` unchanged
when ``a < k``.
"""

from fractions import Fraction
from itertools import product
from math import comb, gcd

from tamepoly.automorph import Auto, apply
from tamepoly.polycore import BiPoly


def grid(h=20):
    out = set()
    for a in range(-h, h + 1):
        for b in range(1, h + 1):
            if a and gcd(a, b) == 1:
                out.add(Fraction(a, b))
    return sorted(out)


GRID = grid()
LINEAR = [m for m in product(range(-3, 4), repeat=4) if m[0] * m[3] - m[1] * m[2]]


def _subst(terms, a1, a2, b1, b2):
    """p(a1 x + a2 y, b1 x + b2 y) as a dict, by direct binomial expansion."""
    out = {}
    for (i, j), c in terms.items():
        for r in range(i + 1):
            cr = comb(i, r) * a1 ** r * a2 ** (i - r)
            if not cr:
                continue
            for s in range(j + 1):
                cs = comb(j, s) * b1 ** s * b2 ** (j - s)
                if cs:
                    key = (r + s, i + j - r - s)
                    out[key] = out.get(key, 0) + c * cr * cs
    return {k: v for k, v in out.items() if v}


def _lambda_coefficients(terms, d, k):
    """Coefficients of monomials of degree >= d after ``y -> y + lam*x^k``, as lists in lam."""
    out = {}
    for (i, j), c in terms.items():
        for r in range(j + 1):
            e = (i + k * r, j - r)
            if e[0] + e[1] >= d:
                row = out.setdefault(e, {})
                row[r] = row.get(r, 0) + c * comb(j, r)
    polys = []
    for row in out.values():
        coeffs = [row.get(r, 0) for r in range(max(row) + 1)]
        if any(coeffs):
            polys.append(coeffs)
    return polys


def _integer_row(coeffs):
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in coeffs]


def _vanishes(row, lam):
    # sum c_r a^r b^(n-r) == 0 with lam = a/b
    a, b, n = lam.numerator, lam.denominator, len(row) - 1
    return sum(c * a ** r * b ** (n - r) for r, c in enumerate(row) if c) == 0


def brute_force_reducing_shear(p: BiPoly):
    """A (linear, side, k, lam) that lowers deg p, or None."""
    d = p.degree
    if d < 2:
        return None
    base = {e: Fraction(c) for e, c in p.items()}
    for m in LINEAR:
        q = _subst(base, *m)
        for side in ("y", "x"):
            t = q if side == "y" else {(j, i): c for (i, j), c in q.items()}
            for k in range(2, 6):
                # coefficients of x^a y^(d-a), a < k, cannot change
                if any(t.get((a, d - a), 0) for a in range(min(k, d + 1))):
                    continue
                rows = [_integer_row(c) for c in _lambda_coefficients(t, d, k)]
                rows.sort(key=lambda r: sum(1 for c in r if c))
                for lam in GRID:
                    if all(_vanishes(r, lam) for r in rows):
                        return m, side, k, lam
    return None


def lowered(p: BiPoly, found) -> BiPoly:
    """Apply a brute-force witness and return the image (for double checking)."""
    (a1, a2, b1, b2), side, k, lam = found
    x, y = BiPoly.x(), BiPoly.y()
    lin = Auto(BiPoly.linear(a1, a2), BiPoly.linear(b1, b2))
    q = apply(lin, p)
    shear = Auto(x, y + BiPoly.monomial(k, 0, lam)) if side == "y" else Auto(x + BiPoly.monomial(0, k, lam), y)
    return apply(shear, q)
