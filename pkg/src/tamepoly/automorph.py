"""Automorphisms of Q[x, y]: composition, recognition, factorization.

Maps act on polynomials by substitution, ``apply(phi, p) = p(phi.img_x,
phi.img_y)``, and ``compose(phi, psi)`` lets ``phi`` act first::

    apply(compose(phi, psi), p) == apply(psi, apply(phi, p))

Recognition follows the Jung-van der Kulk reduction: the component of higher
degree loses its leading form by subtracting ``mu * other**d`` until an
invertible affine map remains.  The recorded subtractions, read left to right,
are a word of elementary generators that recomposes to the input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .polycore import (
    BiPoly,
    UniPoly,
    as_rational,
    degree_form,
    format_poly,
    format_rational,
    format_unipoly,
    parse_poly,
)

X = BiPoly.x()
Y = BiPoly.y()


class NotAutomorphismError(ValueError):
    def __init__(self, verdict: "NotAutomorphism"):
        self.verdict = verdict
        super().__init__(f"not an automorphism ({verdict.reason}): {verdict.detail}")


@dataclass(frozen=True)
class Auto:
    """The polynomial map ``x -> img_x, y -> img_y``."""

    img_x: BiPoly
    img_y: BiPoly

    def __post_init__(self):
        object.__setattr__(self, "img_x", BiPoly.coerce(self.img_x))
        object.__setattr__(self, "img_y", BiPoly.coerce(self.img_y))

    def __call__(self, p: BiPoly) -> BiPoly:
        return apply(self, p)

    @property
    def degree(self):
        return max(self.img_x.degree, self.img_y.degree)

    def is_affine(self) -> bool:
        return self.img_x.degree <= 1 and self.img_y.degree <= 1

    def __str__(self) -> str:
        return format_auto(self)


IDENTITY = Auto(X, Y)


def apply(phi: Auto, p: BiPoly) -> BiPoly:
    """Substitute the images of ``phi`` into ``p``."""
    if phi.img_x == X and phi.img_y == Y:
        return p
    return p.subs(phi.img_x, phi.img_y)


def compose(*maps: Auto) -> Auto:
    """Compose left to right: the first map acts first on polynomials."""
    if not maps:
        return IDENTITY
    acc = maps[0]
    for psi in maps[1:]:
        acc = Auto(apply(psi, acc.img_x), apply(psi, acc.img_y))
    return acc


def jacobian(phi: Auto) -> BiPoly:
    f, g = phi.img_x, phi.img_y
    return f.diff(0) * g.diff(1) - f.diff(1) * g.diff(0)


def linear_part(phi: Auto) -> Tuple:
    """(a1, a2, b1, b2) read off the degree-one coefficients."""
    f, g = phi.img_x, phi.img_y
    return f.coeff(1, 0), f.coeff(0, 1), g.coeff(1, 0), g.coeff(0, 1)


# -- generators -----------------------------------------------------------


@dataclass(frozen=True)
class Linear:
    """x -> a1*x + a2*y, y -> b1*x + b2*y"""

    a1: object
    a2: object
    b1: object
    b2: object

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.det == 0:
            raise ValueError("singular linear generator")

    @property
    def det(self):
        return as_rational(self.a1 * self.b2 - self.a2 * self.b1)

    def to_auto(self) -> Auto:
        return Auto(BiPoly.linear(self.a1, self.a2), BiPoly.linear(self.b1, self.b2))

    def inverse(self) -> "Linear":
        d = Fraction(self.det)
        return Linear(self.b2 / d, -self.a2 / d, -self.b1 / d, self.a1 / d)

    def to_json(self) -> dict:
        return {"kind": "linear", "coeffs": [format_rational(c) for c in (self.a1, self.a2, self.b1, self.b2)], "poly": None}


@dataclass(frozen=True)
class AffineShift:
    """x -> x + c1, y -> y + c2"""

    c1: object
    c2: object

    def __post_init__(self):
        object.__setattr__(self, "c1", as_rational(self.c1))
        object.__setattr__(self, "c2", as_rational(self.c2))

    def to_auto(self) -> Auto:
        return Auto(BiPoly.linear(1, 0, self.c1), BiPoly.linear(0, 1, self.c2))

    def inverse(self) -> "AffineShift":
        return AffineShift(-self.c1, -self.c2)

    def to_json(self) -> dict:
        return {"kind": "shift", "coeffs": [format_rational(self.c1), format_rational(self.c2)], "poly": None}


@dataclass(frozen=True)
class TriangularX:
    """x -> a*x + f(y), y -> y"""

    f: UniPoly
    a: object = 1

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if not self.a:
            raise ValueError("triangular scale must be nonzero")

    def to_auto(self) -> Auto:
        return Auto(X.scale(self.a) + self.f.to_bipoly(1), Y)

    def inverse(self) -> "TriangularX":
        inv = Fraction(1) / Fraction(self.a)
        return TriangularX(self.f.scale(-inv), inv)

    def to_json(self) -> dict:
        return {"kind": "triangular-x", "coeffs": [format_rational(self.a)], "poly": format_unipoly(self.f, "y")}


@dataclass(frozen=True)
class TriangularY:
    """y -> b*y + f(x), x -> x"""

    f: UniPoly
    b: object = 1

    def __post_init__(self):
        object.__setattr__(self, "b", as_rational(self.b))
        if not self.b:
            raise ValueError("triangular scale must be nonzero")

    def to_auto(self) -> Auto:
        return Auto(X, Y.scale(self.b) + self.f.to_bipoly(0))

    def inverse(self) -> "TriangularY":
        inv = Fraction(1) / Fraction(self.b)
        return TriangularY(self.f.scale(-inv), inv)

    def to_json(self) -> dict:
        return {"kind": "triangular-y", "coeffs": [format_rational(self.b)], "poly": format_unipoly(self.f, "x")}


Generator = Union[Linear, AffineShift, TriangularX, TriangularY]


def _scale_vars(p: BiPoly, a, b) -> BiPoly:
    """``p(a*x, b*y)``"""
    if a == 1 and b == 1:
        return p
    return BiPoly({(i, j): c * a**i * b**j for (i, j), c in p.items()})


def _shear(p: BiPoly, which: str, k: int, lam) -> BiPoly:
    return p.shear(which, k, lam) if lam else p


def _apply_triangular(p: BiPoly, which: str, scale, f: UniPoly) -> BiPoly:
    # p(a*x + f(y), y) = q(x + f(y)/a, y) with q = p(a*x, y); the monomial shears commute
    p = _scale_vars(p, scale, 1) if which == "x" else _scale_vars(p, 1, scale)
    inv = Fraction(1) / Fraction(scale)
    for k, c in enumerate(f.coeffs):
        if c:
            p = _shear(p, which, k, c * inv)
    return p


def _apply_linear(p: BiPoly, a1, a2, b1, b2) -> BiPoly:
    """``p(a1*x + a2*y, b1*x + b2*y)`` through scalings and degree-one shears."""
    if a1 == 0:
        # p(X, Y) = p'(Y, X) with p' the swapped polynomial; now b1 != 0
        return _apply_linear(p.swap(), b1, b2, a1, a2)
    a1 = Fraction(a1)
    c, e = Fraction(b1) / a1, Fraction(a1 * b2 - a2 * b1) / a1
    # Y = c*X + e*y, so p(X, Y) = s(X, y) with s = p(x, c*x + e*y)
    s = _shear(_scale_vars(p, 1, e), "y", 1, c / e)
    return _shear(_scale_vars(s, a1, 1), "x", 1, Fraction(a2) / a1)


def apply_generator(g: Generator, p: BiPoly) -> BiPoly:
    """``apply(g.to_auto(), p)`` computed by binomial shears instead of substitution."""
    if isinstance(g, TriangularX):
        return _apply_triangular(p, "x", g.a, g.f)
    if isinstance(g, TriangularY):
        return _apply_triangular(p, "y", g.b, g.f)
    if isinstance(g, AffineShift):
        return _shear(_shear(p, "x", 0, g.c1), "y", 0, g.c2)
    if isinstance(g, Linear):
        return _apply_linear(p, g.a1, g.a2, g.b1, g.b2)
    return apply(g.to_auto(), p)


def generator_from_json(rec: dict) -> Generator:
    from .polycore import parse_unipoly

    kind = rec["kind"]
    cs = [Fraction(c) for c in rec.get("coeffs") or []]
    if kind == "linear":
        return Linear(*cs)
    if kind == "shift":
        return AffineShift(*cs)
    if kind == "triangular-x":
        return TriangularX(parse_unipoly(rec["poly"], "y"), cs[0])
    if kind == "triangular-y":
        return TriangularY(parse_unipoly(rec["poly"], "x"), cs[0])
    raise ValueError(f"unknown generator kind {kind!r}")


@dataclass(frozen=True)
class AutoWord:
    """Generators composed left to right (the first acts first)."""

    factors: Tuple[Generator, ...] = ()

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def evaluate(self) -> Auto:
        img_x, img_y = X, Y
        for g in self.factors:
            img_x, img_y = apply_generator(g, img_x), apply_generator(g, img_y)
        return Auto(img_x, img_y)

    def inverse(self) -> "AutoWord":
        return AutoWord(tuple(g.inverse() for g in reversed(self.factors)))

    def to_json(self) -> list:
        return [g.to_json() for g in self.factors]


@dataclass(frozen=True)
class NotAutomorphism:
    reason: str
    stage: int = 0
    detail: str = ""

    def to_json(self) -> dict:
        return {"rule": self.reason, "stage": self.stage, "detail": self.detail}


@dataclass(frozen=True)
class ReductionStep21:
    """``g_reduced - mu * g_other**d`` drops below ``deg g_reduced``."""

    mu: object
    d: int
    which: int  # 0: img_x was reduced, 1: img_y was reduced


def leading_reduction(g: BiPoly, other: BiPoly) -> Optional[Tuple[object, int]]:
    """The unique (mu, d) with ``deg(g - mu*other^d) < deg g``, if any."""
    dg, do = g.degree, other.degree
    if do < 1 or dg < do or dg % do:
        return None
    d = dg // do
    fg, fo = degree_form(g), degree_form(other) ** d
    (e, c), = list(fo.items())[:1]
    mu = as_rational(Fraction(fg.coeff(*e)) / c)
    if not mu or fo.scale(mu) != fg:
        return None
    return mu, d


def factor_jvdk(g1: BiPoly, g2: BiPoly) -> Union[AutoWord, NotAutomorphism]:
    """Factor ``(g1, g2)`` into elementary and affine generators.

    Returns the word, or a :class:`NotAutomorphism` naming the failing stage.
    """
    g1, g2 = BiPoly.coerce(g1), BiPoly.coerce(g2)
    jac = jacobian(Auto(g1, g2))
    if not jac.is_constant():
        return NotAutomorphism("jacobian-nonconstant", 0, f"jacobian = {format_poly(jac)}")
    if jac.is_zero():
        return NotAutomorphism("jacobian-zero", 0, "jacobian = 0")
    word: List[Generator] = []
    steps: List[ReductionStep21] = []
    stage = 0
    while not (g1.degree <= 1 and g2.degree <= 1):
        stage += 1
        if g1.degree >= g2.degree:
            red = leading_reduction(g1, g2)
            if red is None:
                return NotAutomorphism("no-reduction", stage, f"deg {g1.degree} vs {g2.degree}: leading forms do not match")
            mu, d = red
            word.append(Linear(1, mu, 0, 1) if d == 1 else TriangularX(UniPoly.monomial(d, mu)))
            g1 = g1 - (g2**d).scale(mu)
            steps.append(ReductionStep21(mu, d, 0))
        else:
            red = leading_reduction(g2, g1)
            if red is None:
                return NotAutomorphism("no-reduction", stage, f"deg {g2.degree} vs {g1.degree}: leading forms do not match")
            mu, d = red
            word.append(Linear(1, 0, mu, 1) if d == 1 else TriangularY(UniPoly.monomial(d, mu)))
            g2 = g2 - (g1**d).scale(mu)
            steps.append(ReductionStep21(mu, d, 1))
    a1, a2, b1, b2 = linear_part(Auto(g1, g2))
    if a1 * b2 - a2 * b1 == 0:
        return NotAutomorphism("degenerate-affine", stage + 1, "affine residue is not invertible")
    c1, c2 = g1.constant_term(), g2.constant_term()
    if c1 or c2:
        word.append(AffineShift(c1, c2))
    if (a1, a2, b1, b2) != (1, 0, 0, 1):
        word.append(Linear(a1, a2, b1, b2))
    return AutoWord(tuple(word))


def is_automorphism(phi: Auto) -> bool:
    return isinstance(factor_jvdk(phi.img_x, phi.img_y), AutoWord)


def factor(phi: Auto) -> AutoWord:
    """Like :func:`factor_jvdk` but raises :class:`NotAutomorphismError`."""
    res = factor_jvdk(phi.img_x, phi.img_y)
    if isinstance(res, NotAutomorphism):
        raise NotAutomorphismError(res)
    return res


def invert(phi: Auto) -> Auto:
    return factor(phi).inverse().evaluate()


def compose_word(phi: Auto, word: AutoWord) -> Auto:
    """``compose(phi, word.evaluate())`` one generator at a time.

    Much cheaper than substituting the evaluated word when the generators
    undo ``phi`` layer by layer, e.g. ``compose_word(phi, factor(phi).inverse())``.
    """
    img_x, img_y = phi.img_x, phi.img_y
    for g in word.factors:
        img_x, img_y = apply_generator(g, img_x), apply_generator(g, img_y)
    return Auto(img_x, img_y)


# -- classification --------------------------------------------------------

AFFINE, TUT, TLT, GENERAL = "Affine", "TUT", "TLT", "General"


def _upper_x(f: BiPoly) -> bool:
    # a*x + p(y) with a != 0
    return f.coeff(1, 0) != 0 and all(e == (1, 0) or e[0] == 0 for e in f.support())


def shape_class(phi: Auto) -> str:
    """Most specific of Affine / TUT / TLT / General, by shape alone."""
    f, g = phi.img_x, phi.img_y
    if f.degree <= 1 and g.degree <= 1:
        return AFFINE
    if _upper_x(f) and g.degree <= 1 and g.coeff(0, 1) != 0:
        return TUT
    if f.degree <= 1 and f.coeff(1, 0) != 0 and _upper_x(g.swap()):
        return TLT
    return GENERAL


def classify(phi: Auto, verify: bool = True) -> str:
    """Class of an automorphism; raises :class:`NotAutomorphismError` if ``verify``."""
    if verify:
        factor(phi)
    return shape_class(phi)


# -- text format -----------------------------------------------------------

_ARROW = re.compile(r"^\s*([xy])\s*->\s*(.*)$", re.S)


def parse_auto(text: str) -> Auto:
    """Read ``x -> <poly>; y -> <poly>`` or the bare ``<poly>; <poly>``."""
    parts = text.split(";")
    if len(parts) != 2:
        raise ValueError("automorphism text needs exactly one ';'")
    imgs = {}
    for slot, part in zip("xy", parts):
        m = _ARROW.match(part)
        if m:
            if m.group(1) in imgs:
                raise ValueError(f"image of {m.group(1)} given twice")
            imgs[m.group(1)] = m.group(2)
        else:
            imgs.setdefault(slot, part)
    return Auto(parse_poly(imgs["x"]), parse_poly(imgs["y"]))


def format_auto(phi: Auto) -> str:
    return f"x -> {format_poly(phi.img_x)}; y -> {format_poly(phi.img_y)}"


def auto_to_json(phi: Auto) -> dict:
    return {"x": format_poly(phi.img_x), "y": format_poly(phi.img_y)}


def auto_from_json(rec: dict) -> Auto:
    return Auto(parse_poly(rec["x"]), parse_poly(rec["y"]))
