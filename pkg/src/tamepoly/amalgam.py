"""Alternating normal forms for automorphisms and for words in the shears E1/E2.

An automorphism is written ``compose(head, F_1, ..., F_n)`` with ``head``
affine and the ``F_i`` alternating between the two twisted triangular sides:

* TUT side: ``y`` goes to an affine polynomial, ``x`` to a nonlinear one;
* TLT side: the mirror image.

The factors come from peeling degree-lowering triangular steps off the left of
the map.  Every factor except the last is a pure shear ``x -> x + f(y)`` (or
``y -> y + g(x)``) with no constant term; the affine remainder is absorbed on
the right of the last factor, and the only affine content on the left is the
linear move forced when both images start with the same degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .automorph import (
    IDENTITY,
    Auto,
    NotAutomorphismError,
    auto_to_json,
    compose,
    factor_jvdk,
    leading_reduction,
)
from .polycore import BiPoly, as_rational, format_rational

TUT, TLT, AFFINE, GENERAL = "TUT", "TLT", "Affine", "General"


def side_of(phi: Auto) -> str:
    """Twisted side of a map: which image is affine."""
    fx, fy = phi.img_x.degree <= 1, phi.img_y.degree <= 1
    if fx and fy:
        return AFFINE
    if fy:
        return TUT
    if fx:
        return TLT
    return GENERAL


@dataclass(frozen=True)
class AmalgamForm:
    affine_head: Auto
    factors: Tuple[Auto, ...] = ()

    @property
    def sides(self) -> Tuple[str, ...]:
        return tuple(side_of(f) for f in self.factors)

    def evaluate(self) -> Auto:
        return compose(self.affine_head, *self.factors)

    def check(self) -> None:
        """Raise if alternation or the no-affine-factor rule is broken."""
        if side_of(self.affine_head) != AFFINE:
            raise AssertionError("head is not affine")
        sides = self.sides
        for s in sides:
            if s not in (TUT, TLT):
                raise AssertionError(f"factor on side {s}")
        for a, b in zip(sides, sides[1:]):
            if a == b:
                raise AssertionError("adjacent factors on the same side")

    def to_json(self) -> dict:
        return {
            "head": auto_to_json(self.affine_head),
            "factors": [{"side": s, "map": auto_to_json(f)} for s, f in zip(self.sides, self.factors)],
        }


def _peel_block(g: BiPoly, other: BiPoly) -> Tuple[BiPoly, BiPoly]:
    """Reduce ``g`` by powers of ``other`` while it is not below it.

    Returns ``(f, rest)`` with ``g == f(other) + rest`` where ``f`` is a
    polynomial in one variable given as a BiPoly in ``y``.
    """
    f = BiPoly()
    while g.degree >= other.degree and g.degree >= 2:
        red = leading_reduction(g, other)
        if red is None:
            raise NotAutomorphismError(factor_jvdk(g, other))
        mu, d = red
        f = f + BiPoly.monomial(0, d, mu)
        g = g - (other**d).scale(mu)
    return f, g


def normal_form(phi: Auto) -> AmalgamForm:
    """Alternating factorization ``phi == compose(head, *factors)``.

    >>> from tamepoly.automorph import parse_auto
    >>> nf = normal_form(parse_auto("x + y^2; y"))
    >>> nf.sides
    ('TUT',)
    """
    verdict = factor_jvdk(phi.img_x, phi.img_y)
    if not hasattr(verdict, "factors"):
        raise NotAutomorphismError(verdict)
    g1, g2 = phi.img_x, phi.img_y
    x, y = BiPoly.x(), BiPoly.y()
    head = IDENTITY
    if g1.degree == g2.degree and g1.degree >= 2:
        # equal degrees: the linear move g1 - mu*g2 comes first (x side by convention)
        mu, _ = leading_reduction(g1, g2)
        head = Auto(x + y.scale(mu), y)
        g1 = g1 - g2.scale(mu)
    blocks: List[Auto] = []
    while g1.degree >= 2 or g2.degree >= 2:
        if g1.degree > g2.degree:
            f, g1 = _peel_block(g1, g2)
            blocks.append(Auto(x + f, y))
        else:
            f, g2 = _peel_block(g2, g1)
            blocks.append(Auto(x, y + f.swap()))
    residue = Auto(g1, g2)
    if not blocks:
        return AmalgamForm(compose(head, residue), ())
    blocks[-1] = compose(blocks[-1], residue)
    form = AmalgamForm(head, tuple(blocks))
    if form.evaluate() != phi:
        raise AssertionError("normal form does not recompose")
    return form


# -- words in E1 / E2 -------------------------------------------------------------


@dataclass(frozen=True)
class E1:
    """(u, v) -> (u + a*v^k, v)"""

    a: object
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if not self.a or self.k < 2:
            raise ValueError("E1 needs a != 0 and k >= 2")

    def inverse(self) -> "E1":
        return E1(-self.a, self.k)

    def to_auto(self) -> Auto:
        return Auto(BiPoly.x() + BiPoly.monomial(0, self.k, self.a), BiPoly.y())


@dataclass(frozen=True)
class E2:
    """(u, v) -> (u, v + a*u^k)"""

    a: object
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if not self.a or self.k < 2:
            raise ValueError("E2 needs a != 0 and k >= 2")

    def inverse(self) -> "E2":
        return E2(-self.a, self.k)

    def to_auto(self) -> Auto:
        return Auto(BiPoly.x(), BiPoly.y() + BiPoly.monomial(self.k, 0, self.a))


@dataclass(frozen=True)
class ShearWord:
    letters: Tuple = ()

    def inverse(self) -> "ShearWord":
        return ShearWord(tuple(m.inverse() for m in reversed(self.letters)))

    def __add__(self, other: "ShearWord") -> "ShearWord":
        return ShearWord(self.letters + other.letters)

    def evaluate(self) -> Auto:
        """The pair reached from ``(x, y)`` by applying the letters in order."""
        out = IDENTITY
        for m in self.letters:
            out = compose(m.to_auto(), out)
        return out


def parse_shear_word(text: str) -> ShearWord:
    """One letter per line, ``E1 <a> <k>`` or ``E2 <a> <k>``; ``#`` starts a comment."""
    letters = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("E1", "E2"):
            raise ValueError(f"line {lineno}: expected 'E1 <a> <k>' or 'E2 <a> <k>', got {raw.strip()!r}")
        try:
            a = Fraction(parts[1])
            k = int(parts[2])
        except ValueError:
            raise ValueError(f"line {lineno}: bad number in {raw.strip()!r}") from None
        try:
            letters.append((E1 if parts[0] == "E1" else E2)(a, k))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return ShearWord(tuple(letters))


@dataclass(frozen=True)
class BlockForm:
    """Alternating blocks ``(kind, {k: coefficient})``; empty means the identity."""

    blocks: Tuple[Tuple[str, Tuple[Tuple[int, object], ...]], ...] = ()

    def is_identity(self) -> bool:
        return not self.blocks

    def to_word(self) -> ShearWord:
        cls = {"E1": E1, "E2": E2}
        return ShearWord(tuple(cls[kind](a, k) for kind, items in self.blocks for k, a in items))

    def evaluate(self) -> Auto:
        return self.to_word().evaluate()

    def to_json(self) -> list:
        return [
            {"kind": kind, "coeffs": {str(k): format_rational(a) for k, a in items}}
            for kind, items in self.blocks
        ]


def e1e2_normal_form(w: ShearWord | Sequence) -> BlockForm:
    """Merge same-kind neighbours, drop identity blocks, repeat until stable.

    >>> e1e2_normal_form([E1(1, 2), E1(-1, 2)]).is_identity()
    True
    """
    letters = w.letters if isinstance(w, ShearWord) else tuple(w)
    stack: List[Tuple[str, Dict[int, object]]] = []
    for m in letters:
        kind = type(m).__name__
        if stack and stack[-1][0] == kind:
            block = stack[-1][1]
            block[m.k] = block.get(m.k, 0) + m.a
            if not block[m.k]:
                del block[m.k]
            if not block:
                stack.pop()
        else:
            stack.append((kind, {m.k: m.a}))
    return BlockForm(tuple((kind, tuple(sorted((k, as_rational(a)) for k, a in blk.items()))) for kind, blk in stack))
