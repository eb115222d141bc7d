"""Random tame maps, pairs and shear words for tests and the ``--seed`` flag."""

from __future__ import annotations

import random
from typing import List

from .amalgam import E1, E2, BlockForm, ShearWord
from .automorph import AffineShift, Auto, AutoWord, Linear, TriangularX, TriangularY
from .peakred import ET1, ET2, ET3, PolyPair
from .polycore import BiPoly, UniPoly


def _nonzero(rng: random.Random, h: int) -> int:
    return rng.choice([i for i in range(-h, h + 1) if i])


def random_linear(rng: random.Random, h: int = 3) -> Linear:
    while True:
        a = [rng.randint(-h, h) for _ in range(4)]
        if a[0] * a[3] - a[1] * a[2]:
            return Linear(*a)


def random_unipoly(rng: random.Random, degree: int, h: int = 3) -> UniPoly:
    return UniPoly([rng.randint(-h, h) for _ in range(degree)] + [_nonzero(rng, h)])


def random_word(rng: random.Random, length: int = 5, kmax: int = 4, h: int = 3, min_length: int = 1) -> AutoWord:
    """Word of linear maps, translations and triangular shears with integer coefficients."""
    gens = []
    for _ in range(rng.randint(min_length, length)):
        kind = rng.choice("LAXY")
        if kind == "L":
            gens.append(random_linear(rng, h))
        elif kind == "A":
            gens.append(AffineShift(rng.randint(-h, h), rng.randint(-h, h)))
        else:
            f = random_unipoly(rng, rng.randint(2, kmax), h)
            gens.append(TriangularX(f, 1) if kind == "X" else TriangularY(f, 1))
    return AutoWord(tuple(gens))


def random_auto(rng: random.Random, length: int = 5, kmax: int = 4, h: int = 3) -> Auto:
    return random_word(rng, length, kmax, h).evaluate()


def random_poly(rng: random.Random, degree: int, h: int = 3, density: float = 0.5) -> BiPoly:
    """Polynomial of total degree exactly ``degree``."""
    while True:
        terms = {}
        for i in range(degree + 1):
            for j in range(degree + 1 - i):
                if rng.random() < density:
                    c = rng.randint(-h, h)
                    if c:
                        terms[(i, j)] = c
        p = BiPoly(terms)
        if p.degree == degree:
            return p


def random_non_automorphism(rng: random.Random, h: int = 3) -> Auto:
    """A pair of polynomials that is not an automorphism.

    Half of the samples compose an automorphism with a map of nonconstant
    Jacobian; the rest are random pairs of degree at least two.
    """
    from .automorph import jacobian

    while True:
        if rng.random() < 0.5:
            bad = rng.choice([
                Auto(BiPoly.x(), BiPoly.monomial(1, 1, 1)),
                Auto(BiPoly.monomial(rng.randint(2, 3), 0, 1), BiPoly.y()),
                Auto(BiPoly.x() + BiPoly.monomial(0, 2, 1), BiPoly.y() + BiPoly.monomial(2, 0, 1)),
            ])
            from .automorph import compose

            phi = compose(bad, random_auto(rng, 3, 3, h))
        else:
            phi = Auto(random_poly(rng, rng.randint(2, 4), h), random_poly(rng, rng.randint(2, 4), h))
        if not jacobian(phi).is_constant() or rng.random() < 0.5:
            return phi


def random_pair(rng: random.Random, degree: int = 4, h: int = 3) -> PolyPair:
    u = random_unipoly(rng, rng.randint(1, degree), h)
    v = random_unipoly(rng, rng.randint(1, degree), h)
    return PolyPair(u, v)


def random_et_word(rng: random.Random, length: int = 6, kmax: int = 3, h: int = 3) -> List:
    moves = []
    for _ in range(rng.randint(1, length)):
        kind = rng.choice(("ET1", "ET2", "ET3"))
        if kind == "ET1":
            moves.append(ET1(_nonzero(rng, h), rng.randint(2, kmax)))
        elif kind == "ET2":
            moves.append(ET2(_nonzero(rng, h), rng.randint(2, kmax)))
        else:
            while True:
                a = [rng.randint(-h, h) for _ in range(4)]
                if a[0] * a[3] - a[1] * a[2]:
                    moves.append(ET3(*a))
                    break
    return moves


def random_block_form(rng: random.Random, blocks: int = 4, size: int = 3, kmax: int = 4, h: int = 3) -> BlockForm:
    """Nonempty alternating block form with nonzero blocks."""
    kind = rng.choice(("E1", "E2"))
    out = []
    for _ in range(rng.randint(1, blocks)):
        ks = rng.sample(range(2, kmax + 1), rng.randint(1, min(size, kmax - 1)))
        out.append((kind, tuple(sorted((k, _nonzero(rng, h)) for k in ks))))
        kind = "E2" if kind == "E1" else "E1"
    return BlockForm(tuple(out))


def random_shear_word(rng: random.Random, length: int = 8, kmax: int = 4, h: int = 3) -> ShearWord:
    letters = []
    for _ in range(rng.randint(0, length)):
        cls = rng.choice((E1, E2))
        letters.append(cls(_nonzero(rng, h), rng.randint(2, kmax)))
    return ShearWord(tuple(letters))
