"""Deterministic sample sets shared by the property and acceptance tests."""

import random

from tamepoly.automorph import Auto, apply, compose
from tamepoly.polycore import BiPoly
from tamepoly.sampling import random_linear, random_poly


def shear_sample(seed: int = 4, n: int = 200):
    """Polynomials of degree <= 5 for the shear-search comparison.

    A third are random, a third are built to admit a small lowering shear,
    and a third have a top form that is a power of a linear form.
    """
    rng = random.Random(seed)
    x, y = BiPoly.x(), BiPoly.y()
    out = []
    while len(out) < n:
        kind = len(out) % 3
        if kind == 0:
            out.append(random_poly(rng, rng.randint(2, 5)))
        elif kind == 1:
            k = rng.randint(2, 5)
            r = random_poly(rng, 1) if k > 2 else random_poly(rng, rng.randint(1, 2))
            lam = rng.choice([-3, -2, -1, 1, 2, 3])
            L = random_linear(rng, 2)
            p = apply(compose(Auto(x, y - BiPoly.monomial(k, 0, lam)), L.inverse().to_auto()), r)
            if 2 <= p.degree <= 5:
                out.append(p)
        else:
            d = rng.randint(2, 5)
            a, b = rng.choice([(1, 0), (0, 1), (1, 1), (1, -2), (2, 1), (1, 3)])
            top = BiPoly.linear(a, b) ** d
            out.append(top.scale(rng.choice([1, -1, 2])) + random_poly(rng, rng.randint(1, d - 1)))
    return out
