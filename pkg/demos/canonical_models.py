"""Hide a polynomial under a random automorphism and recover its canonical degree."""

import argparse
import random

from tamepoly.automorph import apply
from tamepoly.canon import NeedsExtension, canonical_model, equivalent
from tamepoly.polycore import format_poly, parse_poly
from tamepoly.sampling import random_word


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("poly", nargs="?", default="x^3 + y^2 + x*y")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--length", type=int, default=4)
    args = ap.parse_args()

    p = parse_poly(args.poly)
    q = apply(random_word(random.Random(args.seed), args.length, 3).evaluate(), p)
    print(f"p = {format_poly(p)}  (degree {p.degree})")
    print(f"image has degree {q.degree} and {len(q)} terms")
    out = canonical_model(q)
    if isinstance(out, NeedsExtension):
        print("descent needs an algebraic extension:", out.minimal_poly)
        return
    for step, d in zip(out.trace.steps, out.trace.degrees[1:]):
        print(f"  shear {step.orientation} k={step.k} lambda={step.lambda2} -> degree {d}")
    print("canonical model:", format_poly(out.canonical))
    res = equivalent(p, q)
    print("equivalent(p, image):", type(res).__name__)


if __name__ == "__main__":
    main()
