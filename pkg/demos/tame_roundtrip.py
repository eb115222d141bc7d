"""Build a random tame map, factor it, print the word and its inverse."""

import argparse
import random

from tamepoly.amalgam import normal_form
from tamepoly.automorph import IDENTITY, compose_word, factor_jvdk, format_auto
from tamepoly.sampling import random_word


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=6)
    ap.add_argument("--length", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    phi = random_word(rng, args.length, args.kmax).evaluate()
    print("map:    ", format_auto(phi))
    word = factor_jvdk(phi.img_x, phi.img_y)
    print(f"factors ({len(word)}):")
    for g in word.factors:
        print("   ", g)
    inv = word.inverse().evaluate()
    print("inverse:", format_auto(inv))
    assert compose_word(phi, word.inverse()) == IDENTITY
    nf = normal_form(phi)
    print("amalgam sides:", " ".join(nf.sides) or "(affine)")


if __name__ == "__main__":
    main()
