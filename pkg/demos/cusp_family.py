"""Screen and decide x^k - y^l for small coprime exponents, plus a disguised cusp."""

from math import gcd

from tamepoly.automorph import apply, parse_auto
from tamepoly.polycore import UniPoly, format_poly, parse_poly
from tamepoly.zl import Parametrization, zl_decide, zl_screen

t = UniPoly.t()

for k in range(3, 7):
    for l in range(2, k):
        if gcd(k, l) != 1:
            continue
        p = parse_poly(f"x^{k} - y^{l}")
        out = zl_decide(p, Parametrization(t**l, t**k))
        print(f"x^{k} - y^{l}: screen {zl_screen(p).to_json()}, decide ({out.k}, {out.l})")

# the cusp moved by (x + y^2, y): the parametrization moves with it
phi = parse_auto("x - y^2; y")
p = apply(phi, parse_poly("x^2 - y^3"))
u, v = t**3 + (t**2) ** 2, t**2
print("disguised:", format_poly(p))
print("  screen:", zl_screen(p))
out = zl_decide(p, Parametrization(u, v))
print("  decide:", type(out).__name__, out.to_json() if hasattr(out, "to_json") else "")
