"""Degree-minimal models of polynomials under Aut(Q[x, y]).

A reduction step is a linear change followed by an elementary shear
``y -> y + lambda*x^k`` (or the mirror in ``x``) that lowers the total
degree.  Greedy descent by such steps reaches the minimal degree of the orbit
whenever each step can be taken over Q; if the only cancelling shears need
irrational ``lambda`` the descent stops with :class:`NeedsExtension`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple, Union

from .affsolve import solve_affine_plateau
from .automorph import (
    IDENTITY,
    Auto,
    AutoWord,
    Linear,
    apply,
    auto_to_json,
    compose,
    factor,
    invert,
)
from .newton import newton_shape
from .polycore import (
    BiPoly,
    UniPoly,
    as_rational,
    degree_form,
    format_poly,
    format_rational,
    gcd_many,
    height,
    linear_power_root,
    rational_roots,
)

IDENTITY_LINEAR = Linear(1, 0, 0, 1)


@dataclass(frozen=True)
class ShearStep:
    """Linear change ``pre_linear`` followed by an elementary shear.

    ``orientation`` names the sheared variable: ``"y"`` means
    ``y -> y + lambda2*x^k`` and ``"x"`` means ``x -> x + lambda2*y^k``.
    """

    pre_linear: Linear
    orientation: str
    k: int
    lambda2: object

    def shear_auto(self) -> Auto:
        x, y = BiPoly.x(), BiPoly.y()
        if self.orientation == "y":
            return Auto(x, y + BiPoly.monomial(self.k, 0, self.lambda2))
        return Auto(x + BiPoly.monomial(0, self.k, self.lambda2), y)

    def automorphism(self) -> Auto:
        return compose(self.pre_linear.to_auto(), self.shear_auto())

    def apply(self, p: BiPoly) -> BiPoly:
        if self.pre_linear != IDENTITY_LINEAR:
            p = apply(self.pre_linear.to_auto(), p)
        return p.shear(self.orientation, self.k, self.lambda2)

    def to_json(self) -> dict:
        return {
            "pre_linear": self.pre_linear.to_json()["coeffs"],
            "orientation": self.orientation,
            "k": self.k,
            "lambda2": format_rational(self.lambda2),
        }


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[ShearStep, ...] = ()
    degrees: Tuple = ()

    def automorphism(self) -> Auto:
        return compose(*(s.automorphism() for s in self.steps)) if self.steps else IDENTITY

    def replay(self, p: BiPoly) -> BiPoly:
        for s in self.steps:
            p = s.apply(p)
        return p

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "degrees": [_deg_json(d) for d in self.degrees]}


def _deg_json(d):
    return "-inf" if d == float("-inf") else int(d)


@dataclass(frozen=True)
class Model:
    canonical: BiPoly
    trace: ReductionTrace

    @property
    def degree(self):
        return self.canonical.degree


@dataclass(frozen=True)
class NeedsExtension:
    at: BiPoly
    minimal_poly: UniPoly
    trace: ReductionTrace = ReductionTrace()


CanonOutcome = Union[Model, NeedsExtension]


# -- the cancellation system -------------------------------------------------


def shear_coefficients(q: BiPoly, k: int, min_degree: int) -> Dict[Tuple[int, int], UniPoly]:
    """Coefficients of ``q(x, y + lam*x^k)`` as polynomials in ``lam``.

    Only monomials of total degree ``>= min_degree`` are produced.
    """
    rows: Dict[Tuple[int, int], Dict[int, object]] = {}
    for (i, j), c in q.items():
        base = i + j
        if base >= min_degree:
            r0 = 0
        elif k > 1:
            r0 = -(-(min_degree - base) // (k - 1))
        else:
            continue
        for r in range(r0, j + 1):
            e = (i + k * r, j - r)
            row = rows.setdefault(e, {})
            row[r] = row.get(r, 0) + c * comb(j, r)
    out = {}
    for e, row in rows.items():
        u = UniPoly([row.get(r, 0) for r in range(max(row) + 1)])
        if u:
            out[e] = u
    return out


def _pre_linear_for(ell: BiPoly) -> Tuple[Linear, str]:
    """Linear change sending ``ell`` to a coordinate axis, and the shear side."""
    beta = ell.coeff(0, 1)
    if ell.coeff(1, 0) == 0:
        return IDENTITY_LINEAR, "x"  # ell = y: shear x
    if beta == 0:
        return IDENTITY_LINEAR, "y"  # ell = x: shear y
    # x -> x, y -> (y - x)/beta  sends x + beta*y to y
    b = as_rational(1 / Fraction(beta))
    return Linear(1, 0, -b, b), "x"


def linear_change_to_axis(p: BiPoly) -> Optional[Auto]:
    """Linear map after which the top form of ``p`` is ``c*y^d``; None if it is no such power."""
    if p.degree < 1:
        return None
    root = linear_power_root(degree_form(p))
    if root is None:
        return None
    pre, side = _pre_linear_for(root[1])
    if side == "x":
        return pre.to_auto()
    return Auto(BiPoly.y(), BiPoly.x())


def find_reducing_shear(p: BiPoly) -> Union[ShearStep, NeedsExtension, None]:
    """One degree-lowering step, a report that only irrational ones exist, or None."""
    d = p.degree
    if d < 2:
        return None
    root = linear_power_root(degree_form(p))
    if root is None:
        return None
    _, ell = root
    pre, side = _pre_linear_for(ell)
    q = apply(pre.to_auto(), p) if pre != IDENTITY_LINEAR else p
    # canonical side is y -> y + lam*x^k; the x side is handled on the swapped polynomial
    work = q if side == "y" else q.swap()
    best = None
    witness = None
    for k in range(2, d + 1):
        coeffs = shear_coefficients(work, k, d)
        g = gcd_many(list(coeffs.values()))
        if g.degree < 1:
            continue
        roots, residual = rational_roots(g)
        for lam in roots:
            key = (height(lam), k, lam)
            if best is None or key < best:
                best = key
        if not roots and witness is None and residual:
            witness = residual[0]
    if best is not None:
        _, k, lam = best
        return ShearStep(pre, side, k, as_rational(lam))
    if witness is not None:
        return NeedsExtension(p, witness)
    return None


def canonical_model(p: BiPoly) -> CanonOutcome:
    """Descend by reducing shears until none applies.

    >>> from tamepoly.polycore import parse_poly
    >>> str(canonical_model(parse_poly("x^3 + y")).canonical)
    'y'
    """
    steps: List[ShearStep] = []
    degrees = [p.degree]
    while True:
        found = find_reducing_shear(p)
        if found is None:
            return Model(p, ReductionTrace(tuple(steps), tuple(degrees)))
        if isinstance(found, NeedsExtension):
            return NeedsExtension(p, found.minimal_poly, ReductionTrace(tuple(steps), tuple(degrees)))
        p = found.apply(p)
        steps.append(found)
        degrees.append(p.degree)


# -- coordinates ---------------------------------------------------------------


@dataclass(frozen=True)
class Yes:
    word: AutoWord
    automorphism: Auto


@dataclass(frozen=True)
class No:
    reason: str


@dataclass(frozen=True)
class Unknown:
    reason: str


def _affine_sending_x_to(ell: BiPoly) -> Auto:
    """An invertible affine map whose x-image is the nonconstant linear ``ell``."""
    other = BiPoly.y() if ell.coeff(1, 0) != 0 else BiPoly.x()
    return Auto(ell, other)


def is_coordinate(p: BiPoly) -> Union[Yes, No, Unknown]:
    """Decide whether ``p`` is the image of ``x`` under an automorphism."""
    if p.degree < 1:
        return No("constant")
    out = canonical_model(p)
    if isinstance(out, NeedsExtension):
        return Unknown("needs-extension")
    if out.degree > 1:
        return No(f"canonical degree {out.degree}")
    # apply(A, p) = c  =>  p = apply(A^-1, c) = apply(compose(L, A^-1), x)
    A = out.trace.automorphism()
    psi = compose(_affine_sending_x_to(out.canonical), invert(A))
    if psi.img_x != p:
        raise AssertionError("coordinate witness failed to verify")
    return Yes(factor(psi), psi)


# -- Theorem-1.1 style screen ---------------------------------------------------


@dataclass(frozen=True)
class NotEquivalent:
    certificate: dict


@dataclass(frozen=True)
class Inapplicable:
    reason: str


def test_nonequiv_thm11(p: BiPoly, q: BiPoly) -> Union[NotEquivalent, Inapplicable]:
    """Non-equivalence of two triangle-shaped polynomials with coprime-ish exponents.

    Both must be ``a x^n + b y^m + ...`` (terms under the hypotenuse) with
    neither of ``n, m`` dividing the other (same for ``r, s`` of ``q``); if
    ``max(m, n) != max(r, s)`` no automorphism relates them.
    """
    sp = None if p.is_constant() else newton_shape(p)
    if sp is None:
        return Inapplicable("shape-p")
    n, m = sp.n, sp.m
    if n % m == 0:
        return Inapplicable("m-divides-n")
    if m % n == 0:
        return Inapplicable("n-divides-m")
    sq = None if q.is_constant() else newton_shape(q)
    if sq is None:
        return Inapplicable("shape-q")
    r, s = sq.n, sq.m
    if r % s == 0:
        return Inapplicable("s-divides-r")
    if s % r == 0:
        return Inapplicable("r-divides-s")
    if max(m, n) == max(r, s):
        return Inapplicable("max-equal")
    return NotEquivalent(
        {
            "rule": "thm1.1",
            "p": sp.to_json(),
            "q": {"r": r, "s": s, "A": format_rational(sq.a), "B": format_rational(sq.b),
                  "mixed": sq.to_json()["mixed"]},
            "max_p": max(m, n),
            "max_q": max(r, s),
        }
    )


# -- bounded equivalence search ----------------------------------------------------


@dataclass(frozen=True)
class Budget:
    """Limits for the degree-preserving search between canonical models.

    ``length`` counts generators in the connecting word (the final affine map
    included), ``k`` bounds shear exponents and ``height`` bounds enumerated
    rational coefficients.  ``max_nodes`` caps the breadth-first frontier.
    """

    length: int = 4
    k: int = 4
    height: int = 5
    max_nodes: int = 400

    def __post_init__(self):
        for name in ("length", "k", "height", "max_nodes"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"malformed budget: {name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class Equivalent:
    witness: Auto
    certificate: dict


EquivOutcome = Union[Equivalent, NotEquivalent, Unknown]


def _plateau_letters(p: BiPoly, budget: Budget):
    """Shears with exponent in [2, budget.k] that keep ``deg p`` through cancellation."""
    D = p.degree
    for side in ("y", "x"):
        work = p if side == "y" else p.swap()
        for k in range(2, budget.k + 1):
            coeffs = shear_coefficients(work, k, D + 1)
            if not coeffs:
                continue  # every coefficient works; covered by the solved family
            g = gcd_many(list(coeffs.values()))
            if g.degree < 1:
                continue
            for lam in rational_roots(g).roots:
                if lam != 0:
                    yield side, k, lam


def degree_preserving_search(r: BiPoly, target: BiPoly, budget: Budget) -> Optional[Auto]:
    """Breadth-first search for ``psi`` with ``apply(psi, r) == target``.

    Each node is closed by solving exactly for an affine map composed with a
    free degree-preserving shear; edges are shears that keep the degree only
    through cancellation.
    """
    if r.degree != target.degree:
        return None
    queue = deque([(r, IDENTITY, 0)])
    seen = {r}
    nodes = 0
    while queue and nodes < budget.max_nodes:
        poly, word, depth = queue.popleft()
        nodes += 1
        A = solve_affine_plateau(poly, target, budget.k, budget.height)
        if A is not None:
            return compose(word, A)
        if depth + 1 >= budget.length:
            continue
        for side, k, lam in _plateau_letters(poly, budget):
            nxt = poly.shear(side, k, lam)
            if nxt in seen:
                continue
            seen.add(nxt)
            x, y = BiPoly.x(), BiPoly.y()
            shear = Auto(x, y + BiPoly.monomial(k, 0, lam)) if side == "y" else Auto(x + BiPoly.monomial(0, k, lam), y)
            queue.append((nxt, compose(word, shear), depth + 1))
    return None


def equivalent(p: BiPoly, q: BiPoly, budget: Budget = Budget()) -> EquivOutcome:
    """Look for an automorphism taking ``p`` to ``q``.

    Negative answers come from the triangle-shape criterion or from differing
    canonical degrees; positive ones carry a verified witness.
    """
    if not isinstance(budget, Budget):
        raise ValueError("malformed budget")
    if p.degree < 1 or q.degree < 1:
        if p == q:
            return Equivalent(IDENTITY, {"rule": "witness", "detail": "identical constants"})
        return NotEquivalent({"rule": "constant", "detail": "automorphisms fix constants and keep degree"})
    screen = test_nonequiv_thm11(p, q)
    if isinstance(screen, NotEquivalent):
        return screen
    cp, cq = canonical_model(p), canonical_model(q)
    both_models = isinstance(cp, Model) and isinstance(cq, Model)
    reached_p = cp.canonical if isinstance(cp, Model) else cp.at
    reached_q = cq.canonical if isinstance(cq, Model) else cq.at
    if both_models and cp.degree != cq.degree:
        return NotEquivalent(
            {"rule": "canon-degree", "degree_p": int(cp.degree), "degree_q": int(cq.degree),
             "canonical_p": format_poly(cp.canonical), "canonical_q": format_poly(cq.canonical)}
        )
    psi = degree_preserving_search(reached_p, reached_q, budget)
    if psi is None:
        return Unknown("needs-extension" if not both_models else "search budget exhausted")
    Ap, Aq = cp.trace.automorphism(), cq.trace.automorphism()
    witness = compose(Ap, psi, invert(Aq))
    if apply(witness, p) != q:
        raise AssertionError("equivalence witness failed to verify")
    return Equivalent(witness, {"rule": "witness", "map": auto_to_json(witness)})
