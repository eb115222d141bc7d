"""Peak reduction on pairs (u, v) of one-variable polynomials.

Moves:

* ``ET1(mu, k)``: (u, v) -> (u + mu*v^k, v), k >= 2
* ``ET2(mu, k)``: (u, v) -> (u, v + mu*u^k), k >= 2
* ``ET3(a1, a2, b1, b2)``: (u, v) -> (a1*u + a2*v, b1*u + b2*v), invertible

Complexity of a pair is ``(max degree, number of components at the max)``,
ordered lexicographically.  A single move lowers it whenever any sequence of
moves can, so greedy descent reaches an orbit-minimal pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple, Union

from .polycore import MINUS_INFINITY, UniPoly, as_rational, format_rational, format_unipoly, parse_unipoly


class PolyPair(NamedTuple):
    u: UniPoly
    v: UniPoly

    def __str__(self) -> str:
        return f"{format_unipoly(self.u)}; {format_unipoly(self.v)}"


def make_pair(u, v) -> PolyPair:
    return PolyPair(UniPoly.coerce(u), UniPoly.coerce(v))


def parse_pair(text: str) -> PolyPair:
    parts = text.split(";")
    if len(parts) != 2:
        raise ValueError("pair text needs exactly one ';'")
    return PolyPair(parse_unipoly(parts[0]), parse_unipoly(parts[1]))


def measure(pair: PolyPair) -> Tuple:
    du, dv = pair.u.degree, pair.v.degree
    top = max(du, dv)
    if top == MINUS_INFINITY:
        return (MINUS_INFINITY, 0)
    return (top, (du == top) + (dv == top))


@dataclass(frozen=True)
class ET1:
    mu: object
    k: int

    def __post_init__(self):
        object.__setattr__(self, "mu", as_rational(self.mu))
        if not self.mu or self.k < 2:
            raise ValueError("ET1 needs mu != 0 and k >= 2")

    def __call__(self, pair: PolyPair) -> PolyPair:
        return PolyPair(pair.u + (pair.v**self.k).scale(self.mu), pair.v)

    def inverse(self) -> "ET1":
        return ET1(-self.mu, self.k)

    def to_json(self) -> dict:
        return {"kind": "ET1", "mu": format_rational(self.mu), "k": self.k}


@dataclass(frozen=True)
class ET2:
    mu: object
    k: int

    def __post_init__(self):
        object.__setattr__(self, "mu", as_rational(self.mu))
        if not self.mu or self.k < 2:
            raise ValueError("ET2 needs mu != 0 and k >= 2")

    def __call__(self, pair: PolyPair) -> PolyPair:
        return PolyPair(pair.u, pair.v + (pair.u**self.k).scale(self.mu))

    def inverse(self) -> "ET2":
        return ET2(-self.mu, self.k)

    def to_json(self) -> dict:
        return {"kind": "ET2", "mu": format_rational(self.mu), "k": self.k}


@dataclass(frozen=True)
class ET3:
    a1: object
    a2: object
    b1: object
    b2: object

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.a1 * self.b2 - self.a2 * self.b1 == 0:
            raise ValueError("ET3 must be non-degenerate")

    def __call__(self, pair: PolyPair) -> PolyPair:
        u, v = pair
        return PolyPair(u.scale(self.a1) + v.scale(self.a2), u.scale(self.b1) + v.scale(self.b2))

    def inverse(self) -> "ET3":
        d = Fraction(self.a1 * self.b2 - self.a2 * self.b1)
        return ET3(self.b2 / d, -self.a2 / d, -self.b1 / d, self.a1 / d)

    def to_json(self) -> dict:
        return {"kind": "ET3", "coeffs": [format_rational(c) for c in (self.a1, self.a2, self.b1, self.b2)]}


ETMove = Union[ET1, ET2, ET3]
SWAP = ET3(0, 1, 1, 0)


def apply_et(move: ETMove, pair: PolyPair) -> PolyPair:
    return move(pair)


def apply_word(moves, pair: PolyPair) -> PolyPair:
    for m in moves:
        pair = m(pair)
    return pair


def move_from_json(rec: dict) -> ETMove:
    kind = rec["kind"]
    if kind == "ET3":
        return ET3(*(Fraction(c) for c in rec["coeffs"]))
    cls = ET1 if kind == "ET1" else ET2 if kind == "ET2" else None
    if cls is None:
        raise ValueError(f"unknown move kind {kind!r}")
    return cls(Fraction(rec["mu"]), int(rec["k"]))


@dataclass(frozen=True)
class ETWord:
    moves: Tuple[ETMove, ...] = ()
    #: complexity after each move (reduction traces only)
    measures: Tuple[Tuple, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __call__(self, pair: PolyPair) -> PolyPair:
        return apply_word(self.moves, pair)

    def to_json(self) -> list:
        out = []
        for i, m in enumerate(self.moves):
            rec = m.to_json()
            if i < len(self.measures):
                rec["measure"] = [_jsonable_degree(self.measures[i][0]), self.measures[i][1]]
            out.append(rec)
        return out


def _jsonable_degree(d):
    return "-inf" if d == MINUS_INFINITY else int(d)


def find_reducing_et(pair: PolyPair) -> Optional[ETMove]:
    """A single move that lowers :func:`measure`, or ``None``.

    With ``deg u <= deg v`` the only candidates are ET2 with ``k = deg v /
    deg u`` and, at equal degrees, the linear move cancelling one leading
    coefficient; the mirrored cases give ET1.
    """
    u, v = pair
    du, dv = u.degree, v.degree
    if du == MINUS_INFINITY or dv == MINUS_INFINITY:
        return None
    if du == dv:
        # (u, v) -> (u - (lc u / lc v) v, v)
        r = Fraction(u.lc()) / v.lc()
        return ET3(1, -r, 0, 1)
    if du < dv:
        if du >= 1 and dv % du == 0:
            k = dv // du
            return ET2(-Fraction(v.lc()) / Fraction(u.lc()) ** k, k)
        return None
    if dv >= 1 and du % dv == 0:
        k = du // dv
        return ET1(-Fraction(u.lc()) / Fraction(v.lc()) ** k, k)
    return None


def reduce_pair(pair: PolyPair) -> Tuple[PolyPair, ETWord]:
    """Greedy descent to a pair no single move can simplify.

    >>> from tamepoly.polycore import UniPoly
    >>> reduce_pair(make_pair(UniPoly([0, 1, 0, 1]), UniPoly([0, 1])))[0]
    PolyPair(u=UniPoly('0'), v=UniPoly('t'))
    """
    pair = make_pair(*pair)
    moves: List[ETMove] = []
    measures: List[Tuple] = []
    while True:
        m = find_reducing_et(pair)
        if m is None:
            return pair, ETWord(tuple(moves), tuple(measures))
        pair = m(pair)
        moves.append(m)
        measures.append(measure(pair))


# -- equivalence of minimal pairs -----------------------------------------


@dataclass(frozen=True)
class PairMap:
    """(u, v) -> A . (u(alpha*t + beta), v(alpha*t + beta)) with A a 2x2 matrix."""

    matrix: Tuple = (1, 0, 0, 1)
    alpha: object = 1
    beta: object = 0

    def __call__(self, pair: PolyPair) -> PolyPair:
        r = UniPoly([self.beta, self.alpha])
        u, v = pair.u.compose(r), pair.v.compose(r)
        a1, a2, b1, b2 = self.matrix
        return PolyPair(u.scale(a1) + v.scale(a2), u.scale(b1) + v.scale(b2))

    def then(self, other: "PairMap") -> "PairMap":
        """Apply ``self`` first, ``other`` second."""
        a1, a2, b1, b2 = self.matrix
        c1, c2, d1, d2 = other.matrix
        m = (c1 * a1 + c2 * b1, c1 * a2 + c2 * b2, d1 * a1 + d2 * b1, d1 * a2 + d2 * b2)
        # (P o r1) o r2 = P o (r1 o r2)
        alpha = self.alpha * other.alpha
        beta = self.alpha * other.beta + self.beta
        return PairMap(tuple(as_rational(c) for c in m), as_rational(alpha), as_rational(beta))

    def inverse(self) -> "PairMap":
        a1, a2, b1, b2 = (Fraction(c) for c in self.matrix)
        d = a1 * b2 - a2 * b1
        m = (b2 / d, -a2 / d, -b1 / d, a1 / d)
        alpha = 1 / Fraction(self.alpha)
        return PairMap(tuple(as_rational(c) for c in m), as_rational(alpha), as_rational(-self.beta * alpha))

    def to_json(self) -> dict:
        return {
            "matrix": [format_rational(c) for c in self.matrix],
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
        }


@dataclass(frozen=True)
class PairsEquivalent:
    witness: PairMap
    minimal1: PolyPair
    minimal2: PolyPair
    trace1: ETWord
    trace2: ETWord


@dataclass(frozen=True)
class PairsUnknown:
    reason: str


def _normalize(pair: PolyPair) -> Tuple[PolyPair, PairMap]:
    """Fix orientation, shift, and linear part; only ``t -> alpha*t`` stays free."""
    T = PairMap()
    u, v = pair
    if u.degree > v.degree:
        T = T.then(PairMap((0, 1, 1, 0)))
        pair = T(pair)
        u, v = pair
    # shift kills the subleading coefficient of the first nonconstant slot
    w = u if u.degree >= 1 else v
    if w.degree >= 1:
        beta = -Fraction(w.coeff(w.degree - 1)) / (w.degree * Fraction(w.lc()))
        step = PairMap(alpha=1, beta=as_rational(beta))
        T = T.then(step)
        pair = step(pair)
        u, v = pair
    if u:
        a = 1 / Fraction(u.lc())
        b1 = -Fraction(v.coeff(u.degree)) * a if v.degree > u.degree else 0
        lv = v + u.scale(b1)
        b2 = 1 / Fraction(lv.lc()) if lv else 1
        step = PairMap((as_rational(a), 0, as_rational(b1 * b2), as_rational(b2)))
    else:
        step = PairMap((1, 0, 0, as_rational(1 / Fraction(v.lc())) if v else 1))
    T = T.then(step)
    return step(pair), T


def _weights(pair: PolyPair):
    # coefficient c_j of a slot of degree d scales by alpha^(j - d)
    out = []
    for slot in pair:
        d = slot.degree
        for j, c in enumerate(slot.coeffs):
            out.append((j - d, c))
    return out


def _rational_root(value: Fraction, e: int):
    """Rational r with r**e == value (e may be negative); all real choices."""
    if e < 0:
        value, e = 1 / value, -e
    out = []
    for sign in (1, -1):
        num, den = value.numerator, value.denominator
        if num < 0 and e % 2 == 0:
            continue
        rn = _int_root(abs(num), e)
        rd = _int_root(den, e)
        if rn is None or rd is None:
            continue
        r = Fraction(rn if num >= 0 else -rn, rd)
        cand = r if sign == 1 else -r
        if cand**e == value and cand not in out:
            out.append(cand)
    return out


def _int_root(n: int, e: int):
    if n < 2:
        return n
    r = round(n ** (1.0 / e))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**e == n:
            return c
    lo, hi = 0, n
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**e
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def pairs_equivalent(p1: PolyPair, p2: PolyPair) -> Union[PairsEquivalent, PairsUnknown]:
    """Try to match the minimal pairs by a linear move and ``t -> alpha*t + beta``.

    Only positive answers carry a certificate; anything else is ``Unknown``.
    """
    m1, tr1 = reduce_pair(p1)
    m2, tr2 = reduce_pair(p2)
    if measure(m1) != measure(m2):
        return PairsUnknown("minimal complexities differ")
    n1, T1 = _normalize(m1)
    n2, T2 = _normalize(m2)
    if sorted(d.degree for d in n1) != sorted(d.degree for d in n2) or [s.degree for s in n1] != [s.degree for s in n2]:
        return PairsUnknown("degree patterns differ")
    w1, w2 = _weights(n1), _weights(n2)
    candidates = [Fraction(1)]
    for (e, c1), (_, c2) in zip(w1, w2):
        if e != 0 and (c1 or c2):
            if not c1 or not c2:
                return PairsUnknown("coefficient pattern differs")
            candidates = _rational_root(Fraction(c2) / Fraction(c1), e)
            break
    for alpha in candidates:
        scale = PairMap(alpha=as_rational(alpha))
        scaled = scale(n1)
        fix = PairMap((as_rational(1 / Fraction(alpha) ** n1.u.degree) if n1.u else 1, 0, 0,
                       as_rational(1 / Fraction(alpha) ** n1.v.degree) if n1.v else 1))
        if fix(scaled) == n2:
            W = T1.then(scale).then(fix).then(T2.inverse())
            if W(m1) == m2:
                return PairsEquivalent(W, m1, m2, tr1, tr2)
    return PairsUnknown("no linear move with affine reparametrization matches")
