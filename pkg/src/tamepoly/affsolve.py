"""Exact search for affine maps ``A`` with ``apply(A, r) == target``.

The unknowns are the six entries of ``x -> a1*x + a2*y + e1``,
``y -> b1*x + b2*y + e2``.  Comparing coefficients gives a polynomial system
over Q which is solved by backtracking: univariate equations are solved by
rational roots, variables that occur linearly with a constant coefficient are
eliminated, and only when neither applies is a variable enumerated over
rationals of bounded height.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .automorph import Auto, apply, compose, invert
from .polycore import BiPoly, UniPoly, as_rational, height, rational_roots
from .polycore.poly import gcd_many

A1, A2, B1, B2, E1, E2 = range(6)

Mono = Tuple[int, ...]
MP = Dict[Mono, Fraction]


def _var(i: int, nv: int) -> MP:
    e = [0] * nv
    e[i] = 1
    return {tuple(e): Fraction(1)}


def _const(c, nv: int) -> MP:
    return {(0,) * nv: Fraction(c)} if c else {}


def _zero_of(p: MP) -> Mono:
    return (0,) * len(next(iter(p)))


def _add_into(out: MP, p: MP, s=1) -> None:
    for e, c in p.items():
        v = out.get(e, 0) + s * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)


def _mul(p: MP, q: MP) -> MP:
    out: MP = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _vars(p: MP) -> set:
    return {i for e in p for i, k in enumerate(e) if k}


def _subs_value(p: MP, var: int, val) -> MP:
    out: MP = {}
    for e, c in p.items():
        k = e[var]
        if k:
            c = c * val**k
            e = e[:var] + (0,) + e[var + 1:]
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _subs_poly(p: MP, var: int, q: MP) -> MP:
    if not p:
        return p
    powers = {0: {_zero_of(p): Fraction(1)}}
    out: MP = {}
    for e, c in p.items():
        k = e[var]
        rest = {e[:var] + (0,) + e[var + 1:]: c}
        if k:
            while k not in powers:
                m = max(powers)
                powers[m + 1] = _mul(powers[m], q)
            rest = _mul(rest, powers[k])
        _add_into(out, rest)
    return out


def _degree_in(p: MP, var: int) -> int:
    return max(e[var] for e in p)


def _subs_cleared(p: MP, var: int, num: MP, den: MP) -> MP:
    """``den^d * p(var = num/den)`` with ``d`` the degree of ``p`` in ``var``."""
    d = _degree_in(p, var)
    if d == 0:
        return p
    groups: Dict[int, MP] = {}
    for e, c in p.items():
        groups.setdefault(e[var], {})[e[:var] + (0,) + e[var + 1:]] = c
    one = {_zero_of(p): Fraction(1)}
    npow = [one]
    dpow = [one]
    for _ in range(d):
        npow.append(_mul(npow[-1], num))
        dpow.append(_mul(dpow[-1], den))
    out: MP = {}
    for k, g in groups.items():
        _add_into(out, _mul(g, _mul(npow[k], dpow[d - k])))
    return out


def _eval(p: MP, point: Dict[int, Fraction]) -> Fraction:
    total = Fraction(0)
    for e, c in p.items():
        term = c
        for i, k in enumerate(e):
            if k:
                term *= point[i] ** k
        total += term
    return total


def _to_unipoly(p: MP, var: int) -> UniPoly:
    coeffs: Dict[int, Fraction] = {}
    for e, c in p.items():
        coeffs[e[var]] = coeffs.get(e[var], 0) + c
    return UniPoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


# -- coefficient equations ------------------------------------------------------

XY = Dict[Tuple[int, int], MP]


def _xy_mul(P: XY, Q: XY) -> XY:
    out: XY = {}
    for (i1, j1), c1 in P.items():
        for (i2, j2), c2 in Q.items():
            key = (i1 + i2, j1 + j2)
            cur = out.setdefault(key, {})
            _add_into(cur, _mul(c1, c2))
            if not cur:
                del out[key]
    return out


def _xy_of(p: BiPoly, nv: int) -> XY:
    return {e: _const(c, nv) for e, c in p.items()}


def _xy_add_into(out: XY, P: XY, s=1) -> None:
    for key, mp in P.items():
        cur = out.setdefault(key, {})
        _add_into(cur, mp, s)
        if not cur:
            del out[key]


def _substitute(p: BiPoly, X: XY, Y: XY, nv: int) -> XY:
    one: XY = {(0, 0): _const(1, nv)}
    xp, yp = [one], [one]
    total: XY = {}
    for (i, j), c in p.items():
        while len(xp) <= i:
            xp.append(_xy_mul(xp[-1], X))
        while len(yp) <= j:
            yp.append(_xy_mul(yp[-1], Y))
        _xy_add_into(total, _xy_mul(xp[i], yp[j]), c)
    return total


def coefficient_equations(r: BiPoly, target: BiPoly, powers: Tuple[int, ...] = ()) -> List[MP]:
    """Coefficients of ``r(A) - target(x + g(y), y)`` as polynomials in the unknowns.

    The unknowns are the six affine entries followed by one coefficient of
    ``g`` for every exponent in ``powers``.
    """
    nv = 6 + len(powers)
    X: XY = {(1, 0): _var(A1, nv), (0, 1): _var(A2, nv), (0, 0): _var(E1, nv)}
    Y: XY = {(1, 0): _var(B1, nv), (0, 1): _var(B2, nv), (0, 0): _var(E2, nv)}
    total = _substitute(r, X, Y, nv)
    if powers:
        Xg: XY = {(1, 0): _const(1, nv)}
        for idx, k in enumerate(powers):
            Xg[(0, k)] = _var(6 + idx, nv)
        rhs = _substitute(target, Xg, {(0, 1): _const(1, nv)}, nv)
    else:
        rhs = _xy_of(target, nv)
    _xy_add_into(total, rhs, -1)
    keys = sorted(total, key=lambda k: (-(k[0] + k[1]), k))
    return [total[k] for k in keys if total[k]]


# -- backtracking solver ----------------------------------------------------------


def rationals_up_to(h: int) -> List[Fraction]:
    """All rationals of height <= h, sorted by (height, value)."""
    vals = {Fraction(0)}
    for q in range(1, h + 1):
        for p in range(-h, h + 1):
            if gcd(p, q) == 1:
                vals.add(Fraction(p, q))
    return sorted(vals, key=lambda r: (height(r), r))


_FREE_CHOICES = [Fraction(v) for v in (0, 1, -1, 2, -2, 3)]


class _OutOfNodes(Exception):
    pass


class _Solver:
    def __init__(self, nv: int, h: int, max_nodes: int):
        self.nv = nv
        self.zero = (0,) * nv
        self.vals = rationals_up_to(h)
        self.nodes = 0
        self.max_nodes = max_nodes

    def run(self, eqs: List[MP]) -> Optional[Dict[int, Fraction]]:
        try:
            return self._solve(eqs, {}, [])
        except _OutOfNodes:
            return None

    def _clean(self, eqs: List[MP]) -> Optional[List[MP]]:
        out = []
        seen = set()
        for p in eqs:
            if not p:
                continue
            if len(p) == 1 and self.zero in p:
                return None
            key = frozenset(p.items())
            if key not in seen:
                seen.add(key)
                out.append(p)
        return out

    def _assign(self, eqs, assign, elim, var, val):
        assign = dict(assign)
        assign[var] = val
        new = [_subs_value(p, var, val) for p in eqs]
        if all(v in assign for v in (A1, A2, B1, B2)):
            if assign[A1] * assign[B2] - assign[A2] * assign[B1] == 0:
                return None
        return self._solve(new, assign, elim)

    def _solve(self, eqs, assign, elim):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _OutOfNodes
        eqs = self._clean(eqs)
        if eqs is None:
            return None
        if not eqs:
            return self._finish(assign, elim)
        # univariate equations first: gcd per variable, then rational roots
        by_var: Dict[int, List[UniPoly]] = {}
        for p in eqs:
            vs = _vars(p)
            if len(vs) == 1:
                v = vs.pop()
                by_var.setdefault(v, []).append(_to_unipoly(p, v))
        if by_var:
            v, polys = min(by_var.items(), key=lambda kv: min(u.degree for u in kv[1]))
            g = gcd_many(polys)
            if g.degree < 1:
                return None
            for root in rational_roots(g).roots:
                got = self._assign(eqs, assign, elim, v, Fraction(root))
                if got is not None:
                    return got
            return None
        # linear elimination: c*v + rest with rest free of v; a constant c is
        # substituted directly, otherwise split on c == 0 versus c != 0
        best = None
        for p in eqs:
            for v in _vars(p):
                if _degree_in(p, v) != 1:
                    continue
                c = {e[:v] + (0,) + e[v + 1:]: cc for e, cc in p.items() if e[v]}
                key = (len(c) > 1 or self.zero not in c, len(c), len(p))
                if best is None or key < best[0]:
                    best = (key, p, v, c)
        if best is not None:
            _, p, v, c = best
            rest = {e: cc for e, cc in p.items() if not e[v]}
            if len(c) == 1 and self.zero in c:
                c0 = c[self.zero]
                expr = {e: -cc / c0 for e, cc in rest.items()}
                new = [_subs_poly(q, v, expr) for q in eqs if q is not p]
                return self._solve(new, assign, elim + [(v, expr, None)])
            got = self._solve(eqs + [c], assign, elim)
            if got is not None:
                return got
            neg = {e: -cc for e, cc in rest.items()}
            new = [_subs_cleared(q, v, neg, c) for q in eqs if q is not p]
            return self._solve(new, assign, elim + [(v, neg, c)])
        # enumerate the most frequent variable
        counts: Dict[int, int] = {}
        for p in eqs:
            for v in _vars(p):
                counts[v] = counts.get(v, 0) + 1
        v = max(sorted(counts), key=lambda k: counts[k])
        for val in self.vals:
            got = self._assign(eqs, assign, elim, v, val)
            if got is not None:
                return got
        return None

    def _finish(self, assign, elim):
        bound = set(assign) | {v for v, _, _ in elim}
        free = [v for v in range(self.nv) if v not in bound]
        # the translation is fully determined by the linear part once a
        # family is fixed; try a few small values for free entries
        for choice in _product(_FREE_CHOICES, len(free)):
            full = dict(assign)
            full.update(zip(free, choice))
            ok = True
            for v, expr, den in reversed(elim):
                val = _eval(expr, full)
                if den is not None:
                    dv = _eval(den, full)
                    if dv == 0:
                        ok = False
                        break
                    val /= dv
                full[v] = val
            if not ok:
                continue
            if full[A1] * full[B2] - full[A2] * full[B1] != 0:
                return full
        return None


def _product(choices, n):
    if n == 0:
        yield ()
        return
    for c in choices:
        for rest in _product(choices, n - 1):
            yield (c,) + rest


def plateau_powers(p: BiPoly, kmax: int) -> Tuple[int, ...]:
    """Exponents ``k >= 2`` for which ``x -> x + c*y^k`` keeps ``deg p`` for every ``c``."""
    D = p.degree
    xs = [(i, j) for (i, j) in p.support() if i > 0]
    if not xs:
        return ()
    out = []
    for k in range(2, kmax + 1):
        if all(i * k + j <= D for i, j in xs):
            out.append(k)
    return tuple(out)


def _affine_from(v) -> Auto:
    return Auto(
        BiPoly({(1, 0): v[A1], (0, 1): v[A2], (0, 0): v[E1]}),
        BiPoly({(1, 0): v[B1], (0, 1): v[B2], (0, 0): v[E2]}),
    )


def solve_affine(r: BiPoly, target: BiPoly, h: int = 5, max_nodes: int = 4000) -> Optional[Auto]:
    """An invertible affine ``A`` with ``apply(A, r) == target``, or None.

    Values forced by the equations are found exactly whatever their height;
    ``h`` only bounds enumerated guesses when the system is not triangular.
    """
    if r.degree != target.degree or r.degree < 1:
        return None
    sol = _Solver(6, h, max_nodes).run(coefficient_equations(r, target))
    if sol is None:
        return None
    A = _affine_from({k: as_rational(c) for k, c in sol.items()})
    if apply(A, r) != target:
        raise AssertionError("affine solution failed to verify")
    return A


def solve_affine_plateau(
    r: BiPoly, target: BiPoly, kmax: int, h: int = 5, max_nodes: int = 4000
) -> Optional[Auto]:
    """``psi = A * (x - g(y), y) * L^-1`` with ``apply(psi, r) == target``.

    ``L`` is the linear change putting the top form of ``target`` on the
    ``y`` axis (only possible when that form is a power of a linear form) and
    ``g`` runs over polynomials whose shear keeps the degree.  Without such a
    family this is :func:`solve_affine`.
    """
    from .canon import linear_change_to_axis  # canon imports this module

    if r.degree != target.degree or r.degree < 2:
        return solve_affine(r, target, h, max_nodes)
    L = linear_change_to_axis(target)
    if L is None:
        return solve_affine(r, target, h, max_nodes)
    t1 = apply(L, target)
    powers = plateau_powers(t1, kmax)
    if not powers:
        return solve_affine(r, target, h, max_nodes)
    nv = 6 + len(powers)
    sol = _Solver(nv, h, max_nodes).run(coefficient_equations(r, t1, powers))
    if sol is None:
        return None
    v = {k: as_rational(c) for k, c in sol.items()}
    g = BiPoly({(0, k): v[6 + idx] for idx, k in enumerate(powers)})
    shear_inv = Auto(BiPoly.x() - g, BiPoly.y())
    psi = compose(_affine_from(v), shear_inv, invert(L))
    if apply(psi, r) != target:
        raise AssertionError("plateau solution failed to verify")
    return psi
