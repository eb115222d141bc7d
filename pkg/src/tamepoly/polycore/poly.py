"""Sparse exact-rational polynomials in one and two variables.

Coefficients are kept as ``int`` whenever the value is integral and as
:class:`fractions.Fraction` otherwise; both compare and hash consistently, and
plain ints keep the hot loops fast.  All objects are immutable after
construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Coeff = Union[int, Fraction]
Exp = Tuple[int, int]

#: Degree of the zero polynomial.  Compares below every integer and is
#: absorbing under addition, so ``deg(p*q) == deg(p) + deg(q)`` holds always.
MINUS_INFINITY = float("-inf")


def as_rational(c) -> Coeff:
    """Normalize ``c`` to an ``int`` or a reduced ``Fraction``."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
    elif isinstance(c, str):
        c = Fraction(c)
    else:
        raise TypeError(f"not an exact rational: {c!r}")
    return c.numerator if c.denominator == 1 else c


def height(c) -> int:
    """max(|numerator|, denominator) of a rational."""
    c = Fraction(c)
    return max(abs(c.numerator), c.denominator)


def format_rational(c) -> str:
    c = as_rational(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


class BiPoly:
    """Polynomial in ``x`` and ``y`` with rational coefficients.

    ``terms`` maps exponent pairs ``(i, j)`` (for ``x^i y^j``) to nonzero
    coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        clean: Dict[Exp, Coeff] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term {(i, j)}")
                c = as_rational(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exp, Coeff]) -> "BiPoly":
        # trusted constructor: terms already normalized and zero-free
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def linear(cls, a, b, c=0) -> "BiPoly":
        """a*x + b*y + c"""
        return cls({(1, 0): a, (0, 1): b, (0, 0): c})

    @staticmethod
    def coerce(other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(other)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exp, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exp, Coeff]]:
        return iter(self._terms.items())

    def coeff(self, i: int, j: int) -> Coeff:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get((0, 0), 0)

    @property
    def degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(i + j for i, j in self._terms)

    def degree_in(self, var: int):
        if not self._terms:
            return MINUS_INFINITY
        return max(e[var] for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self._terms}) <= 1

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = BiPoly.coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = as_rational(s)
            else:
                out.pop(e, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-BiPoly.coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return BiPoly.coerce(other) - self

    def scale(self, c) -> "BiPoly":
        c = as_rational(c)
        if not c:
            return BiPoly()
        return BiPoly._raw({e: as_rational(v * c) for e, v in self._terms.items()})

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return self.scale(other)
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out: Dict[Exp, Coeff] = {}
        get = out.get
        for (i1, j1), c1 in b.items():
            for (i2, j2), c2 in a.items():
                e = (i1 + i2, j1 + j2)
                out[e] = get(e, 0) + c1 * c2
        return BiPoly._raw({e: as_rational(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c) -> "BiPoly":
        c = as_rational(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(Fraction(1) / c)

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution ---------------------------------------

    def diff(self, var: int) -> "BiPoly":
        out = {}
        for (i, j), c in self._terms.items():
            k = (i, j)[var]
            if k:
                e = (i - 1, j) if var == 0 else (i, j - 1)
                out[e] = as_rational(c * k)
        return BiPoly._raw(out)

    def homogeneous_part(self, d: int) -> "BiPoly":
        return BiPoly._raw({e: c for e, c in self._terms.items() if e[0] + e[1] == d})

    def subs(self, img_x: "BiPoly", img_y: "BiPoly") -> "BiPoly":
        """Return ``self(img_x, img_y)``."""
        img_x, img_y = BiPoly.coerce(img_x), BiPoly.coerce(img_y)
        if not self._terms:
            return BiPoly()
        # Horner in x over rows grouped by the x-exponent
        rows: Dict[int, Dict[int, Coeff]] = {}
        for (i, j), c in self._terms.items():
            rows.setdefault(i, {})[j] = c
        ypow = _PowerCache(img_y)
        result = BiPoly()
        top = max(rows)
        for i in range(top, -1, -1):
            result = result * img_x if result else result
            row = rows.get(i)
            if row:
                acc = BiPoly()
                for j, c in row.items():
                    acc = acc + ypow[j].scale(c)
                result = result + acc
        return result

    def shear(self, which: str, k: int, lam) -> "BiPoly":
        """Apply ``y -> y + lam*x^k`` (which='y') or ``x -> x + lam*y^k`` (which='x').

        Binomial expansion term by term; much cheaper than :meth:`subs`.
        """
        lam = as_rational(lam)
        out: Dict[Exp, Coeff] = {}
        get = out.get
        for (i, j), c in self._terms.items():
            if which == "y":
                for r in range(j + 1):
                    e = (i + k * r, j - r)
                    out[e] = get(e, 0) + c * comb(j, r) * lam**r
            else:
                for r in range(i + 1):
                    e = (i - r, j + k * r)
                    out[e] = get(e, 0) + c * comb(i, r) * lam**r
        return BiPoly._raw({e: as_rational(c) for e, c in out.items() if c})

    def __call__(self, x, y) -> Coeff:
        total = 0
        for (i, j), c in self._terms.items():
            total += c * x**i * y**j
        return as_rational(total)

    def eval_uni(self, u: "UniPoly", v: "UniPoly") -> "UniPoly":
        """Return the one-variable polynomial ``self(u(t), v(t))``."""
        upow = _PowerCache(u)
        vpow = _PowerCache(v)
        result = UniPoly()
        for (i, j), c in self._terms.items():
            result = result + (upow[i] * vpow[j]).scale(c)
        return result

    def swap(self) -> "BiPoly":
        return BiPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order (highest total degree first, x before y)."""
        return sorted(self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def __repr__(self) -> str:
        from .parse import format_poly

        return f"BiPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        from .parse import format_poly

        return format_poly(self)


class UniPoly:
    """Polynomial in one variable; ``coeffs[i]`` is the coefficient of ``t^i``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def t(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c=1) -> "UniPoly":
        return cls([0] * n + [c])

    @staticmethod
    def coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.const(other)

    @property
    def coeffs(self) -> Tuple[Coeff, ...]:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else MINUS_INFINITY

    def lc(self) -> Coeff:
        return self._c[-1] if self._c else 0

    def coeff(self, i: int) -> Coeff:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def is_monomial(self) -> bool:
        return sum(1 for c in self._c if c) == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __add__(self, other) -> "UniPoly":
        other = UniPoly.coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._c)

    def __sub__(self, other) -> "UniPoly":
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly.coerce(other) - self

    def scale(self, c) -> "UniPoly":
        c = as_rational(c)
        return UniPoly(v * c for v in self._c)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return self.scale(other)
        a, b = self._c, other._c
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "UniPoly":
        return self.scale(Fraction(1) / as_rational(c))

    def __pow__(self, n: int) -> "UniPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = UniPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self._c]
        d = other.degree
        lead = Fraction(other.lc())
        q = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            f = rem[k + d] / lead
            q[k] = f
            if f:
                for i, c in enumerate(other._c):
                    rem[k + i] -= f * c
        return UniPoly(q), UniPoly(rem[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if not self._c:
            return self
        return self.scale(Fraction(1) / Fraction(self.lc()))

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self._c) if i)

    def __call__(self, t):
        acc = 0
        for c in reversed(self._c):
            acc = acc * t + c
        return as_rational(acc) if isinstance(acc, (int, Fraction)) else acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """``self(inner(t))``"""
        acc = UniPoly()
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def to_bipoly(self, var: int = 0) -> BiPoly:
        if var == 0:
            return BiPoly({(i, 0): c for i, c in enumerate(self._c)})
        return BiPoly({(0, i): c for i, c in enumerate(self._c)})

    def __repr__(self) -> str:
        from .parse import format_unipoly

        return f"UniPoly({format_unipoly(self)!r})"

    def __str__(self) -> str:
        from .parse import format_unipoly

        return format_unipoly(self)


def unipoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def gcd_many(polys: Sequence[UniPoly]) -> UniPoly:
    g = UniPoly()
    for p in polys:
        g = unipoly_gcd(g, p)
        if g.degree == 0:
            break
    return g


class _PowerCache:
    def __init__(self, base):
        self._pows = [type(base).const(1), base]

    def __getitem__(self, n: int):
        pows = self._pows
        while len(pows) <= n:
            pows.append(pows[-1] * pows[1])
        return pows[n]


def degree_form(p: BiPoly) -> BiPoly:
    """Top-degree homogeneous component of a nonzero polynomial."""
    if p.is_zero():
        raise ValueError("degree form of the zero polynomial is undefined")
    return p.homogeneous_part(p.degree)


def linear_power_root(f: BiPoly):
    """Write a homogeneous ``f`` of degree d >= 1 as ``c * l^d``.

    ``l`` is ``x + beta*y`` when ``f`` has an ``x^d`` term and ``y`` otherwise.
    Returns ``(c, l)`` or ``None`` when no rational decomposition exists.
    """
    if f.is_zero():
        raise ValueError("linear_power_root needs a nonzero form")
    if not f.is_homogeneous():
        raise ValueError("linear_power_root needs a homogeneous form")
    d = f.degree
    if d < 1:
        raise ValueError("linear_power_root needs degree >= 1")
    c = f.coeff(d, 0)
    if c:
        beta = Fraction(f.coeff(d - 1, 1)) / (d * c)
        ell = BiPoly.linear(1, beta)
    else:
        c = f.coeff(0, d)
        ell = BiPoly.y()
        if not c:
            return None
    if (ell**d).scale(c) == f:
        return c, ell
    return None


def proper_power_root(p: BiPoly):
    """Find ``(c, g, e)`` with ``p == c * g**e``, ``e >= 2`` and ``deg g >= 1``.

    Constants are split off because over an algebraically closed field they
    are themselves e-th powers.  The largest working exponent is returned;
    ``None`` if ``p`` is not a proper power.
    """
    if p.is_zero() or p.degree < 2:
        return None
    D = p.degree
    top = degree_form(p)
    # make the x-leading coefficient constant by a shear y -> y + s*x
    s = 0
    while top(1, s) == 0:
        s += 1
    q = p.shear("y", 1, s) if s else p
    lead = q.coeff(D, 0)
    monic = q / lead
    for e in sorted((e for e in range(2, D + 1) if D % e == 0), reverse=True):
        g = _monic_root(monic, D, e)
        if g is not None:
            root = g.shear("y", 1, -s) if s else g
            return lead, root, e
    return None


def _monic_root(P: BiPoly, n: int, e: int):
    # P has x-degree n and x^n coefficient 1
    m = n // e
    g = BiPoly.monomial(m, 0)
    for step in range(1, m + 1):
        R = P - g**e
        target = n - step
        row = {j: c for (i, j), c in R.items() if i == target}
        if row:
            h = BiPoly._raw({(m - step, j): as_rational(Fraction(c) / e) for j, c in row.items()})
            g = g + h
    return g if g**e == P else None
