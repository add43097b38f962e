"""Sparse polynomials in x, y, z with exact rational coefficients.

Terms are stored as ``{(ex, ey, ez): coefficient}``.  Coefficients are kept
canonical: an ``int`` when integral, otherwise a reduced ``Fraction``.  The
global monomial order is graded lexicographic with x > y > z.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import comb
from numbers import Rational

VARS = ("x", "y", "z")
_UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class NotDivisible(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


def _canon(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _canon(Fraction(c))
    raise TypeError(f"coefficient must be an exact rational, got {c!r}")


def order_key(m):
    """Sort key realising grlex x > y > z (larger key = larger monomial)."""
    return (m[0] + m[1] + m[2], m[0], m[1])


def monomial_basis(k: int) -> list:
    """The C(k+2, 2) monomials of degree k, largest first."""
    if k < 0:
        return []
    return [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]


def monomial_index(k: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(k))}


def dim_s(k: int) -> int:
    """dim S_k = C(k+2, 2), zero for negative k."""
    return comb(k + 2, 2) if k >= 0 else 0


class TriPoly:
    __slots__ = ("_terms", "_hdeg", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _canon(c)
                if c:
                    m = tuple(int(e) for e in m)
                    if len(m) != 3 or min(m) < 0:
                        raise ValueError(f"bad exponent triple {m!r}")
                    clean[m] = c
        self._terms = clean
        self._hdeg = _MISSING
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # caller guarantees canonical nonzero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hdeg = _MISSING
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name: str):
        return cls({_UNIT[VARS.index(name)]: 1})

    @classmethod
    def monomial(cls, exps, coef=1):
        return cls({tuple(exps): coef})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m):
        return self._terms.get(tuple(m), 0)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=order_key)
        return m, self._terms[m]

    def total_degree(self) -> int:
        """Largest total degree of a term (-1 for the zero polynomial)."""
        return max((sum(m) for m in self._terms), default=-1)

    @property
    def homogeneous_degree(self):
        """Degree if homogeneous, else None.  Zero counts as homogeneous of degree -1."""
        if self._hdeg is _MISSING:
            degs = {sum(m) for m in self._terms}
            if not degs:
                self._hdeg = -1
            elif len(degs) == 1:
                self._hdeg = degs.pop()
            else:
                self._hdeg = None
        return self._hdeg

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree is not None

    def variables(self) -> set:
        out = set()
        for m in self._terms:
            for i in range(3):
                if m[i]:
                    out.add(VARS[i])
        return out

    # -- ring operations --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TriPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == TriPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _lift(other):
        if isinstance(other, TriPoly):
            return other
        if isinstance(other, (int, Rational)):
            return TriPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _canon(v)
            else:
                out.pop(m, None)
        return TriPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for (m1x, m1y, m1z), c1 in b.items():
            for (m2x, m2y, m2z), c2 in a.items():
                key = (m1x + m2x, m1y + m2y, m1z + m2z)
                out[key] = get(key, 0) + c1 * c2
        return TriPoly._raw({m: _canon(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        c = _canon(c)
        if not c:
            return TriPoly()
        return TriPoly._raw({m: _canon(v * c) for m, v in self._terms.items()})

    def mul_monomial(self, exps, coef=1):
        ex, ey, ez = exps
        coef = _canon(coef)
        if not coef:
            return TriPoly()
        return TriPoly._raw(
            {(a + ex, b + ey, c + ez): _canon(v * coef) for (a, b, c), v in self._terms.items()}
        )

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = TriPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and substitution ----------------------------------------

    def diff(self, var: str) -> "TriPoly":
        i = VARS.index(var)
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = _canon(c * e)
        return TriPoly._raw(out)

    def substitute(self, sx, sy, sz) -> "TriPoly":
        subs = [TriPoly._lift(s) for s in (sx, sy, sz)]
        caches = [{0: TriPoly.const(1)} for _ in range(3)]

        def power(i, e):
            cache = caches[i]
            if e not in cache:
                k = max(j for j in cache if j < e)
                val = cache[k]
                for j in range(k + 1, e + 1):
                    val = val * subs[i]
                    cache[j] = val
            return cache[e]

        total = {}
        for m, c in self._terms.items():
            term = power(0, m[0]) * power(1, m[1]) * power(2, m[2])
            for mm, v in term._terms.items():
                total[mm] = total.get(mm, 0) + v * c
        return TriPoly._raw({m: _canon(c) for m, c in total.items() if c})

    def __call__(self, x, y, z):
        """Evaluate at exact numbers (or substitute polynomials)."""
        if all(isinstance(v, (int, Rational)) for v in (x, y, z)):
            total = 0
            for (a, b, c), v in self._terms.items():
                total += v * x**a * y**b * z**c
            return _canon(total)
        return self.substitute(x, y, z)

    def render(self) -> str:
        return render(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"TriPoly({render(self)!r})"


_MISSING = object()


def partial_derivative(p: TriPoly, var: str) -> TriPoly:
    return p.diff(var)


def substitute(p: TriPoly, sx, sy, sz) -> TriPoly:
    return p.substitute(sx, sy, sz)


def gradient(p: TriPoly):
    return p.diff("x"), p.diff("y"), p.diff("z")


def exact_divide(p: TriPoly, q: TriPoly) -> TriPoly:
    """Return r with p = q*r; raise :class:`NotDivisible` otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    (qx, qy, qz), qc = q.leading_term()
    q_tail = [(m, c) for m, c in q.items() if m != (qx, qy, qz)]
    rem = dict(p.items())
    heap = [(-order_key(m)[0], -m[0], -m[1], m) for m in rem]
    heapq.heapify(heap)
    quotient = {}
    while heap:
        *_, m = heapq.heappop(heap)
        c = rem.pop(m, 0)
        if not c:
            continue
        e = (m[0] - qx, m[1] - qy, m[2] - qz)
        if min(e) < 0:
            raise NotDivisible(f"leading monomial {m} of the remainder is not divisible")
        if isinstance(c, int) and isinstance(qc, int) and c % qc == 0:
            t = c // qc
        else:
            t = _canon(Fraction(c) / qc)
        quotient[e] = t
        for (a, b, cc), v in q_tail:
            key = (a + e[0], b + e[1], cc + e[2])
            old = rem.get(key)
            new = (old or 0) - t * v
            if new:
                rem[key] = _canon(new)
                if old is None:
                    heapq.heappush(heap, (-(key[0] + key[1] + key[2]), -key[0], -key[1], key))
            elif old is not None:
                del rem[key]
    return TriPoly._raw(quotient)


def homogenize(p: TriPoly, d: int) -> TriPoly:
    """z**d * p(x/z, y/z, 1) for an affine p, or p unchanged when already of degree d.

    A z appearing in p is treated as a homogenizing variable already present,
    so only the total degree matters.
    """
    deg = p.total_degree()
    if deg > d:
        raise ValueError(f"polynomial of degree {deg} cannot be homogenized to degree {d}")
    out = {}
    for (a, b, c), v in p.items():
        out[(a, b, c + d - a - b - c)] = v
    return TriPoly._raw(out)


def _format_coef(c) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def _format_monomial(m) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p: TriPoly) -> str:
    """Canonical text: descending grlex order, e.g. ``x^4 - x^3*z + 1/2*y^2*z^2``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(m)
        if not mono:
            body = _format_coef(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coef(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


X = TriPoly.var("x")
Y = TriPoly.var("y")
Z = TriPoly.var("z")
