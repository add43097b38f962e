"""Explicit curve families with their declared invariants.

Each generator returns a :class:`CurveSpec`: the homogeneous equation, the
values it is expected to have (Tjurina number, exponents, Milnor number,
freeness) and a short note on where each expectation comes from.  Family ids
such as ``prop2i`` and ``thm2ii`` are the stable names used on the command line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .poly import TriPoly, X, Y, Z, exact_divide, homogenize


# -- singularity metadata ---------------------------------------------------


@dataclass(frozen=True)
class SingularityType:
    """One singular point, described topologically.

    kind is "cusp" (one Puiseux pair (a, b), mu = (a-1)(b-1)), "A" (A_k, mu = k),
    "ordinary" (r smooth transversal branches, mu = (r-1)^2) or "unibranch"
    (a cusp known only through its Milnor number).
    """

    kind: str
    params: tuple
    mu: int

    @classmethod
    def cusp(cls, a: int, b: int):
        return cls("cusp", (a, b), (a - 1) * (b - 1))

    @classmethod
    def a_k(cls, k: int):
        return cls("A", (k,), k)

    @classmethod
    def ordinary(cls, r: int):
        return cls("ordinary", (r,), (r - 1) ** 2)

    @classmethod
    def unibranch(cls, mu: int, label: str = ""):
        return cls("unibranch", (label,) if label else (), mu)

    def label(self) -> str:
        if self.kind == "cusp":
            return f"cusp{self.params}"
        if self.kind == "A":
            return f"A_{self.params[0]}"
        if self.kind == "ordinary":
            return f"ordinary {self.params[0]}-fold point"
        return f"unibranch ({self.params[0]})" if self.params else "unibranch"


@dataclass(frozen=True)
class SingularityMeta:
    types: tuple
    verified: bool = True  # False for non-default parameters nobody has checked

    def __post_init__(self):
        if any(t.mu <= 0 for t in self.types):
            raise ValueError("Milnor numbers of singular points are positive")

    @property
    def mu(self) -> int:
        return sum(t.mu for t in self.types)

    def to_json(self) -> dict:
        return {"types": [t.label() for t in self.types], "mu": self.mu, "verified": self.verified}


# -- specs -----------------------------------------------------------------


@dataclass
class Expected:
    tau: int | None = None
    mu: int | None = None
    d1: int | None = None
    d2: int | None = None
    free: bool | None = None
    rigid: bool | None = None
    irreducible: bool | None = None
    rational_cuspidal: bool | None = None

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass
class CurveSpec:
    id: str
    f: TriPoly
    d: int
    expected: Expected = field(default_factory=Expected)
    singularities: SingularityMeta | None = None
    provenance: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.f.homogeneous_degree != self.d:
            raise AssertionError(f"{self.id}: equation is not homogeneous of degree {self.d}")

    def to_json(self, with_poly: bool = False) -> dict:
        out = {
            "id": self.id,
            "degree": self.d,
            "parameters": {k: str(v) for k, v in self.params.items()},
            "provenance": self.provenance,
            "expected": self.expected.to_json(),
            "singularities": self.singularities.to_json() if self.singularities else None,
        }
        if with_poly:
            out["polynomial"] = self.f.render()
        return out


def _fmt(v) -> str:
    if isinstance(v, (str, int)):
        return str(v)
    return str(Fraction(v))


def _make_id(name: str, params: dict) -> str:
    if not params:
        return name
    return name + ":" + ",".join(f"{k}={_fmt(v)}" for k, v in params.items())


def _rational_cuspidal_mu(d: int) -> int:
    # genus formula for a rational curve whose singular points are all unibranch
    return (d - 1) * (d - 2)


def _coeffs(given, lo: int, hi: int, default_top=1) -> dict:
    """Coefficients a_lo..a_hi, defaulting to 0 except a_hi = default_top."""
    out = {i: 0 for i in range(lo, hi + 1)}
    out[hi] = default_top
    if given is not None:
        given = dict(given)
        bad = set(given) - set(out)
        if bad:
            raise ValueError(f"coefficient indices must lie in [{lo}, {hi}], got {sorted(bad)}")
        out.update({i: Fraction(v) for i, v in given.items()})
    return out


# -- generators --------------------------------------------------------------


def gen_stfam(d: int = 7, a=1, b=0, c=0) -> CurveSpec:
    """y^(d-1) z + x^d + a x^2 y^(d-2) + b x y^(d-1) + c y^d, a nonzero."""
    if d < 5:
        raise ValueError("the family is defined for d >= 5")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise ValueError("coefficient a must be nonzero")
    f = Y ** (d - 1) * Z + X**d + (X**2 * Y ** (d - 2)).scale(a) + (X * Y ** (d - 1)).scale(b) + (Y**d).scale(c)
    return CurveSpec(
        _make_id("stfam", {"d": d, "a": a, "b": b, "c": c}), f, d,
        Expected(tau=d * d - 4 * d + 7, mu=_rational_cuspidal_mu(d), d1=2, d2=d - 3, free=True,
                 irreducible=True, rational_cuspidal=True),
        # Newton polygon is the segment (0, d-1)-(d, 0): the cusp is u^(d-1) + v^d
        SingularityMeta((SingularityType.cusp(d, d - 1),)),
        "one-cusp free family of multiplicity d-1; tau = d^2-4d+7 as for every irreducible "
        "free curve with d1 = 2; cusp type read off the Newton polygon",
        {"d": d, "a": a, "b": b, "c": c},
    )


def gen_valles_pencil() -> CurveSpec:
    """xyz (x^3+y^3+z^3) ((x^3+y^3+z^3)^3 - 27 x^3 y^3 z^3), a union of pencil members."""
    s = X**3 + Y**3 + Z**3
    f = X * Y * Z * s * (s**3 - (X**3 * Y**3 * Z**3).scale(27))
    return CurveSpec(
        "valles", f, 15, Expected(free=True, irreducible=False), None,
        "degree-15 free curve built from members of the Hesse pencil; tau not stated, derived",
    )


def gen_prop1(k: int = 1, coeffs=None) -> CurveSpec:
    """(y^k z + sum_{i=1}^{k+1} a_i x^i y^(k+1-i))^2 - x y^(2k+1), degree 2k+2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    a = _coeffs(coeffs, 1, k + 1)
    if a[k + 1] == 0:
        raise ValueError(f"a_{k + 1} must be nonzero")
    inner = Y**k * Z
    for i, v in a.items():
        inner = inner + (X**i * Y ** (k + 1 - i)).scale(v)
    f = inner**2 - X * Y ** (2 * k + 1)
    d = 2 * k + 2
    return CurveSpec(
        _make_id("prop1", {"k": k, **{f"a{i}": v for i, v in a.items()}}), f, d,
        Expected(mu=_rational_cuspidal_mu(d), irreducible=True, rational_cuspidal=True,
                 free=False if d == 4 else None),
        SingularityMeta((SingularityType.unibranch(_rational_cuspidal_mu(d), f"multiplicity {d - 2}"),),
                        verified=coeffs is None),
        "rational unicuspidal curve of type (d, d-2); mu from the genus formula",
        {"k": k, **{f"a{i}": v for i, v in a.items()}},
    )


F3 = Y * Z**2 - X**2 * Z + X**3


def prop2i_chain(d: int) -> list:
    """[(f_3, a_3), ..., (f_d, a_d)] for the two-cusp recursion.

    a_j is the coefficient of x^j in f_j; f_{j+1} = f_j(x^2, xy, yz + a_j x^2) / (x^(j-2) y).
    """
    if d < 3:
        raise ValueError("the recursion starts at d = 3")
    f = F3
    chain = [(f, f.coefficient((3, 0, 0)))]
    for j in range(3, d):
        a = chain[-1][1]
        g = f.substitute(X**2, X * Y, Y * Z + (X**2).scale(a))
        f = exact_divide(g, X ** (j - 2) * Y)
        chain.append((f, f.coefficient((j + 1, 0, 0))))
    return chain


def gen_prop2i(d: int = 6) -> CurveSpec:
    """Two-cusp rational curve of degree d from the substitution recursion."""
    f, _ = prop2i_chain(d)[-1]
    types = (SingularityType.cusp(d - 1, d - 2), SingularityType.a_k(2 * d - 4)) if d >= 4 else (
        SingularityType.cusp(2, 3),)
    return CurveSpec(
        _make_id("prop2i", {"d": d}), f, d,
        Expected(tau=d * d - 4 * d + 7 if d >= 5 else None, mu=_rational_cuspidal_mu(d),
                 d1=2 if d >= 5 else None, d2=d - 3 if d >= 5 else None,
                 free=d >= 5, rigid=True, irreducible=True, rational_cuspidal=True),
        SingularityMeta(types),
        "rigid two-cusp curve: cusp (d-1, d-2) plus a (2, 2d-3) cusp, i.e. A_{2d-4}; "
        "free with d1 = 2 for 5 <= d <= 15; mu = (d-1)(d-2) (the value d^2-3d+4 "
        "double counts the A singularity)",
        {"d": d},
    )


def gen_prop2ii(k: int = 2, coeffs=None) -> CurveSpec:
    """(y^(k-1) z + sum_{i=2}^{k} a_i x^i y^(k-i))^2 y - x^(2k+1), degree 2k+1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    a = _coeffs(coeffs, 2, k)
    inner = Y ** (k - 1) * Z
    for i, v in a.items():
        inner = inner + (X**i * Y ** (k - i)).scale(v)
    f = inner**2 * Y - X ** (2 * k + 1)
    d = 2 * k + 1
    default = coeffs is None or all(a[i] == (1 if i == k else 0) for i in a)
    exp = Expected(mu=2 * k * (2 * k - 1), irreducible=True, rational_cuspidal=True)
    if default:
        exp = Expected(tau=3 * k * k, mu=2 * k * (2 * k - 1), d1=k, d2=k, free=True,
                       irreducible=True, rational_cuspidal=True)
    return CurveSpec(
        _make_id("prop2ii", {"k": k, **{f"a{i}": v for i, v in a.items()}}), f, d, exp,
        SingularityMeta((SingularityType.cusp(2 * k + 1, 2 * k - 1), SingularityType.a_k(2 * k)),
                        verified=default),
        "two-cusp curve with an A_{d-1} point; with a_k = 1 and the rest 0 it is free "
        "with d1 = d2 = k and tau = 3k^2",
        {"k": k, **{f"a{i}": v for i, v in a.items()}},
    )


def gen_thm2ii(k: int = 2) -> CurveSpec:
    """(y^(k-1) z + x^k)^2 y - x^(2k+1): free with exponents (k, k)."""
    spec = gen_prop2ii(k)
    spec.id = _make_id("thm2ii", {"k": k})
    spec.params = {"k": k}
    spec.provenance = ("infinite free series (y^(k-1)z + x^k)^2 y - x^(2k+1): tau = 3k^2, "
                       "mu = 2k(2k-1), d1 = d2 = k; cusps (2k+1, 2k-1) and (2k+1, 2)")
    return spec


def gen_prop2iii(k: int = 0, j: int = 2, coeffs=None) -> CurveSpec:
    """(y^(k+j) z + sum_{i=2}^{k+j+1} a_i x^i y^(k+j+1-i))^2 - x^(2j+1) y^(2k+1), d = 2k+2j+2 >= 6."""
    if k < 0 or j < 1:
        raise ValueError("need k >= 0 and j >= 1")
    if k + j < 2:
        raise ValueError("the family starts at degree 2k+2j+2 = 6")
    n = k + j + 1
    a = _coeffs(coeffs, 2, n)
    if a[n] == 0:
        raise ValueError(f"a_{n} must be nonzero")
    inner = Y ** (k + j) * Z
    for i, v in a.items():
        inner = inner + (X**i * Y ** (n - i)).scale(v)
    f = inner**2 - X ** (2 * j + 1) * Y ** (2 * k + 1)
    d = 2 * k + 2 * j + 2
    mu = _rational_cuspidal_mu(d)
    return CurveSpec(
        _make_id("prop2iii", {"k": k, "j": j, **{f"a{i}": v for i, v in a.items()}}), f, d,
        Expected(mu=mu, irreducible=True, rational_cuspidal=True),
        SingularityMeta((SingularityType.unibranch(mu - 2 * j, f"multiplicity {d - 2}"),
                         SingularityType.a_k(2 * j)), verified=False),
        "two-cusp curve: a cusp of multiplicity d-2 and an A_{2j} point",
        {"k": k, "j": j, **{f"a{i}": v for i, v in a.items()}},
    )


def prop3_numerator(a: int, b: int):
    """Affine numerator x^(2a+1) y^(2b+1) - ((x-y)^(d-2) - x y g)^2 and d."""
    d = a + b + 2
    a1 = Fraction(2 * a - 1, 2)
    # h(t) = sum_k C(a1, k) (t-1)^k, so g = sum_k C(a1, k) (x-y)^k y^(d-3-k)
    g = TriPoly()
    binom = Fraction(1)
    for k in range(d - 2):
        g = g + ((X - Y) ** k * Y ** (d - 3 - k)).scale(binom)
        binom = binom * (a1 - k) / (k + 1)
    w = (X - Y) ** (d - 2) - X * Y * g
    return X ** (2 * a + 1) * Y ** (2 * b + 1) - w * w, d


def gen_prop3(a: int = 2, b: int = 1) -> CurveSpec:
    """Tricuspidal curve of type (d, d-2), d = a + b + 2, by exact division."""
    if not a >= b >= 1:
        raise ValueError("need a >= b >= 1")
    num, d = prop3_numerator(a, b)
    affine = exact_divide(num, (X - Y) ** (d - 2))
    if affine.total_degree() != d:
        raise AssertionError("tricuspidal construction produced the wrong degree")
    f = homogenize(affine, d)
    mu = d * d - 3 * d + 2
    return CurveSpec(
        _make_id("prop3", {"a": a, "b": b}), f, d,
        Expected(tau=d * d - 4 * d + 7, mu=mu, d1=2, d2=d - 3, free=True if 5 <= d <= 10 else None,
                 rigid=True, irreducible=True, rational_cuspidal=True),
        SingularityMeta((SingularityType.unibranch(mu, "three cusps, total"),)),
        "rigid tricuspidal curve of type (d, d-2); free with d1 = 2 for 5 <= d <= 10, "
        "mu = d^2-3d+2",
        {"a": a, "b": b},
    )


def gen_prop4i(k: int = 3) -> CurveSpec:
    """(zy - x^2)^k - x y^(2k-1): unicuspidal of degree 2k with Puiseux pair (k, 4k-1)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    f = (Z * Y - X**2) ** k - X * Y ** (2 * k - 1)
    d = 2 * k
    free = True if 3 <= k <= 10 else (False if k == 2 else None)
    return CurveSpec(
        _make_id("prop4i", {"k": k}), f, d,
        Expected(tau=d * d - 4 * d + 7 if free else None, mu=(k - 1) * (4 * k - 2),
                 d1=2 if free else None, d2=d - 3 if free else None, free=free,
                 irreducible=True, rational_cuspidal=True),
        SingularityMeta((SingularityType.cusp(k, 4 * k - 1),)),
        "unicuspidal curve with Puiseux pair (k, 4k-1); free with d1 = 2 for 6 <= d <= 20; "
        "rational quartics are never free",
        {"k": k},
    )


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


FIB_EXPECTED = {0: (5, 12, 12, 2), 1: (13, 108, 132, 6), 2: (34, 823, 1056, 14), 3: (89, 5889, 7656, 35)}


def prop4ii_affine(k: int) -> TriPoly:
    """P_k from P_{-1} = y - x^2, P_0, Q_{-1} = y and P_j = (G^F(2j+3) + Q_j^3) / Q_{j-1}."""
    P = [Y - X**2, (Y - X**2) ** 2 - (X * Y**2).scale(2) * (Y - X**2) + Y**5]
    Q = [Y, Y - X**2]
    G = X * Y - X**3 - Y**3
    for j in range(1, k + 1):
        qj = P[j]  # Q_j = P_{j-1}; list index is shifted by one
        P.append(exact_divide(G ** fibonacci(2 * j + 3) + qj**3, Q[j]))
        Q.append(qj)
    return P[k + 1]


def gen_prop4ii(k: int = 0) -> CurveSpec:
    """Unicuspidal curve of Fibonacci degree F(2k+5) from the exact-division recursion."""
    if k < 0:
        raise ValueError("k must be non-negative")
    affine = prop4ii_affine(k)
    d = fibonacci(2 * k + 5)
    if affine.total_degree() != d:
        raise AssertionError("Fibonacci recursion produced the wrong degree")
    f = homogenize(affine, d)
    pa, pb = fibonacci(2 * k + 3), fibonacci(2 * k + 7)
    exp = Expected(irreducible=True, rational_cuspidal=True, mu=(pa - 1) * (pb - 1))
    if k in FIB_EXPECTED:
        _, tau, mu, d1 = FIB_EXPECTED[k]
        exp = Expected(tau=tau, mu=mu, d1=d1, d2=d - 1 - d1, free=True, irreducible=True,
                       rational_cuspidal=True)
    return CurveSpec(
        _make_id("prop4ii", {"k": k}), f, d, exp,
        SingularityMeta((SingularityType.cusp(pa, pb),)),
        "unicuspidal curve of degree F(2k+5) with Puiseux pair (F(2k+3), F(2k+7)); "
        "free for 0 <= k <= 3 with the listed tau, mu and d1",
        {"k": k},
    )


_LINES = {
    "d7": ([(1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1), (1, 1, 0), (1, -1, 0), (0, 0, 1)], 27, (3, 3)),
    "d8": ([(1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1), (1, 1, 0), (1, -1, 0), (0, 1, 0), (0, 0, 1)],
           37, (3, 4)),
    "d9": ([(1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1), (1, 1, 0), (1, -1, 0), (1, 0, 0), (0, 1, 0),
            (0, 0, 1)], 49, (3, 5)),
}


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _normalize_point(p):
    for c in p:
        if c:
            return tuple(Fraction(x, c) for x in p)
    raise ValueError("lines coincide")


def arrangement_points(lines) -> dict:
    """Intersection points of distinct lines, mapped to how many lines pass through them."""
    pts: dict = {}
    for u, v in combinations(lines, 2):
        pt = _normalize_point(_cross(u, v))
        pts.setdefault(pt, set()).update((u, v))
    return {pt: len(ls) for pt, ls in pts.items()}


def gen_line_arrangement(which: str = "d9") -> CurveSpec:
    """One of the free line arrangements of degree 7, 8 or 9 with known tau."""
    if which not in _LINES:
        raise ValueError(f"arrangement must be one of {sorted(_LINES)}")
    lines, tau, (d1, d2) = _LINES[which]
    f = TriPoly.const(1)
    for a, b, c in lines:
        f = f * (X.scale(a) + Y.scale(b) + Z.scale(c))
    d = len(lines)
    types = tuple(SingularityType.ordinary(r) for r in sorted(arrangement_points(lines).values()))
    return CurveSpec(
        _make_id("arrangement", {"which": which}), f, d,
        Expected(tau=tau, mu=tau, d1=d1, d2=d2, free=True, irreducible=False),
        SingularityMeta(types),
        f"free line arrangement of degree {d}; tau = mu = {tau}, the sum of (r-1)^2 over r-fold points",
        {"which": which},
    )


# -- syzygy templates --------------------------------------------------------


def syzygy_templates_thm2ii(k: int):
    """The two degree-k relations (r1, r2) among the partials of (y^(k-1)z + x^k)^2 y - x^(2k+1)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    r1 = (
        (X**k).scale(2) + (Y ** (k - 1) * Z).scale(2),
        (X**k).scale(4 * k + 2) - (X ** (k - 1) * Y).scale(4 * k) - (Y ** (k - 1) * Z).scale(8 * k * k - 2),
        (X ** (k - 1) * Z).scale(4 * k * (k - 1)) + (Y ** (k - 2) * Z**2).scale(8 * k**3 - 4 * k * k - 2 * k + 1),
    )
    r2 = (TriPoly(), (Y**k).scale(-2), X**k + (Y ** (k - 1) * Z).scale(2 * k - 1))
    return r1, r2


def syzygy_template_rkeq2i(d: int, a=None, plus_sign: bool = False):
    """(A_d, B_d, C_d), the degree-2 relation of the two-cusp curve of degree d.

    ``a`` is a_{d-1}, the coefficient of x^(d-1) in f_{d-1}; it is taken from
    the recursion when omitted.  The relation holds with
    A_d = (d-2) x^2 - 4(d-3) xy; ``plus_sign=True`` gives the variant with
    +4(d-3) xy, which does not annihilate the gradient.
    """
    if d < 5:
        raise ValueError("template is stated for d >= 5")
    if a is None:
        a = prop2i_chain(d - 1)[-1][1]
    sign = 1 if plus_sign else -1
    A = (X**2).scale(d - 2) + (X * Y).scale(sign * 4 * (d - 3))
    B = (X * Y).scale(2 * (d - 1)) - (Y**2).scale(4 * (2 * d - 3))
    C = (X**2).scale(2 * d * (2 * d - 7) * Fraction(a)) - (X * Z).scale((d - 1) * (d - 2)) + (
        Y * Z).scale(2 * (d - 2) * (2 * d - 3))
    return A, B, C


# -- catalogue ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilyEntry:
    name: str
    generator: object
    params: tuple  # (name, type, default)
    summary: str


CATALOGUE = {
    e.name: e
    for e in [
        FamilyEntry("stfam", gen_stfam, (("d", int, 7), ("a", Fraction, 1), ("b", Fraction, 0), ("c", Fraction, 0)),
                    "y^(d-1)z + x^d + a x^2 y^(d-2) + b x y^(d-1) + c y^d, free for d >= 5"),
        FamilyEntry("valles", gen_valles_pencil, (), "degree-15 free curve from the Hesse pencil"),
        FamilyEntry("prop1", gen_prop1, (("k", int, 1),), "rational unicuspidal curves of type (2k+2, 2k)"),
        FamilyEntry("prop2i", gen_prop2i, (("d", int, 6),), "rigid two-cusp curves by substitution recursion"),
        FamilyEntry("prop2ii", gen_prop2ii, (("k", int, 2),), "two-cusp curves of odd degree 2k+1"),
        FamilyEntry("thm2ii", gen_thm2ii, (("k", int, 2),), "(y^(k-1)z + x^k)^2 y - x^(2k+1), exponents (k, k)"),
        FamilyEntry("prop2iii", gen_prop2iii, (("k", int, 0), ("j", int, 2)), "two-cusp curves with an A_{2j} point"),
        FamilyEntry("prop3", gen_prop3, (("a", int, 2), ("b", int, 1)), "rigid tricuspidal curves, d = a+b+2"),
        FamilyEntry("prop4i", gen_prop4i, (("k", int, 3),), "(zy - x^2)^k - x y^(2k-1), unicuspidal"),
        FamilyEntry("prop4ii", gen_prop4ii, (("k", int, 0),), "Fibonacci unicuspidal curves of degree F(2k+5)"),
        FamilyEntry("arrangement", gen_line_arrangement, (("which", str, "d9"),), "free line arrangements d7, d8, d9"),
    ]
}


def generate(name: str, **params) -> CurveSpec:
    if name not in CATALOGUE:
        raise KeyError(f"unknown family {name!r}; known: {', '.join(CATALOGUE)}")
    entry = CATALOGUE[name]
    allowed = {p[0] for p in entry.params}
    extra = set(params) - allowed
    if extra:
        raise ValueError(f"family {name} does not take {sorted(extra)}")
    return entry.generator(**params)


def catalogue_json() -> list:
    out = []
    for e in CATALOGUE.values():
        spec = e.generator()
        out.append({
            "id": e.name,
            "default_id": spec.id,
            "degree": spec.d,
            "parameters": {p: _fmt(default) for p, _, default in e.params},
            "summary": e.summary,
            "provenance": spec.provenance,
            "expected": spec.expected.to_json(),
        })
    return out


def smooth_fermat(d: int) -> TriPoly:
    return X**d + Y**d + Z**d


def binomial_free_ar(k: int, d1: int, d2: int) -> int:
    """Degree-k part of a free module with generators in degrees d1 and d2."""
    return sum(comb(k - e + 2, 2) for e in (d1, d2) if k - e >= 0)
