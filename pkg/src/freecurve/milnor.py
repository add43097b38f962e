"""Graded invariants of the Jacobian ideal of a plane curve.

For a reduced homogeneous f of degree d, M(f) = S/J_f with J_f = (f_x, f_y, f_z).
The profile collects m_k = dim M(f)_k, the syzygy counts ar_k, the essential
relation counts er_k and the thresholds read off from them.

Hilbert functions are computed modulo primes from a truncated Groebner basis.
Reduction mod p can only shrink ranks, so m_k mod p >= m_k over QQ; the
elementwise minimum over several primes, confirmed by agreement, is the answer.
The per-degree matrix routines are kept as the independent oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

from .arith import BadPrime, PrimeSource
from .linalg.exact import kernel_basis_exact, rank_exact
from .linalg.graded import truncated_basis
from .linalg.modular import multi_modular_rank
from .linalg.sparse import SparseMat
from .poly import TriPoly, dim_s, monomial_basis, monomial_index

log = logging.getLogger(__name__)

INFINITE = "infinite"
ENGINES = ("gb", "matrix", "qq")
SPOT_CHECK_COLS = 200


class InconsistencyError(RuntimeError):
    """Two computations that must agree did not."""


@dataclass(frozen=True)
class CurveInput:
    f: TriPoly
    d: int = field(init=False)
    fx: TriPoly = field(init=False, repr=False)
    fy: TriPoly = field(init=False, repr=False)
    fz: TriPoly = field(init=False, repr=False)

    def __post_init__(self):
        if self.f.is_zero():
            raise ValueError("the zero polynomial does not define a curve")
        d = self.f.homogeneous_degree
        if d is None:
            raise ValueError("curve equation must be homogeneous")
        if d < 1:
            raise ValueError("curve degree must be at least 1")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "fx", self.f.diff("x"))
        object.__setattr__(self, "fy", self.f.diff("y"))
        object.__setattr__(self, "fz", self.f.diff("z"))

    @property
    def gradient(self):
        return self.fx, self.fy, self.fz

    @property
    def T(self) -> int:
        return 3 * (self.d - 2)


def smooth_reference_dim(d: int, k: int) -> int:
    """Coefficient of t^k in ((1 - t^(d-1)) / (1 - t))^3."""
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    return sum((-1) ** j * comb(3, j) * dim_s(k - j * (d - 1)) for j in range(4))


# -- matrices -------------------------------------------------------------


def _multiplication_columns(polys, k: int, src_degree: int):
    """Triplets of the map (u_1, .., u_r) -> sum u_i * polys[i] into S_k."""
    rows = monomial_index(k)
    src = monomial_basis(src_degree)
    trip = []
    for i, g in enumerate(polys):
        base = i * len(src)
        for j, (ua, ub, uc) in enumerate(src):
            for (a, b, c), v in g.items():
                trip.append((rows[(a + ua, b + ub, c + uc)], base + j, v))
    return trip


def jacobian_matrix_in_degree(c: CurveInput, k: int) -> SparseMat:
    """Matrix of (a, b, c) -> a f_x + b f_y + c f_z from S_{k-d+1}^3 to S_k.

    Rows follow :func:`monomial_basis(k)`; columns are three blocks (for a, b, c)
    in the order of :func:`monomial_basis(k-d+1)`.
    """
    src = k - c.d + 1
    n = dim_s(src)
    if n == 0:
        return SparseMat.from_triplets(dim_s(k), 0, [])
    return SparseMat.from_triplets(dim_s(k), 3 * n, _multiplication_columns(c.gradient, k, src))


def koszul_matrix(c: CurveInput, k: int) -> SparseMat:
    """Second Koszul differential in coefficient degree k.

    (u, v, w) in S_{k-d+1}^3 maps to (v f_z - w f_y, w f_x - u f_z, u f_y - v f_x)
    in S_k^3; output rows are three consecutive copies of the S_k basis.
    """
    src = k - c.d + 1
    n, nk = dim_s(src), dim_s(k)
    if n == 0:
        return SparseMat.from_triplets(3 * nk, 0, [])
    rows = monomial_index(k)
    src_mons = monomial_basis(src)
    fx, fy, fz = c.gradient
    # (input slot, output slot, polynomial, sign)
    pattern = [(1, 0, fz, 1), (2, 0, fy, -1), (2, 1, fx, 1), (0, 1, fz, -1), (0, 2, fy, 1), (1, 2, fx, -1)]
    trip = []
    for slot_in, slot_out, g, sign in pattern:
        for j, (ua, ub, uc) in enumerate(src_mons):
            for (a, b, cc), v in g.items():
                trip.append((slot_out * nk + rows[(a + ua, b + ub, cc + uc)], slot_in * n + j, sign * v))
    return SparseMat.from_triplets(3 * nk, 3 * n, trip)


def _rank(m: SparseMat, engine: str, source: PrimeSource | None = None) -> int:
    if m.cols == 0 or m.rows == 0 or m.nnz == 0:
        return 0
    if engine == "qq":
        return rank_exact(m)
    cert = multi_modular_rank(m, source=source)
    if not cert.agreement:
        raise InconsistencyError("multi-modular rank did not stabilise")
    return cert.rank


def milnor_dim(c: CurveInput, k: int, engine: str = "matrix") -> int:
    """m(f)_k = dim S_k - rank of the Jacobian map into degree k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return dim_s(k) - _rank(jacobian_matrix_in_degree(c, k), engine)


def ar_dim(c: CurveInput, k: int, engine: str = "matrix") -> int:
    """Dimension of the relations a f_x + b f_y + c f_z = 0 with a, b, c in S_k."""
    if k < 0:
        return 0
    m = jacobian_matrix_in_degree(c, k + c.d - 1)
    return m.cols - _rank(m, engine)


def koszul_image_rank(c: CurveInput, k: int, engine: str = "matrix") -> int:
    return _rank(koszul_matrix(c, k), engine)


def koszul_rank_formula(d: int, k: int) -> int:
    """Rank of the Koszul relations in coefficient degree k when J_f has depth 2.

    For a reduced curve the Koszul complex of the gradient is exact at K_2,
    so the image has dimension 3 dim S_{k-d+1} - dim S_{k-2d+2}.
    """
    return 3 * dim_s(k - d + 1) - dim_s(k - 2 * d + 2)


def er_dim(c: CurveInput, k: int, engine: str = "matrix") -> int:
    return ar_dim(c, k, engine) - koszul_image_rank(c, k, engine)


def syzygy_basis_in_degree(c: CurveInput, k: int) -> list:
    """Exact basis of the degree-k relations, as (a, b, c) triples of TriPoly.

    Each triple is checked to annihilate the gradient before it is returned.
    """
    if k < 0:
        return []
    m = jacobian_matrix_in_degree(c, k + c.d - 1)
    mons = monomial_basis(k)
    n = len(mons)
    out = []
    for vec in kernel_basis_exact(m):
        # clear denominators so the triples print with integer coefficients
        den = 1
        for v in vec:
            den = den * v.denominator // gcd(den, v.denominator)
        num = [v * den for v in vec]
        g = 0
        for v in num:
            g = gcd(g, int(v))
        g = g or 1
        parts = []
        for block in range(3):
            parts.append(TriPoly({mons[i]: Fraction(num[block * n + i]) / g for i in range(n)}))
        a, b, cc = parts
        if not (a * c.fx + b * c.fy + cc * c.fz).is_zero():
            raise InconsistencyError("kernel vector does not annihilate the gradient")
        out.append((a, b, cc))
    return out


def annihilates(c: CurveInput, triple) -> bool:
    a, b, cc = triple
    return (a * c.fx + b * c.fy + cc * c.fz).is_zero()


# -- Hilbert function ------------------------------------------------------


@dataclass
class HilbertResult:
    m: list
    primes: list
    discarded: list


def hilbert_function_mod_primes(c: CurveInput, K: int, source: PrimeSource | None = None,
                                min_agree: int = 2, max_primes: int = 12, pure=None) -> HilbertResult:
    """m(f)_k for k = 0..K from truncated Groebner bases modulo several primes."""
    source = source or PrimeSource()
    tried: set = set()
    best = None
    agreeing: list = []
    discarded: list = []
    while len(tried) < max_primes:
        p = source.fresh_prime(tried)
        tried.add(p)
        try:
            basis = truncated_basis(list(c.gradient), p, K, pure)
        except BadPrime:
            discarded.append((p, "bad"))
            continue
        m = [dim_s(k) - v for k, v in enumerate(basis.ideal_dims(K))]
        if best is None or m == best:
            best = m
            agreeing.append(p)
        else:
            merged = [min(u, v) for u, v in zip(best, m)]
            if merged == m:
                # the new prime is at least as good everywhere: earlier ones were unlucky
                discarded.extend((q, "unlucky") for q in agreeing)
                agreeing = [p]
            else:
                discarded.append((p, "unlucky"))
                if merged != best:
                    discarded.extend((q, "unlucky") for q in agreeing)
                    agreeing = []
            best = merged
        if len(agreeing) >= min_agree:
            return HilbertResult(best, agreeing, discarded)
    raise InconsistencyError(f"Hilbert function did not stabilise over {max_primes} primes")


def _hilbert_by_matrices(c: CurveInput, K: int, engine: str) -> list:
    return [milnor_dim(c, k, engine) for k in range(K + 1)]


# -- profile ---------------------------------------------------------------


@dataclass
class MilnorProfile:
    d: int
    T: int
    tau: int
    ct: object  # int or INFINITE
    st: int
    mdr: object  # int or INFINITE
    plateau_verified: bool
    m: list
    m_smooth: list
    ar: list
    er: list
    engine: str = "gb"
    primes: list = field(default_factory=list)
    ct_mdr_consistent: bool = True
    warnings: list = field(default_factory=list)

    @property
    def K(self) -> int:
        return len(self.m) - 1

    def m_at(self, k: int) -> int:
        """m(f)_k with zero at negative indices and the plateau beyond K."""
        if k < 0:
            return 0
        if k > self.K:
            if not self.plateau_verified:
                raise ValueError(f"m({k}) beyond the computed range")
            return self.tau
        return self.m[k]

    def ar_at(self, k: int) -> int:
        if k < 0:
            return 0
        return self.ar[k]

    def smooth_at(self, k: int) -> int:
        return smooth_reference_dim(self.d, k) if k >= 0 else 0

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "T": self.T,
            "tau": self.tau,
            "ct": self.ct,
            "st": self.st,
            "mdr": self.mdr,
            "plateau_verified": self.plateau_verified,
            "m": list(self.m),
            "m_smooth": list(self.m_smooth),
            "ar": list(self.ar),
            "er": list(self.er),
        }


def _read_thresholds(m, ms, tau):
    ct = INFINITE
    for k, (u, v) in enumerate(zip(m, ms)):
        if u != v:
            ct = k - 1
            break
    st = len(m) - 1
    while st > 0 and m[st - 1] == tau:
        st -= 1
    return ct, st


def full_profile(c: CurveInput, engine: str = "gb", kmax: int | None = None,
                 source: PrimeSource | None = None, spot_check: bool = True, pure=None) -> MilnorProfile:
    """Invariant profile of the curve, m computed for k = 0..K_max (K_max = T + 2).

    If the last three values of m do not agree the range is extended once by d;
    a plateau that still fails leaves ``plateau_verified`` false (typically a
    non-reduced input) and a warning.
    """
    if engine not in ENGINES:
        raise ValueError(f"engine must be one of {ENGINES}")
    d = c.d
    if d < 3:
        raise ValueError("profiles need d >= 3")
    T = c.T
    K = T + 2 if kmax is None else kmax
    if K < 2:
        raise ValueError("kmax must be at least 2")
    source = source or PrimeSource()
    warnings = []
    primes: list = []

    def hilbert(upto):
        if engine == "gb":
            res = hilbert_function_mod_primes(c, upto, source, pure=pure)
            primes[:] = res.primes
            return res.m
        return _hilbert_by_matrices(c, upto, engine)

    # ar_k needs m_{k+d-1}
    mm = hilbert(K + d - 1)
    plateau = mm[K - 2] == mm[K - 1] == mm[K]
    if not plateau:
        warnings.append(f"m not constant on [{K - 2}, {K}]; extending the range by {d}")
        log.warning(warnings[-1])
        K += d
        mm = hilbert(K + d - 1)
        plateau = mm[K - 2] == mm[K - 1] == mm[K]
        if not plateau:
            warnings.append("plateau still not reached: tau is not stable (curve may be non-reduced)")
            log.warning(warnings[-1])

    if engine == "gb" and spot_check:
        _spot_check(c, mm, K + d - 1)

    m = mm[: K + 1]
    ms = [smooth_reference_dim(d, k) for k in range(K + 1)]
    ar = [3 * dim_s(k) - dim_s(k + d - 1) + mm[k + d - 1] for k in range(K + 1)]
    if plateau and engine == "gb":
        kos = [koszul_rank_formula(d, k) for k in range(K + 1)]
    else:
        kos = [koszul_image_rank(c, k, "qq" if engine == "qq" else "matrix") for k in range(K + 1)]
    er = [a - b for a, b in zip(ar, kos)]
    if min(er) < 0:
        raise InconsistencyError("negative essential relation count")
    mdr = next((k for k, v in enumerate(er) if v), INFINITE)
    tau = m[K]
    ct, st = _read_thresholds(m, ms, tau)
    if mdr == INFINITE:
        consistent = ct == INFINITE
    else:
        consistent = ct != INFINITE and ct == mdr + d - 2
    if not consistent:
        warnings.append(f"ct={ct} but mdr+d-2={mdr if mdr == INFINITE else mdr + d - 2}")
    return MilnorProfile(d, T, tau, ct, st, mdr, plateau, m, ms, ar, er, engine, list(primes),
                         consistent, warnings)


def _spot_check(c: CurveInput, mm, top: int):
    """Compare a few Hilbert values with exact Bareiss ranks on small matrices."""
    d = c.d
    for k in sorted({d, 2 * d - 4, c.T // 2, c.T + 1}):
        if not 0 <= k <= top:
            continue
        if 3 * dim_s(k - d + 1) > SPOT_CHECK_COLS:
            continue
        mat = jacobian_matrix_in_degree(c, k)
        exact = dim_s(k) - rank_exact(mat)
        if exact != mm[k]:
            raise InconsistencyError(f"m({k}): modular {mm[k]} vs exact {exact}")
