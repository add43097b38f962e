"""Freeness tests, exponents and the structural checks on free curves.

A reduced curve C: f = 0 is free when its module of relations among
f_x, f_y, f_z is free; then it has two generators of degrees d1 <= d2 with
d1 + d2 = d - 1.  Everything here is read off a :class:`MilnorProfile`, apart
from the saturation defects, which also have a direct linear-algebra oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .arith import BadPrime, PrimeSource
from .families import SingularityMeta, binomial_free_ar
from .linalg.exact import rank_exact, rref_exact
from .linalg.modular import _reduced_rows, echelon_mod_p, row_basis_dense_mod_p
from .linalg.sparse import SparseMat
from .milnor import (INFINITE, CurveInput, InconsistencyError, MilnorProfile, hilbert_function_mod_primes,
                     jacobian_matrix_in_degree)
from .poly import dim_s, monomial_basis, monomial_index

log = logging.getLogger(__name__)

UNCOMPUTED = "uncomputed"


def _c2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


# -- freeness criteria -------------------------------------------------------


def freeness_by_balance(p: MilnorProfile) -> bool:
    """m_{2d-5-j} + ar_j = tau for -1 <= j <= d-2, together with ar_{d-2} != 0."""
    if not p.plateau_verified:
        raise ValueError("balance test needs a verified tau plateau")
    d = p.d
    if p.ar_at(d - 2) == 0:
        return False
    return all(p.m_at(2 * d - 5 - j) + p.ar_at(j) == p.tau for j in range(-1, d - 1))


def freeness_by_midpoint(p: MilnorProfile) -> bool:
    """The single identity m_[T/2] + m_{T-[T/2]} - m_s[T/2] = tau."""
    h = p.T // 2
    return p.m_at(h) + p.m_at(p.T - h) - p.smooth_at(h) == p.tau


def exponent_roots(d: int, tau: int):
    """Integer roots of t^2 - (d-1) t + (d-1)^2 - tau, or None."""
    delta = 4 * tau - 3 * (d - 1) ** 2
    if delta < 0:
        return None
    s = isqrt(delta)
    if s * s != delta or (d - 1 + s) % 2:
        return None
    return (d - 1 - s) // 2, (d - 1 + s) // 2


def exponents(p: MilnorProfile):
    """(d1, d2) of a free curve, cross-checked against mdr, ct, st and the ar census."""
    roots = exponent_roots(p.d, p.tau)
    if roots is None:
        raise InconsistencyError(f"exponent quadratic has no integer roots (d={p.d}, tau={p.tau})")
    d1, d2 = roots
    d = p.d
    problems = []
    if p.mdr != d1:
        problems.append(f"mdr={p.mdr} but d1={d1}")
    if p.ct != d + d1 - 2:
        problems.append(f"ct={p.ct} but d+d1-2={d + d1 - 2}")
    if p.st != d + d2 - 3:
        problems.append(f"st={p.st} but d+d2-3={d + d2 - 3}")
    for k, a in enumerate(p.ar):
        if a != binomial_free_ar(k, d1, d2):
            problems.append(f"ar_{k}={a} but a free module on degrees {d1},{d2} has {binomial_free_ar(k, d1, d2)}")
            break
    if problems:
        raise InconsistencyError("; ".join(problems))
    return d1, d2


def hp_hilbert_identities(p: MilnorProfile, d1: int, d2: int) -> bool:
    """m_{d+j} = m_s(d+j) + C(j-d1+3, 2) for d1-2 <= j <= d2-3, and the tau identity."""
    d = p.d
    ok = all(p.m_at(d + j) == p.smooth_at(d + j) + _c2(j - d1 + 3) for j in range(d1 - 2, d2 - 2))
    return ok and p.tau == p.smooth_at(d + d2 - 3) + _c2(d2 - d1)


@dataclass
class StructuralChecks:
    applicable: bool
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def wh_structural_checks(p: MilnorProfile, irreducible: bool | None, d1: int, d2: int) -> StructuralChecks:
    """Bounds that every irreducible free curve satisfies.

    A violation on an input declared irreducible and certified free is a bug,
    so it raises.  For other inputs the values are only recorded.
    """
    d, tau = p.d, p.tau
    delta = 4 * tau - 3 * (d - 1) ** 2
    checks = {
        "d_at_least_5": d >= 5,
        "delta_square": delta >= 0 and isqrt(delta) ** 2 == delta,
        "delta_is_gap_square": delta == (d2 - d1) ** 2,
        "d1_at_least_2": d1 >= 2,
    }
    if d == 5:
        checks["quintic_tau_12"] = tau == 12 and d1 == d2 == 2
    elif d >= 6:
        checks["tau_bounds"] = 3 * (d - 1) ** 2 <= 4 * tau and tau <= d * d - 4 * d + 7
    out = StructuralChecks(bool(irreducible), checks)
    if not irreducible:
        out.notes.append("reducible or undeclared input: bounds recorded, not enforced")
        return out
    if not out.ok:
        bad = [k for k, v in checks.items() if not v]
        raise InconsistencyError(f"irreducible free curve violates {bad}")
    return out


@dataclass
class EulerCheck:
    mu: int | None
    EC: int | None
    EU: int | None
    cuspidal_consistent: bool | None
    note: str = ""


def euler_and_cuspidal_check(p: MilnorProfile, d1: int, d2: int, meta: SingularityMeta | None,
                             irreducible: bool | None = None) -> EulerCheck:
    """E(C) = 2 - (d-1)(d-2) + mu, E(U) = tau - mu + (d1-1)(d2-1).

    An irreducible free curve is rational cuspidal exactly when E(U) = 1, that
    is (d1-1)(d2-1) = mu - tau + 1.
    """
    if meta is None:
        return EulerCheck(None, None, None, None, "mu unknown, skipped")
    d, mu = p.d, meta.mu
    EC = 2 - (d - 1) * (d - 2) + mu
    EU = p.tau - mu + (d1 - 1) * (d2 - 1)
    if 3 - EC != EU:
        raise InconsistencyError(f"E(U)={EU} but 3 - E(C) = {3 - EC}")
    if irreducible and EU < 1:
        raise InconsistencyError(f"irreducible free curve with E(U)={EU} < 1")
    return EulerCheck(mu, EC, EU, (d1 - 1) * (d2 - 1) == mu - p.tau + 1)


# -- saturation defects -------------------------------------------------------


@dataclass
class SaturationDefects:
    """n_j = dim I_{f,j} - dim J_{f,j} for j = 0..T (UNCOMPUTED where unknown)."""

    n: list
    method: list

    def at(self, j: int):
        if j < 0 or j >= len(self.n):
            return 0
        return self.n[j]

    def to_json(self) -> list:
        return list(self.n)


def formula_range(d: int) -> set:
    T = 3 * (d - 2)
    base = set(range(d - 3, 2 * d - 3))
    return {j for j in base | {T - j for j in base} if 0 <= j <= T}


def saturation_defect_formula(p: MilnorProfile, j: int) -> int:
    """n_j = m_j + ar_{2d-5-j} - tau, on d-3 <= j <= 2d-4 and its mirror image."""
    d, T = p.d, p.T
    if d - 3 <= j <= 2 * d - 4:
        return p.m_at(j) + p.ar_at(2 * d - 5 - j) - p.tau
    if d - 3 <= T - j <= 2 * d - 4:
        return saturation_defect_formula(p, T - j)
    raise ValueError(f"degree {j} not covered by the formula; use the direct oracle")


def _top_functionals_mod_p(c: CurveInput, top: int, p: int, pure=None) -> np.ndarray:
    """Rows spanning the linear forms on S_top that vanish on J_{f,top}, mod p."""
    jac = jacobian_matrix_in_degree(c, top).mod_p(p).transpose()
    n = dim_s(top)
    pivots, rows = echelon_mod_p(jac, pure) if jac.nnz else ([], [])
    red = _reduced_rows(pivots, rows, p)
    pivot_set = set(pivots)
    free = [i for i in range(n) if i not in pivot_set]
    where = {col: r for r, col in enumerate(free)}
    L = np.zeros((len(free), n), dtype=np.int64)
    for col in free:
        L[where[col], col] = 1
    for col, row in zip(pivots, red):
        for cc, v in row.items():
            if cc != col:
                L[where[cc], col] = -v % p
    return L


def _shift_columns(k: int):
    """For each variable, the S_{k+1} index of v * m for the monomials m of S_k."""
    idx = monomial_index(k + 1)
    mons = monomial_basis(k)
    out = []
    for shift in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        out.append(np.array([idx[(a + shift[0], b + shift[1], cc + shift[2])] for a, b, cc in mons],
                            dtype=np.int64))
    return out


def _quotient_by_saturation_mod_p(c: CurveInput, p: int, pure=None) -> tuple:
    """h_k = dim (S/I)_k for k = 0..T+1 and dim(S/J)_{T+1}, by descent from degree T+1.

    I_{T+1} = J_{T+1}; below that, g lies in I_k exactly when x g, y g and z g
    lie in I_{k+1}, since I is saturated.
    """
    top = c.T + 1
    L = _top_functionals_mod_p(c, top, p, pure)
    h = [0] * (top + 1)
    h[top] = L.shape[0]
    for k in range(top - 1, -1, -1):
        if L.shape[0] == 0:
            break
        cols = _shift_columns(k)
        stacked = np.vstack([L[:, cs] for cs in cols])
        L = row_basis_dense_mod_p(stacked, p)
        h[k] = L.shape[0]
    return h, h[top]


def saturation_defects_direct(c: CurveInput, m: list | None = None, source: PrimeSource | None = None,
                              min_agree: int = 2, max_primes: int = 8, pure=None) -> list:
    """n_j for j = 0..T by linear algebra mod primes.

    n_j = m_j - h_j, where h is the Hilbert function of S/I_f.  ``m`` must be the
    Milnor-algebra dimensions over QQ; primes whose dim J_{T+1} disagrees with
    it are discarded as unlucky.
    """
    T = c.T
    if m is None:
        m = hilbert_function_mod_primes(c, T + 1, source, pure=pure).m
    source = source or PrimeSource()
    tried: set = set()
    results = []
    while len(tried) < max_primes:
        p = source.fresh_prime(tried)
        tried.add(p)
        try:
            h, top = _quotient_by_saturation_mod_p(c, p, pure)
        except BadPrime:
            continue
        if top != m[T + 1]:
            log.info("prime %d unlucky for J in degree %d", p, T + 1)
            continue
        n = [m[j] - h[j] for j in range(T + 1)]
        results.append(n)
        if results.count(n) >= min_agree:
            if min(n) < 0:
                raise InconsistencyError("negative saturation defect")
            return n
    raise InconsistencyError("saturation defects did not stabilise across primes")


def saturation_defect_stacked_exact(c: CurveInput, j: int) -> int:
    """n_j over QQ from one stacked system: g in I_j iff m g in J_{T+1} for all m of degree T+1-j.

    Independent of the descent oracle; meant for small curves.
    """
    T = c.T
    if j > T or j < 0:
        return 0
    top, e = T + 1, T + 1 - j
    jac = jacobian_matrix_in_degree(c, top).transpose()
    pivots, rows = rref_exact(jac)
    pivot_set = set(pivots)
    n_top = dim_s(top)
    free = [i for i in range(n_top) if i not in pivot_set]
    where = {col: r for r, col in enumerate(free)}
    # functional matrix L (len(free) x n_top) with kernel J_top
    Lcols = {}
    for col in free:
        Lcols[col] = {where[col]: 1}
    for col, row in zip(pivots, rows):
        Lcols[col] = {where[cc]: -v for cc, v in row.items() if cc != col}
    idx_top = monomial_index(top)
    src = monomial_basis(j)
    trip = []
    nfree = len(free)
    for block, (ea, eb, ec) in enumerate(monomial_basis(e)):
        for s, (a, b, cc) in enumerate(src):
            for r, v in Lcols[idx_top[(a + ea, b + eb, cc + ec)]].items():
                if v:
                    trip.append((block * nfree + r, s, v))
    stacked = SparseMat.from_triplets(nfree * dim_s(e), len(src), trip)
    dim_I = len(src) - rank_exact(stacked)
    jac_j = jacobian_matrix_in_degree(c, j)
    dim_J = rank_exact(jac_j) if jac_j.nnz else 0
    return dim_I - dim_J


def saturation_defects(p: MilnorProfile, c: CurveInput | None = None, mode: str = "formula",
                       source: PrimeSource | None = None) -> SaturationDefects:
    """Defects on 0..T.  ``mode`` is "formula", "direct" or "both" (which must agree)."""
    if mode not in ("formula", "direct", "both"):
        raise ValueError("mode must be formula, direct or both")
    T = p.T
    n: list = [UNCOMPUTED] * (T + 1)
    method: list = [None] * (T + 1)
    if mode in ("formula", "both"):
        for j in sorted(formula_range(p.d)):
            n[j] = saturation_defect_formula(p, j)
            method[j] = "formula"
    if mode in ("direct", "both"):
        if c is None:
            raise ValueError("the direct oracle needs the curve")
        direct = saturation_defects_direct(c, p.m if len(p.m) > T + 1 else None, source)
        for j, v in enumerate(direct):
            if method[j] == "formula":
                if n[j] != v:
                    raise InconsistencyError(f"n_{j}: formula {n[j]} vs direct {v}")
                method[j] = "both-agree"
            else:
                n[j] = v
                method[j] = "direct-oracle"
    return SaturationDefects(n, method)


def rigidity_check(defects: SaturationDefects, d: int):
    """True iff n_d = 0 (I_{f,d} = J_{f,d}); None when n_d was not computed."""
    v = defects.at(d)
    if v == UNCOMPUTED:
        return None
    return v == 0


def conjecture_probe(p: MilnorProfile, free: bool) -> dict:
    """Whether ct + st = T, and whether that matches the freeness verdict."""
    holds = p.ct != INFINITE and p.ct + p.st == p.T
    return {"ct_plus_st_eq_T": holds, "free": free, "consistent": holds == free}


# -- assembled report -----------------------------------------------------------


@dataclass
class FreenessReport:
    free: bool
    criterion_ii: bool
    criterion_iii: bool
    d1: int | None
    d2: int | None
    tau: int
    delta: int
    exponents_agree: bool | None = None
    hp_identities_ok: bool | None = None
    conj10_holds: bool = False
    wh_bounds_ok: bool | None = None
    defects: SaturationDefects | None = None
    rigid: bool | None = None
    euler: EulerCheck | None = None
    notes: list = field(default_factory=list)
    inconsistencies: list = field(default_factory=list)

    def to_json(self) -> dict:
        eu = self.euler
        return {
            "free": self.free,
            "d1": self.d1,
            "d2": self.d2,
            "tau": self.tau,
            "delta": self.delta,
            "criteria": {"balance": self.criterion_ii, "midpoint": self.criterion_iii},
            "defects": self.defects.to_json() if self.defects else [],
            "rigid": self.rigid,
            "conj10": self.conj10_holds,
            "euler": {"EC": eu.EC if eu else None, "EU": eu.EU if eu else None},
            "cuspidal_consistent": eu.cuspidal_consistent if eu else None,
        }


def freeness_report(p: MilnorProfile, c: CurveInput | None = None, meta: SingularityMeta | None = None,
                    irreducible: bool | None = None, saturation: str = "formula",
                    source: PrimeSource | None = None) -> FreenessReport:
    """Run every check on a profile; disagreements land in ``inconsistencies``."""
    d, tau = p.d, p.tau
    delta = 4 * tau - 3 * (d - 1) ** 2
    notes, bad = list(p.warnings), []
    if not p.plateau_verified:
        notes.append("tau plateau not verified; freeness criteria not applicable")
        rep = FreenessReport(False, False, False, None, None, tau, delta, notes=notes)
        rep.conj10_holds = conjecture_probe(p, False)["ct_plus_st_eq_T"]
        return rep
    if not p.ct_mdr_consistent:
        bad.append(f"ct = mdr + d - 2 fails (ct={p.ct}, mdr={p.mdr})")
    crit_ii = freeness_by_balance(p)
    crit_iii = freeness_by_midpoint(p)
    if crit_ii != crit_iii:
        bad.append(f"balance criterion says {crit_ii}, midpoint criterion says {crit_iii}")
    free = crit_iii
    rep = FreenessReport(free, crit_ii, crit_iii, None, None, tau, delta, notes=notes, inconsistencies=bad)
    rep.conj10_holds = conjecture_probe(p, free)["ct_plus_st_eq_T"]
    try:
        rep.defects = saturation_defects(p, c, saturation, source)
    except InconsistencyError as exc:
        bad.append(str(exc))
    if rep.defects is not None:
        rep.rigid = rigidity_check(rep.defects, d)
        nvals = rep.defects.n
        for j in range(p.T + 1):
            u, v = nvals[j], nvals[p.T - j]
            if UNCOMPUTED not in (u, v) and u != v:
                bad.append(f"defect symmetry fails at {j}: {u} vs {v}")
                break
        known = [v for v in nvals if v != UNCOMPUTED]
        if free and any(known):
            bad.append("free curve with a nonzero saturation defect")
        if not free and saturation != "formula" and not any(known):
            bad.append("non-free curve with vanishing saturation defects")
    if free:
        try:
            rep.d1, rep.d2 = exponents(p)
            rep.exponents_agree = True
        except InconsistencyError as exc:
            rep.exponents_agree = False
            bad.append(str(exc))
            return rep
        rep.hp_identities_ok = hp_hilbert_identities(p, rep.d1, rep.d2)
        if not rep.hp_identities_ok:
            bad.append("Hilbert function identities of a free curve fail")
        try:
            wh = wh_structural_checks(p, irreducible, rep.d1, rep.d2)
            rep.wh_bounds_ok = wh.ok
            notes.extend(wh.notes)
        except InconsistencyError as exc:
            rep.wh_bounds_ok = False
            bad.append(str(exc))
        try:
            rep.euler = euler_and_cuspidal_check(p, rep.d1, rep.d2, meta, irreducible)
            if rep.euler.note:
                notes.append(rep.euler.note)
        except InconsistencyError as exc:
            bad.append(str(exc))
    elif rep.conj10_holds:
        notes.append("ct + st = T on a non-free curve: counterexample candidate to the ct+st conjecture")
    return rep
