"""Hilbert functions of homogeneous ideals in three variables, mod p.

A degree-truncated Groebner basis (degree reverse lexicographic order,
Buchberger with the Gebauer-Moeller criteria, processed degree by degree) gives
the leading-term ideal in every degree up to the truncation, and with it
dim_k (I mod p) for all k at once.  This is the same number as the rank of the
degree-k multiplication matrix, at a fraction of the cost of eliminating those
matrices separately.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..arith import reduce_mod_p
from ..poly import TriPoly, dim_s
from .backend import kernels

log = logging.getLogger(__name__)


def drl_index(D: int, b, c):
    """Position of x^(D-b-c) y^b z^c among degree-D monomials, degrevlex descending."""
    return c * (D + 1) - c * (c - 1) // 2 + b


def _degree_monomials(D: int):
    n = dim_s(D)
    mono_b = np.empty(n, dtype=np.int32)
    mono_c = np.empty(n, dtype=np.int32)
    i = 0
    for c in range(D + 1):
        k = D - c + 1
        mono_b[i:i + k] = np.arange(k, dtype=np.int32)
        mono_c[i:i + k] = c
        i += k
    return mono_b, mono_c


@dataclass
class _Element:
    degree: int
    lm: tuple  # (a, b, c)
    tb: np.ndarray
    tc: np.ndarray
    coef: np.ndarray  # monic, first entry is the leading term


@dataclass
class TruncatedBasis:
    """Leading monomials of a degree-truncated Groebner basis mod p."""

    p: int
    max_degree: int
    leading: list = field(default_factory=list)
    degrees: list = field(default_factory=list)
    reductions: int = 0
    zero_reductions: int = 0

    def ideal_dims(self, upto: int | None = None) -> list:
        """dim_k of the ideal for k = 0..upto (defaults to the truncation degree)."""
        K = self.max_degree if upto is None else upto
        if K > self.max_degree:
            raise ValueError("basis is only valid up to its truncation degree")
        return [dim_s(k) - s for k, s in enumerate(standard_counts(self.leading, K))]


def standard_counts(leading, K: int) -> list:
    """Number of degree-k monomials outside the monomial ideal, k = 0..K."""
    big = K + 1
    amin = np.full((K + 1, K + 1), big, dtype=np.int64)
    for a, b, c in leading:
        if b <= K and c <= K and a < amin[b, c]:
            amin[b, c] = a
    amin = np.minimum.accumulate(np.minimum.accumulate(amin, axis=0), axis=1)
    bb, cc = np.meshgrid(np.arange(K + 1), np.arange(K + 1), indexing="ij")
    out = []
    for k in range(K + 1):
        a = k - bb - cc
        out.append(int(((a >= 0) & (a < amin)).sum()))
    return out


def _lcm(m1, m2):
    return (max(m1[0], m2[0]), max(m1[1], m2[1]), max(m1[2], m2[2]))


def _divides(m1, m2):
    return m1[0] <= m2[0] and m1[1] <= m2[1] and m1[2] <= m2[2]


def _coprime(m1, m2):
    return not (min(m1[0], m2[0]) or min(m1[1], m2[1]) or min(m1[2], m2[2]))


class _Basis:
    def __init__(self, p: int, pure=None):
        self.p = p
        self.k = kernels(pure)
        self.elems: list[_Element] = []
        self._flat = None

    def flat(self):
        if self._flat is None:
            offs = np.zeros(len(self.elems) + 1, dtype=np.int64)
            for i, e in enumerate(self.elems):
                offs[i + 1] = offs[i] + len(e.coef)
            if self.elems:
                tb = np.concatenate([e.tb for e in self.elems])
                tc = np.concatenate([e.tc for e in self.elems])
                co = np.concatenate([e.coef for e in self.elems])
            else:
                tb = tc = np.zeros(0, dtype=np.int32)
                co = np.zeros(0, dtype=np.int64)
            lmb = np.array([e.lm[1] for e in self.elems], dtype=np.int32)
            lmc = np.array([e.lm[2] for e in self.elems], dtype=np.int32)
            self._flat = (offs, tb, tc.astype(np.int32), co, lmb, lmc)
        return self._flat

    def add(self, elem: _Element):
        self.elems.append(elem)
        self._flat = None


def _reducer_table(basis: _Basis, D: int, mono_b, mono_c):
    mono_a = D - mono_b - mono_c
    red = np.full(len(mono_b), -1, dtype=np.int32)
    best = np.full(len(mono_b), np.iinfo(np.int64).max, dtype=np.int64)
    for gi, e in enumerate(basis.elems):
        a, b, c = e.lm
        mask = (mono_a >= a) & (mono_b >= b) & (mono_c >= c) & (len(e.coef) < best)
        red[mask] = gi
        best[mask] = len(e.coef)
    return red


def _to_element(acc: np.ndarray, D: int, mono_b, mono_c, p: int):
    nz = np.flatnonzero(acc)
    if nz.size == 0:
        return None
    lead = int(acc[nz[0]])
    inv = pow(lead, -1, p)
    coef = acc[nz] * inv % p
    tb = mono_b[nz].copy()
    tc = mono_c[nz].copy()
    lm = (D - int(tb[0]) - int(tc[0]), int(tb[0]), int(tc[0]))
    return _Element(D, lm, tb, tc, coef)


def _poly_to_vector(f: TriPoly, D: int, p: int) -> np.ndarray:
    acc = np.zeros(dim_s(D), dtype=np.int64)
    for (a, b, c), v in f.items():
        acc[drl_index(D, b, c)] = reduce_mod_p(v, p)
    return acc


def truncated_basis(gens, p: int, max_degree: int, pure=None) -> TruncatedBasis:
    """Groebner basis leading terms of the ideal generated by ``gens`` mod p.

    ``gens`` are homogeneous TriPoly values with coefficients defined mod p
    (a prime dividing a denominator raises :class:`~freecurve.arith.BadPrime`).
    Only S-pairs of degree <= max_degree are processed, which is exactly what
    is needed for the leading ideal in those degrees.
    """
    basis = _Basis(p, pure)
    K = basis.k
    by_degree: dict[int, list] = {}
    for g in gens:
        if g.is_zero():
            continue
        D = g.homogeneous_degree
        if D is None:
            raise ValueError("generators must be homogeneous")
        if D <= max_degree:
            by_degree.setdefault(D, []).append(g)
    pairs: list[tuple] = []  # (degree, lcm, i, j)
    result = TruncatedBasis(p, max_degree)
    if not by_degree:
        return result
    D = min(by_degree)
    while D <= max_degree:
        todo_pairs = sorted((pr for pr in pairs if pr[0] == D), key=lambda pr: (pr[1], pr[2], pr[3]))
        pairs = [pr for pr in pairs if pr[0] != D]
        todo_gens = by_degree.get(D, [])
        if todo_pairs or todo_gens:
            mono_b, mono_c = _degree_monomials(D)
            red = _reducer_table(basis, D, mono_b, mono_c)
            items = [("g", g) for g in todo_gens] + [("s", pr) for pr in todo_pairs]
            for kind, item in items:
                if kind == "g":
                    acc = _poly_to_vector(item, D, p)
                else:
                    _, L, i, j = item
                    # a later element may already have removed this pair's relevance
                    gi, gj = basis.elems[i], basis.elems[j]
                    acc = np.zeros(dim_s(D), dtype=np.int64)
                    K.add_shifted(acc, D, gi.tb, gi.tc, gi.coef, L[1] - gi.lm[1], L[2] - gi.lm[2], 1, p)
                    K.add_shifted(acc, D, gj.tb, gj.tc, gj.coef, L[1] - gj.lm[1], L[2] - gj.lm[2], p - 1, p)
                offs, tb, tc, co, lmb, lmc = basis.flat()
                K.reduce_full(acc, D, red, offs, tb, tc, co, lmb, lmc, mono_b, mono_c, p)
                result.reductions += 1
                elem = _to_element(acc, D, mono_b, mono_c, p)
                if elem is None:
                    result.zero_reductions += 1
                    continue
                pairs = _update(basis, pairs, elem, max_degree)
                basis.add(elem)
                red[drl_index(D, elem.lm[1], elem.lm[2])] = len(basis.elems) - 1
        pending = [pr[0] for pr in pairs] + [d for d in by_degree if d > D]
        if not pending:
            break
        D = min(pending)
    result.leading = [e.lm for e in basis.elems]
    result.degrees = [e.degree for e in basis.elems]
    log.debug("basis mod %d: %d elements, %d reductions (%d to zero)", p,
              len(basis.elems), result.reductions, result.zero_reductions)
    return result


def _update(basis: _Basis, pairs, h: _Element, max_degree: int):
    """Gebauer-Moeller pair update for a new element h (index len(basis))."""
    hi = len(basis.elems)
    lh = h.lm
    cand = [(g, _lcm(lh, e.lm)) for g, e in enumerate(basis.elems)]
    kept = []
    for idx, (g1, l1) in enumerate(cand):
        if _coprime(lh, basis.elems[g1].lm):
            kept.append((g1, l1))
            continue
        redundant = any(_divides(l2, l1) for _, l2 in cand[idx + 1:]) or any(
            _divides(l2, l1) for _, l2 in kept
        )
        if not redundant:
            kept.append((g1, l1))
    new_pairs = [
        (sum(l1), l1, g1, hi)
        for g1, l1 in kept
        if not _coprime(lh, basis.elems[g1].lm) and sum(l1) <= max_degree
    ]
    survivors = []
    for pr in pairs:
        _, L, i, j = pr
        if (
            _divides(lh, L)
            and _lcm(basis.elems[i].lm, lh) != L
            and _lcm(lh, basis.elems[j].lm) != L
        ):
            continue
        survivors.append(pr)
    return survivors + new_pairs


def hilbert_ideal_dims_mod_p(gens, p: int, max_degree: int, pure=None) -> list:
    """dim_k of the ideal generated by ``gens`` over F_p, for k = 0..max_degree."""
    return truncated_basis(gens, p, max_degree, pure).ideal_dims()
