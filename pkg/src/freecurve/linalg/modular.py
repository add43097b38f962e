"""Rank and kernels over prime fields, and multi-modular rank over QQ."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..arith import BadPrime, PrimeSource
from .backend import kernels
from .sparse import QQ, SparseMat

log = logging.getLogger(__name__)


def _row_order(indptr) -> np.ndarray:
    # fewest nonzeros first; stable sort keeps row index as the tie-break
    counts = np.diff(indptr)
    return np.argsort(counts, kind="stable").astype(np.int64)


def echelon_mod_p(m: SparseMat, pure=None):
    """Row echelon form of ``m`` over its prime field: (pivot_cols, rows)."""
    p = m.prime
    if p is None:
        raise ValueError("echelon_mod_p needs a prime-field matrix")
    indptr, indices, data = m.csr()
    return kernels(pure).sparse_echelon(indptr, indices, data, _row_order(indptr), m.cols, p)


def rank_mod_p(m: SparseMat, pure=None) -> int:
    if m.prime is None:
        raise ValueError("rank_mod_p needs a prime-field matrix")
    if m.nnz == 0:
        return 0
    # eliminate along the shorter side: the scan cost is linear in the row length
    target = m.transpose() if m.cols > m.rows else m
    pivots, _ = echelon_mod_p(target, pure)
    return len(pivots)


def _reduced_rows(pivots, rows, p):
    """Back-substitute an echelon form into reduced echelon form (dict rows)."""
    where = {c: k for k, c in enumerate(pivots)}
    out = [None] * len(rows)
    # rows come in elimination order; back-substitute by decreasing pivot column
    for k in sorted(range(len(rows)), key=lambda i: pivots[i], reverse=True):
        cols, vals = rows[k]
        row = dict(zip(cols, vals))
        for c in cols[1:]:
            j = where.get(c)
            if j is None or c not in row:
                continue
            v = row[c]
            for cc, vv in out[j].items():
                row[cc] = (row.get(cc, 0) - v * vv) % p
            row = {cc: vv for cc, vv in row.items() if vv}
        out[k] = row
    return out


def kernel_basis_mod_p(m: SparseMat, pure=None) -> list:
    """Right-kernel basis, one vector per non-pivot column in increasing order."""
    p = m.prime
    if p is None:
        raise ValueError("kernel_basis_mod_p needs a prime-field matrix")
    pivots, rows = echelon_mod_p(m, pure) if m.nnz else ([], [])
    red = _reduced_rows(pivots, rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [0] * m.cols
        v[free] = 1
        for c, row in zip(pivots, red):
            x = row.get(free, 0)
            if x:
                v[c] = -x % p
        basis.append(v)
    return basis


@dataclass
class RankCertificate:
    """Outcome of a multi-modular rank computation.

    ``primes_used`` are the agreeing primes behind ``rank``; primes that were
    bad (dividing a denominator) or reported a smaller, unlucky rank are kept
    in ``discarded``.  A rank mod p never exceeds the rank over QQ, so the
    maximum seen is a lower bound that is exact for all but finitely many p.
    """

    rank: int
    primes_used: list
    method: str = "multi-modular"
    agreement: bool = True
    discarded: list = field(default_factory=list)


def multi_modular_rank(m: SparseMat, min_agree: int = 2, primes=None, source: PrimeSource | None = None,
                       max_primes: int = 24, pure=None) -> RankCertificate:
    """Rank over QQ from ranks modulo several primes.

    ``primes`` may be an explicit iterable (tests use it to force an unlucky
    prime); otherwise fresh primes are drawn from ``source``.
    """
    if m.field != QQ:
        raise ValueError("multi_modular_rank expects a matrix over QQ")
    if min_agree < 2:
        raise ValueError("min_agree must be at least 2")
    source = source or PrimeSource()
    it = iter(primes) if primes is not None else None
    tried: set = set()
    best, streak, agreeing, discarded = -1, 0, [], []
    while len(tried) < max_primes:
        if it is not None:
            try:
                p = next(it)
            except StopIteration:
                it = None
                continue
        else:
            p = source.fresh_prime(tried)
        tried.add(p)
        try:
            mp = m.mod_p(p)
        except BadPrime:
            log.info("skipping bad prime %d", p)
            discarded.append((p, "bad"))
            continue
        r = rank_mod_p(mp, pure)
        if r > best:
            discarded.extend((q, best) for q in agreeing)
            best, streak, agreeing = r, 1, [p]
        elif r == best:
            streak += 1
            agreeing.append(p)
        else:
            log.info("prime %d is unlucky: rank %d < %d", p, r, best)
            discarded.append((p, r))
        if streak >= min_agree:
            return RankCertificate(best, agreeing, discarded=discarded)
    return RankCertificate(best, agreeing, agreement=False, discarded=discarded)


def row_basis_dense_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Echelon basis of the row space of a dense int64 matrix over F_p.

    Entries must already lie in [0, p) with p < 2**31 so that products fit in int64.
    """
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r]) % p) % p
        r += 1
    return a[:r]
