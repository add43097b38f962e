"""Exact rank and kernels over QQ."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .sparse import QQ, SparseMat


def _integer_rows(m: SparseMat) -> list:
    rows = [dict() for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        rows[r][c] = Fraction(v)
    out = []
    for row in rows:
        if not row:
            continue
        scale = lcm(*(v.denominator for v in row.values()))
        out.append({c: int(v * scale) for c, v in row.items()})
    return out


def rank_exact(m: SparseMat) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Rows whose entry in the pivot column is zero only pick up the Bareiss
    factor pivot/previous_pivot; that factor is tracked lazily as a rational
    scale so untouched rows cost nothing.  Every divisibility that Bareiss
    guarantees is asserted.
    """
    if m.field != QQ:
        raise ValueError("rank_exact expects a matrix over QQ")
    # each active row: [entries dict, scale numerator, scale denominator]
    active = [[row, 1, 1] for row in _integer_rows(m)]
    prev = 1
    rank = 0
    while active:
        col = min(min(row[0]) for row in active)
        cands = [i for i, row in enumerate(active) if col in row[0]]
        k = min(cands, key=lambda i: (len(active[i][0]), i))
        prow, sn, sd = active.pop(k)
        pivrow = {}
        for c, v in prow.items():
            q, rem = divmod(v * sn, sd)
            assert rem == 0, "Bareiss scale is not integral"
            pivrow[c] = q
        piv = pivrow[col]
        rank += 1
        survivors = []
        for row, rn, rd in active:
            a = row.get(col)
            if a is None:
                # lazily multiply by piv / prev
                num, den = rn * piv, rd * prev
                survivors.append([row, num, den])
                continue
            new = {}
            den = rd * prev
            for c in set(row) | set(pivrow):
                if c == col:
                    continue
                val = rn * (piv * row.get(c, 0) - a * pivrow.get(c, 0))
                if val:
                    q, rem = divmod(val, den)
                    assert rem == 0, "Bareiss division is not exact"
                    new[c] = q
            if new:
                survivors.append([new, 1, 1])
        active = survivors
        prev = piv
        for entry in active:
            # keep scales in lowest terms
            g = gcd(entry[1], entry[2])
            if g > 1:
                entry[1] //= g
                entry[2] //= g
    return rank


def rref_exact(m: SparseMat):
    """Reduced row echelon form over QQ: (pivot_cols, rows as dicts)."""
    if m.field != QQ:
        raise ValueError("rref_exact expects a matrix over QQ")
    rows = [dict() for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        rows[r][c] = Fraction(v)
    rows = [r for r in rows if r]
    pivots, done = [], []
    while rows:
        col = min(min(r) for r in rows)
        k = min((i for i, r in enumerate(rows) if col in r), key=lambda i: (len(rows[i]), i))
        prow = rows.pop(k)
        inv = 1 / prow[col]
        prow = {c: v * inv for c, v in prow.items()}
        nxt = []
        for r in rows:
            a = r.get(col)
            if a:
                for c, v in prow.items():
                    x = r.get(c, 0) - a * v
                    if x:
                        r[c] = x
                    else:
                        r.pop(c, None)
            if r:
                nxt.append(r)
        rows = nxt
        for r in done:
            a = r.get(col)
            if a:
                for c, v in prow.items():
                    x = r.get(c, 0) - a * v
                    if x:
                        r[c] = x
                    else:
                        r.pop(c, None)
        done.append(prow)
        pivots.append(col)
    return pivots, done


def kernel_basis_exact(m: SparseMat) -> list:
    """Right-kernel basis over QQ, one vector per free column (increasing)."""
    pivots, rows = rref_exact(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for c, row in zip(pivots, rows):
            x = row.get(free)
            if x:
                v[c] = -x
        basis.append(v)
    return basis
