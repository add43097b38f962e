"""Pure-Python versions of the modular hot loops.

Same signatures as the compiled ``_kernels`` module; selected automatically
when the extension is unavailable or FREECURVE_PURE=1 is set.
"""


def _idx(D, b, c):
    return c * (D + 1) - c * (c - 1) // 2 + b


def add_shifted(acc, D, tb, tc, coef, sb, sc, scalar, p):
    """acc[m * t] += scalar * coef(t) for every term t, m = y^sb z^sc x^*."""
    scalar %= p
    for i in range(len(tb)):
        j = _idx(D, int(tb[i]) + sb, int(tc[i]) + sc)
        acc[j] = (int(acc[j]) + scalar * int(coef[i])) % p


def reduce_full(acc, D, red, offsets, allb, allc, allcoef, lmb, lmc, mono_b, mono_c, p):
    """Fully reduce the dense degree-D vector ``acc`` by the monic basis elements.

    ``red[i]`` names a basis element whose leading monomial divides monomial i
    (or -1).  Scanning in increasing index order is valid because every other
    term of a shifted reducer has a larger index.
    """
    vals = [int(v) for v in acc]
    n = len(vals)
    for i in range(n):
        c = vals[i]
        if c == 0:
            continue
        g = red[i]
        if g < 0:
            continue
        sb = int(mono_b[i]) - int(lmb[g])
        sc = int(mono_c[i]) - int(lmc[g])
        neg = p - c
        for t in range(int(offsets[g]), int(offsets[g + 1])):
            b = int(allb[t]) + sb
            cc = int(allc[t]) + sc
            j = cc * (D + 1) - cc * (cc - 1) // 2 + b
            vals[j] = (vals[j] + neg * int(allcoef[t])) % p
    for i in range(n):
        acc[i] = vals[i]


def sparse_echelon(indptr, indices, data, order, ncols, p):
    """Row echelon form mod p of a CSR matrix, inserting rows in ``order``.

    Returns (pivot_cols, rows) where rows[k] = (cols, vals) is the k-th pivot
    row, normalised to a leading 1 at pivot_cols[k] and supported on columns
    >= that pivot.
    """
    pivot_row = [-1] * ncols
    rows = []
    pivot_cols = []
    acc = [0] * ncols
    for r in order:
        start, stop = int(indptr[r]), int(indptr[r + 1])
        if start == stop:
            continue
        lo = ncols
        for t in range(start, stop):
            c = int(indices[t])
            acc[c] = int(data[t]) % p
            if c < lo:
                lo = c
        lead = -1
        for c in range(lo, ncols):
            v = acc[c]
            if v == 0:
                continue
            k = pivot_row[c]
            if k < 0:
                lead = c
                break
            neg = p - v
            pc, pv = rows[k]
            for t in range(len(pc)):
                cc = pc[t]
                acc[cc] = (acc[cc] + neg * pv[t]) % p
        if lead < 0:
            continue
        inv = pow(acc[lead], -1, p)
        cols, vals = [], []
        for c in range(lead, ncols):
            v = acc[c]
            if v:
                cols.append(c)
                vals.append(v * inv % p)
                acc[c] = 0
        pivot_row[lead] = len(rows)
        rows.append((cols, vals))
        pivot_cols.append(lead)
    return pivot_cols, rows
