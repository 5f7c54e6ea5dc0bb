"""Pure-Python fallback for the compiled matrix kernels.

Signature-compatible with the Cython module ``minfield._core``; operates
on the same int64 arrays and log/antilog tables.
"""

from __future__ import annotations


def _add(a, b, p, k):
    if p == 2:
        return a ^ b
    out, mult = 0, 1
    for _ in range(k):
        out += ((a + b) % p) * mult
        a //= p
        b //= p
        mult *= p
    return out


def _neg(a, p, k):
    if p == 2:
        return a
    out, mult = 0, 1
    for _ in range(k):
        out += ((p - a % p) % p) * mult
        a //= p
        mult *= p
    return out


def mat_mul(a, b, out, p, k, exp, log):
    """out = a @ b over GF(p^k)."""
    n, m = a.shape
    l = b.shape[1]
    for i in range(n):
        ai = a[i]
        for j in range(l):
            acc = 0
            for s in range(m):
                av = ai[s]
                if av == 0:
                    continue
                bv = b[s, j]
                if bv == 0:
                    continue
                acc = _add(acc, int(exp[log[av] + log[bv]]), p, k)
            out[i, j] = acc


def rref(a, p, k, exp, log, pivots):
    """Reduce a to reduced row echelon form in place; returns the rank."""
    nrows, ncols = a.shape
    qm1 = log.shape[0] - 1
    r = 0
    for col in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            tmp = a[r].copy()
            a[r] = a[piv]
            a[piv] = tmp
        v = int(a[r, col])
        if v != 1:
            inv_v = int(exp[qm1 - log[v]])
            for j in range(col, ncols):
                if a[r, j] != 0:
                    a[r, j] = exp[log[a[r, j]] + log[inv_v]]
        for i in range(nrows):
            if i == r:
                continue
            factor = int(a[i, col])
            if factor == 0:
                continue
            lfac = int(log[factor])
            for j in range(col, ncols):
                v = int(a[r, j])
                if v != 0:
                    a[i, j] = _add(int(a[i, j]),
                                   _neg(int(exp[log[v] + lfac]), p, k), p, k)
        pivots[r] = col
        r += 1
        if r == nrows:
            break
    return r
