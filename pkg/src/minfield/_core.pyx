# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense matrix arithmetic over table-backed GF(p^k).

Elements are integer-encoded (base-p digits = polynomial coefficients);
multiplicative arithmetic goes through discrete log/antilog tables, and
addition is digitwise mod p (XOR when p == 2).
"""


cdef inline long long _add(long long a, long long b, long long p, int k) noexcept:
    cdef long long out = 0, mult = 1
    cdef int i
    if p == 2:
        return a ^ b
    for i in range(k):
        out += ((a + b) % p) * mult
        a //= p
        b //= p
        mult *= p
    return out


cdef inline long long _neg(long long a, long long p, int k) noexcept:
    cdef long long out = 0, mult = 1
    cdef int i
    if p == 2:
        return a
    for i in range(k):
        out += ((p - a % p) % p) * mult
        a //= p
        mult *= p
    return out


def mat_mul(long long[:, ::1] a, long long[:, ::1] b, long long[:, ::1] out,
            long long p, int k, long long[::1] exp, long long[::1] log):
    """out = a @ b over GF(p^k)."""
    cdef Py_ssize_t n = a.shape[0], m = a.shape[1], l = b.shape[1]
    cdef Py_ssize_t i, j, s
    cdef long long acc, av, bv, la
    for i in range(n):
        for j in range(l):
            acc = 0
            for s in range(m):
                av = a[i, s]
                if av == 0:
                    continue
                bv = b[s, j]
                if bv == 0:
                    continue
                acc = _add(acc, exp[log[av] + log[bv]], p, k)
            out[i, j] = acc


def rref(long long[:, ::1] a, long long p, int k,
         long long[::1] exp, long long[::1] log, long long[::1] pivots):
    """Reduce a to reduced row echelon form in place; returns the rank.

    Pivot columns are written to pivots[0:rank].
    """
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef long long qm1 = 0
    cdef Py_ssize_t i, j, r, col, piv
    cdef long long v, inv_v, factor, t
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
            for j in range(ncols):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        v = a[r, col]
        if v != 1:
            inv_v = exp[qm1 - log[v]]
            for j in range(col, ncols):
                if a[r, j] != 0:
                    a[r, j] = exp[log[a[r, j]] + log[inv_v]]
        for i in range(nrows):
            if i == r:
                continue
            factor = a[i, col]
            if factor == 0:
                continue
            for j in range(col, ncols):
                v = a[r, j]
                if v != 0:
                    a[i, j] = _add(a[i, j],
                                   _neg(exp[log[v] + log[factor]], p, k), p, k)
        pivots[r] = col
        r += 1
        if r == nrows:
            break
    return r
