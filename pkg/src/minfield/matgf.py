"""Dense exact matrices over a FieldDesc.

Row-major immutable matrices with exact arithmetic, Gaussian
elimination (reduced row echelon form, inverse, right nullspace),
entrywise Frobenius, and the semilinear kernel: scalar norm of a
twisted product, norm-one fixed vectors, and the randomized matrix
Hilbert-90 solver.

Convention: vectors are rows acting on the right unless an operation
documents otherwise (fixed_vector works with columns, matching the
equation C v^alpha = v it solves).
"""

from __future__ import annotations

import random

import numpy as np

from . import core, gf
from .errors import (
    FieldMismatch,
    NotScalar,
    PreconditionFailed,
    RetryLimitExceeded,
    ShapeMismatch,
    Singular,
)


class MatrixGF:
    __slots__ = ("field", "rows", "cols", "entries", "_arr")

    def __init__(self, field: gf.FieldDesc, rows: int, cols: int, entries):
        entries = tuple(int(e) for e in entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, "
                f"got {len(entries)}")
        for e in entries:
            field.check(e)
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._arr = None

    # -- constructors --

    @classmethod
    def from_rows(cls, field, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = [x for row in rows for x in row]
        return cls(field, r, c, flat)

    @classmethod
    def identity(cls, field, d):
        e = [0] * (d * d)
        for i in range(d):
            e[i * d + i] = 1
        return cls(field, d, d, e)

    @classmethod
    def zeros(cls, field, r, c):
        return cls(field, r, c, [0] * (r * c))

    @classmethod
    def from_array(cls, field, arr):
        return cls(field, arr.shape[0], arr.shape[1], arr.reshape(-1).tolist())

    # -- access --

    def array(self):
        if self._arr is None:
            self._arr = np.array(self.entries, dtype=np.int64).reshape(
                self.rows, self.cols)
        return self._arr

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, MatrixGF)
                and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatrixGF({self.rows}x{self.cols} over {self.field!r})"

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    # -- ring operations --

    def add(self, other):
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("matrix addition shape mismatch")
        F = self.field
        return MatrixGF(F, self.rows, self.cols,
                        [F.add(a, b) for a, b in zip(self.entries, other.entries)])

    def neg(self):
        F = self.field
        return MatrixGF(F, self.rows, self.cols,
                        [F.neg(a) for a in self.entries])

    def sub(self, other):
        return self.add(other.neg())

    def scalar_mul(self, c):
        F = self.field
        return MatrixGF(F, self.rows, self.cols,
                        [F.mul(c, a) for a in self.entries])

    def mul(self, other):
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        F = self.field
        if F.has_tables:
            a = np.ascontiguousarray(self.array())
            b = np.ascontiguousarray(other.array())
            out = np.zeros((self.rows, other.cols), dtype=np.int64)
            core.mat_mul(a, b, out, F.p, F.k, F.exp_table, F.log_table)
            return MatrixGF.from_array(F, out)
        return self._mul_generic(other)

    def _mul_generic(self, other):
        F = self.field
        n, m, l = self.rows, self.cols, other.cols
        out = [0] * (n * l)
        for i in range(n):
            for s in range(m):
                a = self.entries[i * m + s]
                if a == 0:
                    continue
                for j in range(l):
                    b = other.entries[s * l + j]
                    if b:
                        out[i * l + j] = F.add(out[i * l + j], F.mul(a, b))
        return MatrixGF(F, n, l, out)

    def __mul__(self, other):
        return self.mul(other)

    def pow(self, e: int):
        if self.rows != self.cols:
            raise ShapeMismatch("pow needs a square matrix")
        if e < 0:
            return self.inverse().pow(-e)
        result = MatrixGF.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result.mul(base)
            base = base.mul(base)
            e >>= 1
        return result

    def transpose(self):
        F = self.field
        out = [self.entries[i * self.cols + j]
               for j in range(self.cols) for i in range(self.rows)]
        return MatrixGF(F, self.cols, self.rows, out)

    def trace(self):
        if self.rows != self.cols:
            raise ShapeMismatch("trace needs a square matrix")
        F = self.field
        t = 0
        for i in range(self.rows):
            t = F.add(t, self.entries[i * self.cols + i])
        return t

    # -- elimination --

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column tuple)."""
        F = self.field
        if F.has_tables:
            a = np.array(self.entries, dtype=np.int64).reshape(
                self.rows, self.cols)
            pivots = np.zeros(max(1, min(self.rows, self.cols)),
                              dtype=np.int64)
            rank = core.rref(a, F.p, F.k, F.exp_table, F.log_table, pivots)
            return (MatrixGF.from_array(F, a),
                    tuple(int(x) for x in pivots[:rank]))
        return self._rref_generic()

    def _rref_generic(self):
        F = self.field
        a = [list(self.row(i)) for i in range(self.rows)]
        pivots = []
        r = 0
        for col in range(self.cols):
            piv = next((i for i in range(r, self.rows) if a[i][col]), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            v = a[r][col]
            if v != 1:
                iv = F.inv(v)
                a[r] = [F.mul(iv, x) for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][col]:
                    f = a[i][col]
                    a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
            pivots.append(col)
            r += 1
            if r == self.rows:
                break
        return MatrixGF.from_rows(F, a), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def inverse(self):
        if self.rows != self.cols:
            raise ShapeMismatch("inverse needs a square matrix")
        d = self.rows
        F = self.field
        aug = [list(self.row(i)) + [1 if j == i else 0 for j in range(d)]
               for i in range(d)]
        red, pivots = MatrixGF.from_rows(F, aug).rref()
        if len(pivots) < d or any(p >= d for p in pivots):
            raise Singular("matrix is singular")
        inv_rows = [list(red.row(i))[d:] for i in range(d)]
        return MatrixGF.from_rows(F, inv_rows)

    def nullspace_basis(self):
        """Basis of the right null space, as d x 1 column matrices.

        The basis is the canonical one read off the RREF: one vector per
        free column, with a 1 in that column's position.
        """
        F = self.field
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(red[r, fc])
            basis.append(MatrixGF(F, self.cols, 1, v))
        return basis

    # -- predicates --

    def is_zero(self):
        return all(e == 0 for e in self.entries)

    def is_identity(self):
        return self == MatrixGF.identity(self.field, self.rows) \
            if self.rows == self.cols else False

    def scalar_value(self):
        """If the matrix is c*I, return c; otherwise None."""
        if self.rows != self.cols:
            return None
        c = self.entries[0]
        for i in range(self.rows):
            for j in range(self.cols):
                if self[i, j] != (c if i == j else 0):
                    return None
        return c

    def is_nonsingular(self):
        if self.rows != self.cols:
            return False
        try:
            self.inverse()
            return True
        except Singular:
            return False

    # -- entrywise maps --

    def frobenius(self, m: int):
        F = self.field
        m %= F.k
        if m == 0:
            return self
        if F.has_tables:
            tbl = F.frobenius_table(m)
            return MatrixGF.from_array(F, tbl[self.array()])
        return MatrixGF(F, self.rows, self.cols,
                        [F.frobenius(e, m) for e in self.entries])

    def map_entries(self, new_field, fn):
        return MatrixGF(new_field, self.rows, self.cols,
                        [fn(e) for e in self.entries])


def mat_frobenius(A: MatrixGF, m: int) -> MatrixGF:
    """Entrywise Frobenius x -> x^(p^m) of every entry of A."""
    return A.frobenius(m)


# ----------------------------------------------------------------------
# random matrices
# ----------------------------------------------------------------------

def random_matrix(field, rows, cols, rng: random.Random) -> MatrixGF:
    return MatrixGF(field, rows, cols,
                    [rng.randrange(field.q) for _ in range(rows * cols)])


def random_nonsingular(field, d, rng: random.Random,
                       max_trials: int = 256) -> MatrixGF:
    for _ in range(max_trials):
        A = random_matrix(field, d, d, rng)
        if A.is_nonsingular():
            return A
    raise RetryLimitExceeded(
        f"no nonsingular {d}x{d} matrix over {field!r} in {max_trials} draws")


# ----------------------------------------------------------------------
# semilinear kernel
# ----------------------------------------------------------------------

def semilinear_product(C: MatrixGF, m: int, t: int) -> MatrixGF:
    """C * C^(alpha) * ... * C^(alpha^(t-1)) with alpha = x -> x^(p^m).

    Plain left-to-right evaluation, t - 1 multiplications.
    """
    P = C
    for i in range(1, t):
        P = P.mul(C.frobenius(i * m))
    return P


def semilinear_product_doubling(C: MatrixGF, m: int, t: int) -> MatrixGF:
    """Same product, via N_{2i} = N_i * (N_i)^(alpha^i): O(log t) muls."""
    if t == 1:
        return C
    bits = bin(t)[2:]
    N, i = C, 1
    for b in bits[1:]:
        N = N.mul(N.frobenius(i * m))
        i *= 2
        if b == "1":
            N = N.mul(C.frobenius(i * m))
            i += 1
    return N


def semilinear_norm_scan(C: MatrixGF, m: int) -> int:
    """First-row scan giving the scalar of the norm product, cost O(td^2).

    Valid only when the full product is scalar; callers must verify.
    """
    F = C.field
    t = F.k // m
    v = MatrixGF(F, 1, C.cols, C.row(0))
    for i in range(1, t):
        v = v.mul(C.frobenius(i * m))
    return v[0, 0]


def semilinear_norm_scalar(C: MatrixGF, m: int) -> int:
    """The scalar mu with C * C^alpha * ... * C^(alpha^(t-1)) = mu*I.

    Raises NotScalar when the product is not scalar (C does not
    intertwine an absolutely irreducible pair), Singular when mu = 0.
    The scan path is used for small t, the doubling path otherwise; the
    full product is always verified before returning.
    """
    F = C.field
    if C.rows != C.cols:
        raise ShapeMismatch("norm scalar needs a square matrix")
    gf._check_divisor(F, m)
    t = F.k // m
    d = C.rows
    if t <= 2 * d:
        P = semilinear_product(C, m, t)
    else:
        P = semilinear_product_doubling(C, m, t)
    mu = P.scalar_value()
    if mu is None:
        raise NotScalar("semilinear norm product is not a scalar matrix")
    if mu == 0:
        raise Singular("semilinear norm product is zero")
    return mu


def fixed_vector(C: MatrixGF, m: int, seed: int = 0) -> MatrixGF:
    """A nonzero column v with C * v^alpha = v, given norm scalar 1.

    Built from the recursion u_i = C * u_{i-1}^alpha and a lambda-weighted
    sum v = sum_i lambda^(alpha^i) u_i, retrying with fresh random lambda
    (then fresh u_0) until v != 0.
    """
    F = C.field
    t = F.k // m
    if semilinear_norm_scalar(C, m) != 1:
        raise PreconditionFailed("fixed_vector needs norm scalar 1")
    d = C.rows
    rng = random.Random(gf.subseed(seed, "fixed-vector"))
    for _ in range(256):
        u = MatrixGF(F, d, 1, [rng.randrange(F.q) for _ in range(d)])
        if u.is_zero():
            continue
        us = [u]
        for _ in range(t - 1):
            us.append(C.mul(us[-1].frobenius(m)))
        for _ in range(16):
            lam = rng.randrange(1, F.q)
            v = MatrixGF.zeros(F, d, 1)
            for i, ui in enumerate(us):
                v = v.add(ui.scalar_mul(F.frobenius(lam, (i * m) % F.k)))
            if not v.is_zero():
                assert C.mul(v.frobenius(m)) == v
                return v
    raise RetryLimitExceeded("fixed_vector: no nonzero weighted sum found")


def hilbert90(C: MatrixGF, m: int, seed: int = 0, max_trials: int = 64,
              stats: dict | None = None) -> MatrixGF:
    """A nonsingular A with C = A * (A^alpha)^(-1), for norm-one C.

    Randomized averaging: draw X, evaluate the twisted geometric sum via
    A_{i+1} = X + C * A_i^alpha (t - 1 multiplications), retry until A is
    invertible.  Per-trial success probability exceeds 1/4 for any field,
    so max_trials = 64 is unreachable in practice.
    """
    F = C.field
    t = F.k // m
    if semilinear_norm_scalar(C, m) != 1:
        raise PreconditionFailed("hilbert90 needs norm scalar 1")
    d = C.rows
    rng = random.Random(gf.subseed(seed, "hilbert90"))
    for trial in range(1, max_trials + 1):
        X = random_matrix(F, d, d, rng)
        A = X
        for _ in range(t - 1):
            A = X.add(C.mul(A.frobenius(m)))
        try:
            Ainv_alpha = A.frobenius(m).inverse()
        except Singular:
            continue
        if stats is not None:
            stats["trials"] = trial
        assert A.mul(Ainv_alpha) == C
        return A
    raise RetryLimitExceeded(
        f"hilbert90: no invertible average in {max_trials} trials")
