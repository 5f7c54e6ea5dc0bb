"""Finite fields GF(p^k) with integer-encoded elements.

An element of GF(p^k) is an integer in [0, p^k) whose base-p digits,
least significant first, are the coefficients of a polynomial over
GF(p); arithmetic is modulo a monic irreducible polynomial of degree k.
The canonical polynomial for a given (p, k) is the lexicographically
least monic irreducible (coefficients compared constant term first), so
the same field is produced bit-identically on every run.

Fields of size up to TABLE_CAP carry discrete log/antilog tables with
respect to a fixed primitive element; multiplicative arithmetic then
costs two lookups.  Larger fields (allowed up to 2**32 elements) fall
back to polynomial arithmetic.
"""

from __future__ import annotations

import hashlib
import random
from functools import lru_cache

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldTooLarge,
    NoRootFound,
    NotADivisor,
    NotASubfield,
    NotInSubfield,
    NotPrime,
    ReduciblePolynomial,
    RetryLimitExceeded,
    SameCharacteristic,
    WrongCharacteristic,
    ZeroInput,
)

MAX_FIELD_SIZE = 1 << 32
TABLE_CAP = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def subseed(seed: int, *labels) -> int:
    """Derive a named 64-bit sub-seed from a master seed."""
    h = hashlib.blake2b(digest_size=8)
    h.update(repr((seed,) + labels).encode())
    return int.from_bytes(h.digest(), "little")


# ----------------------------------------------------------------------
# dense polynomials over GF(p), little-endian coefficient lists
# ----------------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_divmod_r(out, mod, p)


def _poly_divmod_r(a, mod, p):
    """Remainder of a modulo the monic polynomial mod."""
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and _poly_trim(a):
        if len(a) - 1 < dm:
            break
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _poly_trim(a)
    return a


def _poly_powmod(a, e, mod, p):
    result = [1]
    base = _poly_divmod_r(a, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    _poly_trim(a)
    _poly_trim(b)
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        bm = [(c * inv_lead) % p for c in b]
        a = _poly_divmod_r(a, bm, p)
        a, b = b, a
    return a


def _poly_is_irreducible(poly, p):
    """Rabin test: poly monic of degree k over GF(p)."""
    k = len(poly) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # x^(p^k) == x mod poly
    xp = _poly_powmod(x, p ** k, poly, p)
    diff = list(xp) + [0] * max(0, 2 - len(xp))
    diff[1] = (diff[1] - 1) % p
    if _poly_trim(diff):
        return False
    for r in prime_factors(k):
        xq = _poly_powmod(x, p ** (k // r), poly, p)
        d = list(xq) + [0] * max(0, 2 - len(xq))
        d[1] = (d[1] - 1) % p
        g = _poly_gcd(d, poly, p)
        if len(g) - 1 > 0:
            return False
    return True


# ----------------------------------------------------------------------
# field descriptor
# ----------------------------------------------------------------------

class FieldDesc:
    """A concrete GF(p^k): prime p, degree k, monic irreducible poly.

    Instances are immutable; equality and hashing go by (p, k, poly).
    """

    __slots__ = ("p", "k", "poly", "q", "_exp", "_log", "_gen",
                 "_frob_tables", "__weakref__")

    def __init__(self, p: int, k: int, poly: tuple[int, ...]):
        self.p = p
        self.k = k
        self.poly = tuple(poly)
        self.q = p ** k
        self._exp = None
        self._log = None
        self._gen = None
        self._frob_tables = {}

    # -- identity --

    def __eq__(self, other):
        return (isinstance(other, FieldDesc)
                and (self.p, self.k, self.poly) == (other.p, other.k, other.poly))

    def __hash__(self):
        return hash((self.p, self.k, self.poly))

    def __repr__(self):
        return f"GF({self.p}^{self.k}; poly={list(self.poly)})"

    # -- encoding --

    def digits(self, x: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(x % p)
            x //= p
        return out

    def undigits(self, ds) -> int:
        x = 0
        for d in reversed(list(ds)):
            x = x * self.p + (d % self.p)
        return x

    def check(self, x: int) -> int:
        if not (0 <= x < self.q):
            raise ValueError(f"{x} is not an element of {self!r}")
        return x

    # -- tables --

    @property
    def has_tables(self) -> bool:
        return self.q <= TABLE_CAP

    def _build_tables(self):
        q = self.q
        g = self.generator()
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._mul_poly(v, g)
        exp[q - 1:2 * (q - 1)] = exp[:q - 1]
        self._exp = exp
        self._log = log

    @property
    def exp_table(self):
        if self._exp is None:
            if not self.has_tables:
                raise FieldTooLarge(f"no log tables for |F| = {self.q}")
            self._build_tables()
        return self._exp

    @property
    def log_table(self):
        if self._log is None:
            self.exp_table
        return self._log

    # -- arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, mult = self.p, 0, 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, mult = self.p, 0, 1
        for _ in range(self.k):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_poly(self, a: int, b: int) -> int:
        pa, pb = self.digits(a), self.digits(b)
        return self.undigits(
            _poly_mulmod(pa, pb, list(self.poly), self.p) + [0] * self.k)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            exp, log = self.exp_table, self.log_table
            return int(exp[log[a] + log[b]])
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.has_tables:
            exp, log = self.exp_table, self.log_table
            return int(exp[(self.q - 1) - log[a]])
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def _pow_poly(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("inverse of zero")
            return 0 if e else 1
        e %= self.q - 1
        if self.has_tables:
            exp, log = self.exp_table, self.log_table
            return int(exp[(log[a] * e) % (self.q - 1)])
        return self._pow_poly(a, e)

    def frobenius(self, x: int, m: int) -> int:
        """x ** (p**m); m is reduced mod k, so m = k is the identity."""
        m %= self.k
        if m == 0 or x < 2:
            return x
        return self.pow(x, self.p ** m)

    def frobenius_table(self, m: int):
        """Elementwise table for x -> x**(p**m); requires log tables."""
        m %= self.k
        tbl = self._frob_tables.get(m)
        if tbl is None:
            exp, log = self.exp_table, self.log_table
            qm1 = self.q - 1
            tbl = np.zeros(self.q, dtype=np.int64)
            pm = pow(self.p, m, qm1)
            tbl[exp[:qm1]] = exp[(log[exp[:qm1]] * pm) % qm1]
            self._frob_tables[m] = tbl
        return tbl

    # -- multiplicative structure --

    def element_order(self, x: int) -> int:
        if x == 0:
            raise ZeroInput("order of zero")
        n = self.q - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(x, n // r) == 1:
                n //= r
        return n

    def generator(self) -> int:
        """A fixed primitive element: the least one, found by scanning."""
        if self._gen is None:
            n = self.q - 1
            facs = prime_factors(n)
            # table-free powering: this runs while the tables are built
            for cand in range(2, self.q):
                if all(self._pow_poly(cand, n // r) != 1 for r in facs):
                    self._gen = cand
                    break
            else:  # q == 2
                self._gen = 1
        return self._gen

    def degree_of(self, x: int) -> int:
        """Degree over the prime field of the subfield generated by x."""
        for m in sorted(_divisors(self.k)):
            if self.frobenius(x, m) == x:
                return m
        raise AssertionError("unreachable: k always works")


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# ----------------------------------------------------------------------
# construction
# ----------------------------------------------------------------------

def _canonical_poly(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    # lexicographic by (c0, c1, ..., c_{k-1}), constant term first
    def rec(prefix):
        if len(prefix) == k:
            cand = list(prefix) + [1]
            if _poly_is_irreducible(cand, p):
                return tuple(cand)
            return None
        for c in range(p):
            r = rec(prefix + [c])
            if r is not None:
                return r
        return None

    poly = rec([])
    if poly is None:
        raise AssertionError("no irreducible polynomial found")  # impossible
    return poly


@lru_cache(maxsize=None)
def _canonical_field(p: int, k: int) -> FieldDesc:
    return FieldDesc(p, k, _canonical_poly(p, k))


def field_create(p: int, k: int, poly=None) -> FieldDesc:
    """Build GF(p^k).  Omitting poly yields the canonical field."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {k}")
    if p ** k > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"|F| = {p}^{k} exceeds the 2^32 size guard")
    if poly is None:
        return _canonical_field(p, k)
    poly = tuple(int(c) % p for c in poly)
    if len(poly) != k + 1 or poly[-1] != 1:
        raise DegreeMismatch(
            f"polynomial must be monic of degree {k}, got {list(poly)}")
    if not _poly_is_irreducible(list(poly), p):
        raise ReduciblePolynomial(f"{list(poly)} is reducible over GF({p})")
    return FieldDesc(p, k, poly)


# ----------------------------------------------------------------------
# relative norm and trace
# ----------------------------------------------------------------------

def _check_divisor(F: FieldDesc, m: int):
    if m < 1 or F.k % m != 0:
        raise NotADivisor(f"{m} does not divide the extension degree {F.k}")


def rel_norm(F: FieldDesc, m: int, x: int) -> int:
    """Product of the Galois conjugates of x over the subfield GF(p^m)."""
    _check_divisor(F, m)
    t = F.k // m
    out = x
    for i in range(1, t):
        out = F.mul(out, F.frobenius(x, i * m))
    return out


def rel_trace(F: FieldDesc, m: int, x: int) -> int:
    _check_divisor(F, m)
    t = F.k // m
    out = x
    for i in range(1, t):
        out = F.add(out, F.frobenius(x, i * m))
    return out


def is_in_subfield(F: FieldDesc, m: int, x: int) -> bool:
    _check_divisor(F, m)
    return F.frobenius(x, m) == x


def solve_norm_equation(F: FieldDesc, m: int, mu: int, seed: int = 0) -> int:
    """Find nu in F with rel_norm(F, m, nu) == mu.

    Rejection sampling (expected <= |GF(p^m)^x| draws), with a
    deterministic exhaustive fallback for table-sized fields.
    """
    _check_divisor(F, m)
    if mu == 0:
        raise ZeroInput("norm equation with mu = 0")
    if not is_in_subfield(F, m, mu):
        raise NotInSubfield(f"mu = {mu} is not fixed by Frobenius^{m}")
    rng = random.Random(subseed(seed, "norm-eq", F.p, F.k, m, mu))
    trials = 64 * (F.p ** m)
    for _ in range(trials):
        nu = rng.randrange(1, F.q)
        if rel_norm(F, m, nu) == mu:
            return nu
    if F.q <= TABLE_CAP:
        for nu in range(1, F.q):
            if rel_norm(F, m, nu) == mu:
                return nu
    raise RetryLimitExceeded(
        f"no norm preimage of {mu} found after {trials} samples")


# ----------------------------------------------------------------------
# p-th roots
# ----------------------------------------------------------------------

def pth_root_unique(F: FieldDesc, mu: int, p_target: int) -> int:
    """Unique p-th root when p is the characteristic: the inverse Frobenius."""
    if p_target != F.p:
        raise WrongCharacteristic(
            f"p_target = {p_target} is not the characteristic {F.p}")
    if mu == 0:
        raise ZeroInput("root of zero")
    return F.frobenius(mu, F.k - 1)


def _bsgs_dlog(F: FieldDesc, base: int, target: int, order: int) -> int:
    """Baby-step/giant-step discrete log of target to the given base."""
    msize = int(order ** 0.5) + 1
    baby = {}
    v = 1
    for j in range(msize):
        baby.setdefault(v, j)
        v = F.mul(v, base)
    factor = F.inv(v)  # base^(-msize)
    gamma = target
    for i in range(msize + 1):
        j = baby.get(gamma)
        if j is not None:
            return (i * msize + j) % order
        gamma = F.mul(gamma, factor)
    raise ZeroInput("discrete log does not exist")


EXHAUSTIVE_ROOT_CAP = 1 << 20


def pth_roots_split(F: FieldDesc, mu: int, p_target: int):
    """All p_target-th roots of mu, over the smallest field containing them.

    Returns (E_prime, roots) where E_prime = GF(char^(k*e)) with e minimal
    such that all p_target solutions of nu^p = mu lie in E_prime, and
    roots are the solutions encoded in E_prime, ascending.
    """
    if mu == 0:
        raise ZeroInput("roots of zero")
    if p_target == F.p:
        raise SameCharacteristic(
            "use pth_root_unique when the root index equals the characteristic")
    if not is_prime(p_target):
        raise NotPrime(f"{p_target} is not prime")
    ell = p_target
    n_mu = F.element_order(mu)
    # All ell roots lie in GF(char^(k*e)) iff ell * ord(mu) divides its
    # multiplicative order; minimal such e.
    target = ell * n_mu
    e = 1
    while pow(F.p, F.k * e, target) != 1 % target:
        e += 1
        if F.p ** (F.k * e) > MAX_FIELD_SIZE:
            raise FieldTooLarge(
                f"root field GF({F.p}^{F.k * e}) exceeds the size guard")
    E2 = field_create(F.p, F.k * e)
    mu2 = subfield_embed(F, E2, mu)
    roots = []
    if E2.q <= EXHAUSTIVE_ROOT_CAP:
        for x in range(1, E2.q):
            if E2.pow(x, ell) == mu2:
                roots.append(x)
    else:
        g = E2.generator()
        qm1 = E2.q - 1
        lg = _bsgs_dlog(E2, g, mu2, qm1)
        # solve ell * x = lg (mod q-1); ell | q-1 here by minimality of e
        assert qm1 % ell == 0 and lg % ell == 0
        x0 = lg // ell
        zeta = E2.pow(g, qm1 // ell)
        r = E2.pow(g, x0)
        for i in range(ell):
            roots.append(r)
            r = E2.mul(r, zeta)
        roots.sort()
    if len(roots) != ell:
        raise NoRootFound(
            f"expected {ell} roots, found {len(roots)} in {E2!r}")
    return E2, roots


# ----------------------------------------------------------------------
# canonical subfield embeddings
# ----------------------------------------------------------------------

class Embedding:
    """The canonical field homomorphism GF(p^m) -> GF(p^k), m | k.

    Determined by the lexicographically least root of the small field's
    defining polynomial in the big field; GF(p)-linear on base-p digits,
    so the inverse is computed by solving a small linear system.
    """

    def __init__(self, small: FieldDesc, big: FieldDesc, root: int):
        self.small = small
        self.big = big
        self.root = root
        # power basis images root^j, j < m
        self._powers = [1]
        for _ in range(small.k - 1):
            self._powers.append(big.mul(self._powers[-1], root))

    def apply(self, x: int) -> int:
        self.small.check(x)
        out = 0
        for c, rj in zip(self.small.digits(x), self._powers):
            if c:
                out = self.big.add(out, self.big.mul(c % self.big.p, rj))
        return out

    def inverse(self, y: int) -> int:
        """Preimage in the small field; raises NotInSubfield if absent."""
        # Solve sum_j c_j root^j = y for digits c_j over GF(p) by
        # Gaussian elimination on the k x m digit matrix.
        from . import matgf  # local import; matgf depends on gf

        p = self.small.p
        Fp = field_create(p, 1)
        cols = [self.big.digits(rj) for rj in self._powers]
        rows = []
        ydig = self.big.digits(y)
        for r in range(self.big.k):
            rows.append([cols[j][r] for j in range(self.small.k)] + [ydig[r]])
        aug = matgf.MatrixGF.from_rows(Fp, rows)
        red, pivots = aug.rref()
        m = self.small.k
        if m in pivots:
            raise NotInSubfield(f"{y} is not in the image of {self.small!r}")
        sol = [0] * m
        for r, c in enumerate(pivots):
            sol[c] = red[r, m]
        x = self.small.undigits(sol)
        if self.apply(x) != y:
            raise NotInSubfield(f"{y} is not in the image of {self.small!r}")
        return x


@lru_cache(maxsize=None)
def _embedding(small: FieldDesc, big: FieldDesc) -> Embedding:
    if small.p != big.p or big.k % small.k != 0:
        raise NotASubfield(f"{small!r} does not embed in {big!r}")
    if small == big:
        return Embedding(small, big, small.undigits([0, 1]) if small.k > 1 else 1)
    # Roots of small.poly live in the degree-m subfield of big, which is
    # {0} union the powers of w^((q-1)/(p^m-1)) for primitive w.
    sub_order = small.q - 1
    if small.q > EXHAUSTIVE_ROOT_CAP:
        raise FieldTooLarge(
            f"subfield of size {small.q} too large for root search")
    w = big.generator()
    gamma = big.pow(w, (big.q - 1) // sub_order) if sub_order else 1
    poly = list(small.poly)
    roots = []
    x = 1
    for _ in range(sub_order):
        # evaluate small.poly at x via Horner
        acc = 0
        for c in reversed(poly):
            acc = big.add(big.mul(acc, x), c % big.p)
        if acc == 0:
            roots.append(x)
        x = big.mul(x, gamma)
    if small.k == 1:
        return Embedding(small, big, 1)
    if not roots:
        raise NoRootFound(
            f"no root of {poly} in {big!r}; inconsistent field data")
    return Embedding(small, big, min(roots))


def subfield_embed(F_small: FieldDesc, F_big: FieldDesc, x: int) -> int:
    """Image of x under the canonical embedding GF(p^m) -> GF(p^k)."""
    if F_small == F_big:
        return F_small.check(x)
    return _embedding(F_small, F_big).apply(x)


def subfield_unembed(F_small: FieldDesc, F_big: FieldDesc, y: int) -> int:
    """Preimage of y under the canonical embedding (NotInSubfield if none)."""
    if F_small == F_big:
        return F_small.check(y)
    return _embedding(F_small, F_big).inverse(y)
