"""Inductive construction of absolutely irreducible representations of a
finite soluble group, each written over its minimal field.

Walk up the composition series defined by a consistent power-conjugate
presentation.  At each level the known irreducibles of the subgroup
G_{i+1} are permuted by conjugation with a = g_i; fixed points extend to
G_i (uniquely when the step prime equals the characteristic, in p ways
otherwise), and free orbits of size p induce to a single irreducible of
G_i.  When the induced representation can be written over the index-p
subfield, it is constructed there directly through the regular
representation of the field extension (the phi / M / S construction).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf, matgf, pcgroup, rep
from .errors import (
    InternalInconsistency,
    NotADivisor,
    NotConjugateStable,
    NotPrime,
    OrbitNotFree,
)
from .matgf import MatrixGF
from .pcgroup import PcPresentation
from .rep import Representation


def _lcm(a, b):
    g = rep._gcd(a, b)
    return a // g * b


# ----------------------------------------------------------------------
# conjugation of representations
# ----------------------------------------------------------------------

def conjugate_rep(P: PcPresentation, i: int, sigma: Representation) -> Representation:
    """sigma^a with a = g_i: each g_j (j > i) maps to sigma(a g_j a^-1)."""
    pres, level = sigma.group_ref
    if pres is not P or level != i + 1:
        raise InternalInconsistency(
            f"conjugate_rep at level {i} needs a representation of G_{i + 1}")
    gens = []
    for j in range(i + 1, P.n + 1):
        unit = tuple(1 if t == j - 1 else 0 for t in range(P.n))
        gens.append(sigma.evaluate(pcgroup.pc_conjugate(P, i, unit)))
    return Representation(sigma.field, sigma.degree, gens, (P, i + 1))


def _power_of_a_image(P: PcPresentation, i: int, sigma: Representation) -> MatrixGF:
    """sigma(a^p) where a = g_i and p = p_i (a^p lies in G_{i+1})."""
    nf = pcgroup.collect(P, P.power_words[i - 1])
    return sigma.evaluate(nf)


def satisfies_relations(R: Representation) -> bool:
    """Check every power and conjugate relation at R's level, exactly."""
    P, level = R.group_ref
    for j in range(level, P.n + 1):
        lhs = R.gens[j - level].pow(P.primes[j - 1])
        rhs = R.evaluate(pcgroup.collect(P, P.power_words[j - 1]))
        if lhs != rhs:
            return False
    for j in range(level, P.n + 1):
        gj = R.gens[j - level]
        gj_inv = gj.inverse()
        for l in range(j + 1, P.n + 1):
            lhs = gj_inv.mul(R.gens[l - level]).mul(gj)
            rhs = R.evaluate(pcgroup.collect(P, P.conj_word(j, l)))
            if lhs != rhs:
                return False
    return True


# ----------------------------------------------------------------------
# Case 1: extension of a conjugation-stable representation
# ----------------------------------------------------------------------

def extend_case1(P: PcPresentation, i: int, sigma: Representation,
                 seed: int = 0) -> list[Representation]:
    """All extensions of sigma to G_i, each over its minimal field.

    Requires sigma^a equivalent to sigma (a = g_i).  With p = p_i: when
    p equals the characteristic there is a unique extension, over
    sigma's own field; otherwise there are p pairwise inequivalent
    extensions rho_j(a) = nu_j^(-1) A, one per p-th root nu_j of the
    scalar mu defined by A^p = mu * sigma(a^p).
    """
    E = sigma.field
    p = P.primes[i - 1]
    sigma_a = conjugate_rep(P, i, sigma)
    A = rep.find_intertwiner(sigma_a, sigma)
    if A is None:
        raise NotConjugateStable(
            "sigma^a is not equivalent to sigma; use induce_case2")
    sig_ap = _power_of_a_image(P, i, sigma)
    Q = A.pow(p).mul(sig_ap.inverse())
    mu = Q.scalar_value()
    if mu is None or mu == 0:
        raise InternalInconsistency("A^p is not a scalar multiple of sigma(a^p)")

    if p == E.p:
        nu = gf.pth_root_unique(E, mu, p)
        rho_a = A.scalar_mul(E.inv(nu))
        return [Representation(E, sigma.degree, (rho_a,) + sigma.gens, (P, i))]

    E2, roots = gf.pth_roots_split(E, mu, p)
    # Embed everything into the root field once, then drop each extension
    # to its own minimal field through the canonical subfield of E2; a
    # single homomorphism path keeps all relations intact.
    emb = (lambda x: gf.subfield_embed(E, E2, x))
    sigma_gens_big = [M.map_entries(E2, emb) for M in sigma.gens]
    A_big = A.map_entries(E2, emb)
    out = []
    for nu in roots:
        m = _lcm(E.k, E2.degree_of(nu))
        small = gf.field_create(E.p, m)
        nu_inv = E2.inv(nu)
        gens_big = [A_big.scalar_mul(nu_inv)] + sigma_gens_big
        gens = [M.map_entries(small,
                              lambda x: gf.subfield_unembed(small, E2, x))
                for M in gens_big]
        out.append(Representation(small, sigma.degree, gens, (P, i)))
    return out


# ----------------------------------------------------------------------
# regular representation of a field extension
# ----------------------------------------------------------------------

class RegularEmbedding:
    """phi: E -> Mat(p, F) via multiplication in the power basis of E/F,
    plus the matrix M of the distinguished automorphism.

    F is the fixed field of alpha = x -> x^(q0^frob_exponent), which must
    have order p_step.  Coordinates are rows: r(xi) * phi(lam) = r(xi*lam)
    and r(xi) * M = r(xi^alpha).
    """

    def __init__(self, E: gf.FieldDesc, p_step: int, frob_exponent=None):
        if not gf.is_prime(p_step):
            raise NotPrime(f"{p_step} is not prime")
        if E.k % p_step != 0:
            raise NotADivisor(
                f"{p_step} does not divide the extension degree {E.k}")
        m0 = E.k // p_step
        if frob_exponent is None:
            frob_exponent = m0
        if rep._gcd(frob_exponent, E.k) != m0:
            raise NotADivisor(
                f"Frobenius exponent {frob_exponent} does not give an "
                f"automorphism of order {p_step} fixing GF({E.p}^{m0})")
        self.E = E
        self.p_step = p_step
        self.frob_exponent = frob_exponent
        self.F = gf.field_create(E.p, m0)

        Fp = gf.field_create(E.p, 1)
        x = E.undigits([0, 1]) if E.k > 1 else 1
        self._x = x
        xp = [1]
        for _ in range(p_step - 1):
            xp.append(E.mul(xp[-1], x))
        self._xpowers = xp
        # GF(p)-linear change of basis: columns are the digit vectors of
        # embed(F basis elt) * x^j; invert once for coordinate extraction.
        cols = []
        for j in range(p_step):
            for b in range(self.F.k):
                unit = self.F.undigits([1 if t == b else 0
                                        for t in range(self.F.k)])
                yb = gf.subfield_embed(self.F, E, unit)
                cols.append(E.digits(E.mul(yb, xp[j])))
        T = MatrixGF.from_rows(Fp, [[cols[c][r] for c in range(E.k)]
                                    for r in range(E.k)])
        self._Tinv = T.inverse()
        self._Fp = Fp

        self.M = MatrixGF.from_rows(self.F, [
            self.coords(E.frobenius(xp[r], frob_exponent))
            for r in range(p_step)])
        # construction-time sanity: phi is a homomorphism on the power
        # basis, and M realizes the automorphism
        ident = MatrixGF.identity(self.F, p_step)
        assert self.phi(1) == ident
        assert self.phi(x).mul(self.phi(xp[-1])) == self.phi(E.mul(x, xp[-1]))
        assert self.M.pow(p_step) == ident
        assert self.M.inverse().mul(self.phi(x)).mul(self.M) == \
            self.phi(E.frobenius(x, frob_exponent))

    def coords(self, xi: int) -> list[int]:
        """F-coordinates of xi in the power basis, as a length-p row."""
        E, Fq = self.E, self.F
        dig = MatrixGF(self._Fp, E.k, 1, E.digits(xi))
        w = self._Tinv.mul(dig)
        return [Fq.undigits(w.entries[j * Fq.k:(j + 1) * Fq.k])
                for j in range(self.p_step)]

    def phi(self, lam: int) -> MatrixGF:
        """Multiplication-by-lam as a p x p matrix over F (rows = coords)."""
        E = self.E
        return MatrixGF.from_rows(
            self.F, [self.coords(E.mul(xr, lam)) for xr in self._xpowers])

    def blow_up(self, X: MatrixGF) -> MatrixGF:
        """Replace each entry of X by its phi image: Mat(d,E) -> Mat(pd,F)."""
        d_r, d_c, ps = X.rows, X.cols, self.p_step
        out = [[0] * (d_c * ps) for _ in range(d_r * ps)]
        for a in range(d_r):
            for b in range(d_c):
                blk = self.phi(X[a, b])
                for r in range(ps):
                    row = out[a * ps + r]
                    for s in range(ps):
                        row[b * ps + s] = blk[r, s]
        return MatrixGF.from_rows(self.F, out)

    def block_diag_m(self, d: int) -> MatrixGF:
        """Diagonal sum of d copies of M (the matrix S)."""
        ps = self.p_step
        out = [[0] * (d * ps) for _ in range(d * ps)]
        for a in range(d):
            for r in range(ps):
                for s in range(ps):
                    out[a * ps + r][a * ps + s] = self.M[r, s]
        return MatrixGF.from_rows(self.F, out)


def build_regular_embedding(E: gf.FieldDesc, p_step: int,
                            frob_exponent=None) -> RegularEmbedding:
    return RegularEmbedding(E, p_step, frob_exponent)


# ----------------------------------------------------------------------
# Case 2: induction from a free orbit
# ----------------------------------------------------------------------

def standard_induction(P: PcPresentation, i: int,
                       sigma: Representation) -> Representation:
    """The induced representation of G_i over sigma's own field.

    Block structure: rho(h) = diag(sigma(h), sigma^a(h), ...,
    sigma^(a^(p-1))(h)); rho(a) has identity blocks on the first
    superdiagonal and sigma(a^p) in the wrap-around corner.
    """
    E = sigma.field
    p = P.primes[i - 1]
    d = sigma.degree
    conj = [sigma]
    for _ in range(p - 1):
        conj.append(conjugate_rep(P, i, conj[-1]))
    D = p * d

    def block_diag(mats):
        out = [[0] * D for _ in range(D)]
        for r, M in enumerate(mats):
            for a in range(d):
                for b in range(d):
                    out[r * d + a][r * d + b] = M[a, b]
        return MatrixGF.from_rows(E, out)

    gens = []
    # rho(a)
    sig_ap = _power_of_a_image(P, i, sigma)
    out = [[0] * D for _ in range(D)]
    for r in range(p - 1):
        for a in range(d):
            out[r * d + a][(r + 1) * d + a] = 1
    for a in range(d):
        for b in range(d):
            out[(p - 1) * d + a][b] = sig_ap[a, b]
    gens.append(MatrixGF.from_rows(E, out))
    for j in range(i + 1, P.n + 1):
        gens.append(block_diag([c.gens[j - (i + 1)] for c in conj]))
    return Representation(E, D, gens, (P, i))


def induce_case2(P: PcPresentation, i: int, sigma: Representation,
                 seed: int = 0) -> Representation:
    """Induce sigma (a free orbit representative) to G_i, over the
    minimal field of the induced representation.

    Branches: (a) p does not divide sigma's field degree k: standard
    induction, minimal field is sigma's field; (b) p | k but the
    Frobenius twist of sigma is not equivalent to any G-conjugate: same;
    (c) p | k and the twist hits the orbit: the induced representation
    can be written over the index-p subfield, built directly via the
    regular-representation blow-up.
    """
    E = sigma.field
    p = P.primes[i - 1]
    k = E.k
    conj = [sigma]
    for _ in range(p - 1):
        conj.append(conjugate_rep(P, i, conj[-1]))
    for j in range(1, p):
        if rep.are_equivalent(sigma, conj[j]):
            raise OrbitNotFree(
                f"sigma is equivalent to its conjugate by a^{j}")

    if k % p != 0:
        induced = standard_induction(P, i, sigma)
        _check_induced(induced, P, i, sigma, conj)
        return induced

    m0 = k // p
    sigma_tw = rep.rep_frobenius(sigma, m0)
    j_hit = None
    for j in range(1, p):
        if (conj[j].field == sigma_tw.field
                and rep.are_equivalent(conj[j], sigma_tw)):
            j_hit = j
            break
    if j_hit is None:
        induced = standard_induction(P, i, sigma)
        _check_induced(induced, P, i, sigma, conj)
        return induced

    # branch (c): align the automorphism so sigma^alpha' ~ sigma^a
    x = pow(j_hit, -1, p)
    m_exp = (x * m0) % k
    sigma_al = rep.rep_frobenius(sigma, m_exp)
    if not rep.are_equivalent(conj[1], sigma_al):
        raise InternalInconsistency(
            "automorphism alignment failed: sigma^alpha' is not "
            "equivalent to sigma^a")
    A = rep.find_intertwiner(conj[1], sigma_al)
    NA = matgf.semilinear_product(A, m_exp, p)
    sig_ap = _power_of_a_image(P, i, sigma)
    mu = NA.mul(sig_ap.inverse()).scalar_value()
    if mu is None or mu == 0:
        raise InternalInconsistency(
            "twisted product of A is not a scalar multiple of sigma(a^p)")
    assert E.frobenius(mu, m0) == mu, "mu not fixed by the automorphism"
    nu = gf.solve_norm_equation(E, m0, mu, seed=seed)
    A = A.scalar_mul(E.inv(nu))
    assert matgf.semilinear_product(A, m_exp, p) == sig_ap

    remb = RegularEmbedding(E, p, m_exp)
    d = sigma.degree
    S_inv = remb.block_diag_m(d).inverse()
    rho_a = remb.blow_up(A).mul(S_inv)
    gens = [rho_a] + [remb.blow_up(M) for M in sigma.gens]
    induced = Representation(remb.F, p * d, gens, (P, i))

    # the two defining verifications, exactly
    assert rho_a.pow(p) == remb.blow_up(sig_ap), "rho(a)^p != rho(a^p)"
    rho_a_inv = rho_a.inverse()
    for t, j in enumerate(range(i + 1, P.n + 1)):
        lhs = rho_a.mul(remb.blow_up(sigma.gens[t])).mul(rho_a_inv)
        rhs = remb.blow_up(conj[1].gens[t])
        assert lhs == rhs, "rho(a) rho(h) rho(a)^-1 != rho(a h a^-1)"

    _check_induced(induced, P, i, sigma, conj)
    return induced


def _check_induced(induced: Representation, P, i, sigma, conj):
    """Verify absolute irreducibility and equivalence to the standard
    induced representation over a common extension field."""
    if not rep.is_absolutely_irreducible(induced):
        raise InternalInconsistency("induced representation is not "
                                    "absolutely irreducible")
    std = standard_induction(P, i, sigma)
    if induced.field == std.field:
        big = induced
    else:
        E = std.field
        big = Representation(
            E, induced.degree,
            [M.map_entries(E, lambda x: gf.subfield_embed(induced.field, E, x))
             for M in induced.gens],
            induced.group_ref)
    if rep.find_intertwiner(std, big) is None:
        raise InternalInconsistency(
            "induced representation is not equivalent to the standard "
            "induction")


# ----------------------------------------------------------------------
# the level-by-level driver
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class IrrepEntry:
    rep: Representation
    provenance: str            # "trivial" | "extension" | "induction"
    parent: int                # index into the previous level's table
    orbit: tuple[int, ...]     # indices of the G-conjugacy class absorbed

    @property
    def degree(self):
        return self.rep.degree

    @property
    def field(self):
        return self.rep.field


@dataclass(frozen=True)
class IrrepTable:
    presentation: PcPresentation
    level: int
    entries: tuple[IrrepEntry, ...]

    @property
    def reps(self):
        return [e.rep for e in self.entries]

    def degree_field_multiset(self):
        return sorted((e.degree, e.field.q) for e in self.entries)


def _assert_table_valid(P, i, entries, char):
    for e in entries:
        if not satisfies_relations(e.rep):
            raise InternalInconsistency(
                f"level {i}: entry violates the presentation relations")
        if not rep.is_absolutely_irreducible(e.rep):
            raise InternalInconsistency(
                f"level {i}: entry is not absolutely irreducible")
        if rep.character_field(e.rep) != e.field.k:
            raise InternalInconsistency(
                f"level {i}: entry's field degree {e.field.k} differs from "
                f"its character field degree")
    for a in range(len(entries)):
        for b in range(a + 1, len(entries)):
            ra, rb = entries[a].rep, entries[b].rep
            if (ra.field == rb.field and ra.degree == rb.degree
                    and rep.are_equivalent(ra, rb)):
                raise InternalInconsistency(
                    f"level {i}: entries {a} and {b} are equivalent")
    order = 1
    for j in range(i - 1, P.n):
        order *= P.primes[j]
    if order % char != 0:
        total = sum(e.degree ** 2 for e in entries)
        if total != order:
            raise InternalInconsistency(
                f"level {i}: sum of squared degrees {total} != group "
                f"order {order}")


def irreps(P: PcPresentation, char: int, seed: int = 0,
           validate_presentation: bool = True) -> IrrepTable:
    """Complete table of absolutely irreducible representations of the
    presented group in the given characteristic, each over its minimal
    field, pairwise inequivalent."""
    if not gf.is_prime(char):
        raise NotPrime(f"{char} is not prime")
    if validate_presentation:
        pcgroup.enumerate_and_check(P, seed=seed)
    F0 = gf.field_create(char, 1)
    triv = Representation(F0, 1, (), (P, P.n + 1))
    entries = (IrrepEntry(triv, "trivial", 0, (0,)),)
    for i in range(P.n, 0, -1):
        p = P.primes[i - 1]
        reps = [e.rep for e in entries]
        perm = []
        for idx, r in enumerate(reps):
            ra = conjugate_rep(P, i, r)
            found = None
            for jdx, r2 in enumerate(reps):
                if (r2.field == ra.field and r2.degree == ra.degree
                        and rep.are_equivalent(r2, ra)):
                    found = jdx
                    break
            if found is None:
                raise InternalInconsistency(
                    f"level {i}: conjugate of entry {idx} missing from table")
            perm.append(found)
        # orbits of the conjugation permutation
        seen = set()
        orbits = []
        for idx in range(len(reps)):
            if idx in seen:
                continue
            orb = [idx]
            seen.add(idx)
            cur = perm[idx]
            while cur != idx:
                orb.append(cur)
                seen.add(cur)
                cur = perm[cur]
            orbits.append(tuple(sorted(orb)))
        orbits.sort(key=min)
        new_entries = []
        for orb in orbits:
            idx0 = min(orb)
            rep0 = reps[idx0]
            sub = gf.subseed(seed, "level", i, idx0)
            if len(orb) == 1:
                for ext in extend_case1(P, i, rep0, seed=sub):
                    new_entries.append(IrrepEntry(ext, "extension", idx0, orb))
            elif len(orb) == p:
                ind = induce_case2(P, i, rep0, seed=sub)
                new_entries.append(IrrepEntry(ind, "induction", idx0, orb))
            else:
                raise InternalInconsistency(
                    f"level {i}: orbit of size {len(orb)} (expected 1 or {p})")
        _assert_table_valid(P, i, new_entries, char)
        entries = tuple(new_entries)
    return IrrepTable(P, 1, entries)
