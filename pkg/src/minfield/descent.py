"""Galois descent: rewrite an absolutely irreducible representation over
a subfield, with a replayable certificate, and iterate to the minimal
field.

The pipeline for one descent step from GF(p^k) to GF(p^m), m | k, with
alpha = x -> x^(p^m) generating the (cyclic) Galois group:

  1. find an intertwiner C with C^(-1) rho(g) C = rho(g)^alpha for all
     generators g (none exists <=> rho cannot be written over GF(p^m));
  2. the twisted norm product of C is a scalar mu, fixed by alpha;
  3. normalize C by a norm-equation solution nu (N(nu) = mu) so the
     product becomes the identity;
  4. solve the matrix Hilbert-90 equation C = A (A^alpha)^(-1);
  5. A^(-1) rho(g) A then has all entries fixed by alpha; re-encode them
     over the canonical GF(p^m).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf, matgf, rep
from .errors import NotAbsolutelyIrreducible, NotADivisor, NotInSubfield, NotWritable
from .matgf import MatrixGF
from .rep import Representation


@dataclass(frozen=True)
class DescentCertificate:
    """Witness of a successful rewrite over the subfield of degree m."""
    field: gf.FieldDesc       # the big field the input lived in
    m: int                    # subfield degree over the prime field
    C: MatrixGF               # intertwiner of rho with rho^alpha
    mu: int                   # scalar norm of C before normalization
    nu: int                   # norm-equation solution, N(nu) = mu
    A: MatrixGF               # Hilbert-90 matrix for nu^(-1) C
    seed: int                 # RNG seed used (replay reproduces C, mu, nu, A)

    def normalized_c(self) -> MatrixGF:
        return self.C.scalar_mul(self.field.inv(self.nu))

    def verify(self) -> None:
        """Re-check every internal invariant; raises AssertionError."""
        F = self.field
        assert gf.rel_norm(F, self.m, self.nu) == self.mu, "N(nu) != mu"
        Cn = self.normalized_c()
        assert matgf.semilinear_norm_scalar(Cn, self.m) == 1, \
            "normalized C has norm != 1"
        assert self.A.mul(self.A.frobenius(self.m).inverse()) == Cn, \
            "A (A^alpha)^(-1) != normalized C"


def descend(R: Representation, m: int, seed: int = 0):
    """Rewrite R over GF(p^m) if possible.

    Returns (certificate, representation over the canonical GF(p^m)).
    Raises NotWritable when no intertwiner exists (a proof, via the
    deterministic nullspace method, that R cannot be written over any
    field of p^m elements).
    """
    F = R.field
    if m < 1 or F.k % m != 0 or m >= F.k:
        raise NotADivisor(
            f"target degree {m} must properly divide the degree {F.k}")
    if not rep.is_absolutely_irreducible(R):
        raise NotAbsolutelyIrreducible(
            "descent requires an absolutely irreducible representation")
    R_alpha = rep.rep_frobenius(R, m)
    C = rep.find_intertwiner(R, R_alpha)
    if C is None:
        raise NotWritable(
            f"no intertwiner with the Frobenius twist: representation "
            f"cannot be written over GF({F.p}^{m})")
    mu = matgf.semilinear_norm_scalar(C, m)
    assert F.frobenius(mu, m) == mu, "norm scalar not in the fixed subfield"
    nu = gf.solve_norm_equation(F, m, mu, seed=seed)
    Cn = C.scalar_mul(F.inv(nu))
    A = matgf.hilbert90(Cn, m, seed=seed)
    cert = DescentCertificate(F, m, C, mu, nu, A, seed)

    small = gf.field_create(F.p, m)
    Ainv = A.inverse()
    new_gens = []
    for M in R.gens:
        B = Ainv.mul(M).mul(A)
        for e in B.entries:
            if F.frobenius(e, m) != e:
                raise NotInSubfield(
                    "conjugated generator has an entry outside the subfield")
        new_gens.append(B.map_entries(
            small, lambda e: gf.subfield_unembed(small, F, e)))
    out = Representation(small, R.degree, new_gens, R.group_ref)
    return cert, out


def minimal_field(R: Representation, seed: int = 0):
    """Iterate descent through maximal subfields until none succeeds.

    Returns (representation over its minimal field, certificate chain).
    The minimal field is unique in positive characteristic, so the
    attempt order does not affect the final field.
    """
    if not rep.is_absolutely_irreducible(R):
        raise NotAbsolutelyIrreducible(
            "minimal_field requires an absolutely irreducible representation")
    chain = []
    current = R
    step = 0
    while True:
        k = current.field.k
        progressed = False
        for q in gf.prime_factors(k):
            m = k // q
            try:
                cert, nxt = descend(current, m,
                                    seed=gf.subseed(seed, "minfield", step))
            except NotWritable:
                continue
            chain.append(cert)
            current = nxt
            progressed = True
            step += 1
            break
        if not progressed:
            return current, chain
