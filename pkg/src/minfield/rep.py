"""Matrix representations of finitely generated groups.

A Representation is a field plus one nonsingular matrix per generator.
When built from a power-conjugate presentation it carries a group_ref
(presentation, level i) meaning the matrices represent g_i, ..., g_n;
group elements can then be enumerated as normal words and evaluated.
"""

from __future__ import annotations

from . import gf
from .errors import (
    CapExceeded,
    DegreeMismatch,
    FieldMismatch,
    InternalInconsistency,
    NotAbsolutelyIrreducible,
    Singular,
)
from .matgf import MatrixGF


class Representation:
    __slots__ = ("field", "degree", "gens", "group_ref")

    def __init__(self, field, degree, gens, group_ref=None):
        gens = tuple(gens)
        for M in gens:
            if M.field != field:
                raise FieldMismatch("generator matrix over the wrong field")
            if M.rows != degree or M.cols != degree:
                raise DegreeMismatch("generator matrix of the wrong degree")
            if not M.is_nonsingular():
                raise Singular("generator matrix is singular")
        self.field = field
        self.degree = degree
        self.gens = gens
        self.group_ref = group_ref  # (PcPresentation, level) or None

    def __repr__(self):
        return (f"Representation(d={self.degree}, n={len(self.gens)}, "
                f"field={self.field!r})")

    def __eq__(self, other):
        return (isinstance(other, Representation)
                and self.field == other.field
                and self.degree == other.degree
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.field, self.degree, self.gens))

    def conjugate(self, B: MatrixGF) -> "Representation":
        """B^(-1) * rho * B."""
        Binv = B.inverse()
        return Representation(
            self.field, self.degree,
            [Binv.mul(M).mul(B) for M in self.gens], self.group_ref)

    def evaluate(self, exponents) -> MatrixGF:
        """Matrix of the normal word with the given exponent vector.

        With group_ref (P, i) the vector covers g_1..g_n and entries
        below level i must be zero; without group_ref the vector indexes
        self.gens directly.
        """
        if self.group_ref is not None:
            pres, level = self.group_ref
            if any(exponents[j] for j in range(level - 1)):
                raise InternalInconsistency(
                    "word uses generators below the representation's level")
            exps = exponents[level - 1:]
        else:
            exps = exponents
        M = MatrixGF.identity(self.field, self.degree)
        for g, e in zip(self.gens, exps):
            if e:
                M = M.mul(g.pow(e))
        return M


def rep_frobenius(R: Representation, m: int) -> Representation:
    """Entrywise Frobenius twist of every generator matrix."""
    return Representation(R.field, R.degree,
                          [M.frobenius(m) for M in R.gens], R.group_ref)


def _intertwiner_system(R1: Representation, R2: Representation) -> MatrixGF:
    """Coefficient matrix of R1(g)C - C R2(g) = 0 in the d^2 entries of C.

    Unknown vector is C read row-major: column index a*d + b <-> C_{ab}.
    """
    F = R1.field
    d = R1.degree
    rows = []
    for G1, G2 in zip(R1.gens, R2.gens):
        for i in range(d):
            for j in range(d):
                row = [0] * (d * d)
                for a in range(d):
                    row[a * d + j] = F.add(row[a * d + j], G1[i, a])
                for b in range(d):
                    row[i * d + b] = F.sub(row[i * d + b], G2[b, j])
                rows.append(row)
    return MatrixGF.from_rows(F, rows)


def is_absolutely_irreducible(R: Representation) -> bool:
    """True iff the centralizer algebra of the image is the scalars."""
    if R.degree == 1:
        return True
    if not R.gens:
        return False  # trivial group in degree > 1 centralizes everything
    return len(_intertwiner_system(R, R).nullspace_basis()) == 1


def find_intertwiner(R1: Representation, R2: Representation):
    """Nonsingular C with C^(-1) R1(g) C = R2(g) for all generators g.

    Returns None when the representations are inequivalent.  With R1
    absolutely irreducible, C is unique up to scalar; it is normalized
    so that its first nonzero entry (row-major) is 1.
    """
    if R1.field != R2.field:
        raise FieldMismatch("intertwiner needs a common field")
    if R1.degree != R2.degree or len(R1.gens) != len(R2.gens):
        raise DegreeMismatch("intertwiner needs equal degree and generator count")
    if R1.degree == 1 or not R1.gens:
        # solution space is all of E; equivalence <=> equal 1x1 images
        if R1.gens == R2.gens:
            return MatrixGF.identity(R1.field, R1.degree)
        if R1.degree == 1:
            return None
    basis = _intertwiner_system(R1, R2).nullspace_basis()
    if not basis:
        return None
    if len(basis) > 1:
        if is_absolutely_irreducible(R1):
            raise InternalInconsistency(
                "intertwiner space of dimension > 1 for an absolutely "
                "irreducible representation")
        raise NotAbsolutelyIrreducible(
            "ambiguous intertwiner space; R1 is not absolutely irreducible")
    vec = basis[0].entries
    F = R1.field
    first = next(x for x in vec if x)
    scale = F.inv(first)
    d = R1.degree
    C = MatrixGF(F, d, d, [F.mul(scale, x) for x in vec])
    if not C.is_nonsingular():
        return None
    return C


def are_equivalent(R1: Representation, R2: Representation) -> bool:
    if R1.field != R2.field or R1.degree != R2.degree:
        return False
    return find_intertwiner(R1, R2) is not None


def _group_element_words(pres, level):
    """Exponent vectors of all normal words of G_level."""
    import itertools

    ranges = [range(1) for _ in range(level - 1)]
    ranges += [range(pres.primes[j]) for j in range(level - 1, pres.n)]
    return itertools.product(*ranges)


def character_field(R: Representation, element_cap: int = 100_000) -> int:
    """Degree over the prime field of the field generated by all traces."""
    F = R.field
    traces = set()
    if R.group_ref is not None:
        pres, level = R.group_ref
        order = 1
        for j in range(level - 1, pres.n):
            order *= pres.primes[j]
        if order > element_cap:
            raise CapExceeded(f"group order {order} exceeds cap {element_cap}")
        for word in _group_element_words(pres, level):
            traces.add(R.evaluate(word).trace())
    else:
        seen = {MatrixGF.identity(F, R.degree)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for M in frontier:
                for g in R.gens:
                    Mg = M.mul(g)
                    if Mg not in seen:
                        seen.add(Mg)
                        nxt.append(Mg)
                        if len(seen) > element_cap:
                            raise CapExceeded(
                                f"matrix group closure exceeds cap {element_cap}")
            frontier = nxt
        traces = {M.trace() for M in seen}
    m = 1
    for t in traces:
        dt = F.degree_of(t)
        # lcm of the degrees of all trace values
        g = _gcd(m, dt)
        m = m // g * dt
    return m


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
