"""Consistent power-conjugate presentations of finite soluble groups.

A presentation has generators g_1..g_n, primes p_1..p_n, power
relations g_i^{p_i} = v_i and conjugate relations g_i^{-1} g_j g_i =
w_{ij} (i < j), where v_i and w_{ij} are words in generators of index
> i.  Elements are normal words g_1^{e_1} ... g_n^{e_n} with
0 <= e_i < p_i, reached by collection from the left.

Words are tuples of (generator index, exponent) pairs, 1-based indices;
the empty tuple is the identity.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import (
    InconsistentPresentation,
    IndexOutOfRange,
    NotInSubgroup,
    NotPrime,
    PcSyntaxError,
)
from .gf import is_prime, subseed

Word = tuple[tuple[int, int], ...]

FULL_TABLE_CAP = 200
ENUMERATION_CAP = 100_000


@dataclass(frozen=True)
class PcPresentation:
    primes: tuple[int, ...]
    power_words: tuple[Word, ...]          # v_i, one per generator
    conj_words: dict = field(hash=False)   # (i, j) -> w_ij for i < j

    @property
    def n(self) -> int:
        return len(self.primes)

    @property
    def order(self) -> int:
        o = 1
        for p in self.primes:
            o *= p
        return o

    def conj_word(self, i: int, j: int) -> Word:
        return self.conj_words.get((i, j), ((j, 1),))

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.n


def _check_word(word: Word, min_index: int, n: int, what: str):
    for g, _ in word:
        if not (1 <= g <= n):
            raise IndexOutOfRange(f"{what}: generator g{g} out of range")
        if g <= min_index:
            raise IndexOutOfRange(
                f"{what}: generator g{g} not allowed (must have index > {min_index})")


def make_presentation(primes, power_words=None, conj_words=None) -> PcPresentation:
    primes = tuple(int(p) for p in primes)
    n = len(primes)
    for p in primes:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
    pw = list(power_words or [()] * n)
    if len(pw) != n:
        raise PcSyntaxError("need one power word per generator")
    pw = [tuple((int(g), int(e)) for g, e in w) for w in pw]
    cw = {}
    for (i, j), w in (conj_words or {}).items():
        if not (1 <= i < j <= n):
            raise IndexOutOfRange(f"conjugate relation ({i},{j}) out of range")
        cw[(i, j)] = tuple((int(g), int(e)) for g, e in w)
    for i, w in enumerate(pw, start=1):
        _check_word(w, i, n, f"power word v_{i}")
    for (i, j), w in cw.items():
        _check_word(w, i, n, f"conjugate word w_{i}{j}")
    return PcPresentation(primes, tuple(pw), cw)


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------

def _parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1" or not text:
        return ()
    out = []
    for tok in text.split():
        if not tok.startswith("g"):
            raise PcSyntaxError(f"bad word token {tok!r}")
        body = tok[1:]
        if "^" in body:
            gs, es = body.split("^", 1)
        else:
            gs, es = body, "1"
        try:
            out.append((int(gs), int(es)))
        except ValueError:
            raise PcSyntaxError(f"bad word token {tok!r}") from None
    return tuple(out)


def parse_pc(text: str) -> PcPresentation:
    """Parse the PC file format (see the package README for the grammar)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("pcgroup"):
        raise PcSyntaxError("expected a 'pcgroup n=<n>' header line")
    try:
        n = int(lines[0].split("n=", 1)[1])
    except (IndexError, ValueError):
        raise PcSyntaxError("malformed pcgroup header") from None
    if n < 0:
        raise PcSyntaxError("n must be nonnegative")
    idx = 1
    primes: tuple[int, ...] = ()
    if n > 0:
        if idx >= len(lines) or not lines[idx].startswith("primes"):
            raise PcSyntaxError("expected a 'primes ...' line")
        parts = lines[idx].split()[1:]
        if len(parts) != n:
            raise PcSyntaxError(f"expected {n} primes, got {len(parts)}")
        primes = tuple(int(p) for p in parts)
        idx += 1
    power_words = [()] * n
    conj_words = {}
    for ln in lines[idx:]:
        if ln.startswith("pow"):
            head, _, word = ln.partition("=")
            parts = head.split()
            if len(parts) != 2:
                raise PcSyntaxError(f"malformed pow line: {ln!r}")
            i = int(parts[1])
            if not (1 <= i <= n):
                raise IndexOutOfRange(f"pow index {i} out of range")
            power_words[i - 1] = _parse_word(word)
        elif ln.startswith("conj"):
            head, _, word = ln.partition("=")
            parts = head.split()
            if len(parts) != 3:
                raise PcSyntaxError(f"malformed conj line: {ln!r}")
            i, j = int(parts[1]), int(parts[2])
            if not (1 <= i < j <= n):
                raise IndexOutOfRange(f"conj pair ({i},{j}) out of range")
            conj_words[(i, j)] = _parse_word(word)
        else:
            raise PcSyntaxError(f"unrecognized line: {ln!r}")
    return make_presentation(primes, power_words, conj_words)


def _format_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(f"g{g}^{e}" if e != 1 else f"g{g}" for g, e in word)


def serialize_pc(P: PcPresentation) -> str:
    out = [f"pcgroup n={P.n}"]
    if P.n:
        out.append("primes " + " ".join(str(p) for p in P.primes))
    for i, w in enumerate(P.power_words, start=1):
        if w:
            out.append(f"pow {i} = {_format_word(w)}")
    for (i, j) in sorted(P.conj_words):
        out.append(f"conj {i} {j} = {_format_word(P.conj_words[(i, j)])}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# collection
# ----------------------------------------------------------------------

def collect(P: PcPresentation, word) -> tuple[int, ...]:
    """Normal form of an arbitrary word, by collection from the left.

    Exponents may be any integers; negatives are resolved through the
    power relations (g_i^{-1} = g_i^{p_i - 1} v_i^{-1}).
    """
    letters = [(int(g), int(e)) for g, e in word if e != 0]
    for g, _ in letters:
        if not (1 <= g <= P.n):
            raise IndexOutOfRange(f"generator g{g} out of range")
    guard = 0
    while True:
        guard += 1
        if guard > 10_000_000:
            raise InconsistentPresentation("collection did not terminate")
        changed = False
        for idx in range(len(letters)):
            g, e = letters[idx]
            p = P.primes[g - 1]
            if e < 0:
                # g^e = g^(e+1) g^(p-1) v^(-1)
                repl = []
                if e + 1 != 0:
                    repl.append((g, e + 1))
                repl.append((g, p - 1))
                repl.extend((h, -f) for h, f in reversed(P.power_words[g - 1]))
                letters[idx:idx + 1] = repl
                changed = True
                break
            if e >= p:
                # g^e = g^(e-p) v
                repl = []
                if e - p != 0:
                    repl.append((g, e - p))
                repl.extend(P.power_words[g - 1])
                letters[idx:idx + 1] = repl
                changed = True
                break
            if idx + 1 < len(letters):
                h, f = letters[idx + 1]
                if h == g:
                    letters[idx:idx + 2] = [(g, e + f)] if e + f else []
                    changed = True
                    break
                if h < g and f > 0:
                    # g^e h = h (h^-1 g h)^e = h w_{hg}^e
                    w = P.conj_word(h, g)
                    repl = [(h, 1)]
                    for _ in range(e):
                        repl.extend(w)
                    if f - 1:
                        repl.append((h, f - 1))
                    letters[idx:idx + 2] = repl
                    changed = True
                    break
                if h < g and f < 0:
                    # expand one inverse of h first
                    p_h = P.primes[h - 1]
                    repl = []
                    if f + 1 != 0:
                        repl.append((h, f + 1))
                    repl.append((h, p_h - 1))
                    repl.extend((x, -y)
                                for x, y in reversed(P.power_words[h - 1]))
                    letters[idx + 1:idx + 2] = repl
                    changed = True
                    break
        if not changed:
            break
    ev = [0] * P.n
    for g, e in letters:
        ev[g - 1] = e
    return tuple(ev)


def word_of(ev) -> Word:
    """Word form of an exponent vector."""
    return tuple((i + 1, e) for i, e in enumerate(ev) if e)


def inverse_word(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def pc_multiply(P: PcPresentation, u, v) -> tuple[int, ...]:
    """Product of two normal words (exponent vectors)."""
    return collect(P, word_of(u) + word_of(v))


def pc_inverse(P: PcPresentation, u) -> tuple[int, ...]:
    return collect(P, inverse_word(word_of(u)))


def pc_conjugate(P: PcPresentation, i: int, h) -> tuple[int, ...]:
    """Normal word of g_i * h * g_i^{-1}, for h in G_{i+1}.

    The result must again lie in G_{i+1}; a nonzero exponent at level i
    signals an inconsistent presentation.
    """
    h = tuple(h)
    if any(h[j] for j in range(i)):
        raise NotInSubgroup(f"word {h} is not in G_{i + 1}")
    res = collect(P, ((i, 1),) + word_of(h) + ((i, -1),))
    if any(res[j] for j in range(i)):
        raise NotInSubgroup(
            f"conjugate of {h} by g{i} left the subgroup: {res}")
    return res


# ----------------------------------------------------------------------
# enumeration and consistency
# ----------------------------------------------------------------------

def all_normal_words(P: PcPresentation, level: int = 1):
    ranges = [range(1)] * (level - 1)
    ranges += [range(P.primes[j]) for j in range(level - 1, P.n)]
    return [tuple(ev) for ev in itertools.product(*ranges)]


def enumerate_and_check(P: PcPresentation, seed: int = 0):
    """Enumerate the group and verify the presentation is consistent.

    Checks: right translation by every generator permutes the normal
    words (order = prod p_i), every defining relation holds, identity
    and inverse laws, and associativity (all triples for order <= 200,
    10^4 random triples above).  Returns (order, report dict); raises
    InconsistentPresentation with a witness otherwise.
    """
    order = P.order
    if order > ENUMERATION_CAP:
        raise InconsistentPresentation(
            f"group order {order} exceeds enumeration cap {ENUMERATION_CAP}")
    words = all_normal_words(P)
    ident = P.identity()

    # translation by each generator must be a bijection
    for i in range(1, P.n + 1):
        images = {collect(P, word_of(w) + ((i, 1),)) for w in words}
        if len(images) != order:
            raise InconsistentPresentation(
                f"right translation by g{i} is not a bijection "
                f"({len(images)} images for {order} words)")

    # defining relations
    for i in range(1, P.n + 1):
        lhs = collect(P, ((i, P.primes[i - 1]),))
        rhs = collect(P, P.power_words[i - 1])
        if lhs != rhs:
            raise InconsistentPresentation(
                f"power relation for g{i} fails: {lhs} != {rhs}")
    for i in range(1, P.n + 1):
        for j in range(i + 1, P.n + 1):
            lhs = collect(P, ((i, -1), (j, 1), (i, 1)))
            rhs = collect(P, P.conj_word(i, j))
            if lhs != rhs:
                raise InconsistentPresentation(
                    f"conjugate relation ({i},{j}) fails: {lhs} != {rhs}")

    # identity and inverse laws
    for w in words:
        if pc_multiply(P, w, ident) != w or pc_multiply(P, ident, w) != w:
            raise InconsistentPresentation(f"identity law fails at {w}")
        if pc_multiply(P, w, pc_inverse(P, w)) != ident:
            raise InconsistentPresentation(f"inverse law fails at {w}")

    # associativity
    if order <= FULL_TABLE_CAP:
        index = {w: i for i, w in enumerate(words)}
        table = [[index[pc_multiply(P, u, v)] for v in words] for u in words]
        for a in range(order):
            for b in range(order):
                ab = table[a][b]
                ta, tb = table[a], table[b]
                for c in range(order):
                    if table[ab][c] != ta[tb[c]]:
                        raise InconsistentPresentation(
                            f"associativity fails at "
                            f"({words[a]}, {words[b]}, {words[c]})")
        triples_checked = order ** 3
    else:
        rng = random.Random(subseed(seed, "pc-assoc"))
        triples_checked = 10_000
        for _ in range(triples_checked):
            u, v, w = (rng.choice(words) for _ in range(3))
            if pc_multiply(P, pc_multiply(P, u, v), w) != \
                    pc_multiply(P, u, pc_multiply(P, v, w)):
                raise InconsistentPresentation(
                    f"associativity fails at ({u}, {v}, {w})")

    return order, {"order": order, "triples_checked": triples_checked,
                   "consistent": True}
