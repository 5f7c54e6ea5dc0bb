"""Line-oriented ASCII file formats for fields, matrices, representations,
descent certificates and irreducible-table manifests.

Grammar (one item per line, blank lines and '#' comments ignored,
whitespace-tolerant):

  field header    field p=<p> k=<k> poly=<c0,c1,...,ck>
  matrix block    matrix r=<rows> c=<cols>   then r lines of c integers
  representation  field header, gens n=<n> d=<d>, then n matrix blocks
  certificate     field header, descent m=<m> seed=<seed>, mu <int>,
                  nu <int>, C + matrix block, A + matrix block
                  (a chain file is a concatenation of certificates)
  manifest        manifest group=<path> char=<p> seed=<s> count=<n>, then
                  one entry line per representation:
                  entry index=<i> degree=<d> p=<p> k=<k>
                        provenance=<word> parent=<j> file=<relpath>

Field elements serialize as their integer encoding.
"""

from __future__ import annotations

from . import gf
from .descent import DescentCertificate
from .errors import FormatError
from .matgf import MatrixGF
from .rep import Representation


class _Lines:
    """Cursor over the meaningful lines of a text blob."""

    def __init__(self, text: str):
        self.lines = []
        for raw in text.splitlines():
            s = raw.split("#", 1)[0].strip()
            if s:
                self.lines.append(s)
        self.pos = 0

    def peek(self):
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def next(self, what: str) -> str:
        if self.pos >= len(self.lines):
            raise FormatError(f"unexpected end of file, expected {what}")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def done(self) -> bool:
        return self.pos >= len(self.lines)


def _kv_fields(line: str, keyword: str, keys: tuple) -> dict:
    """Parse `keyword k1=v1 k2=v2 ...` with the exact keys in order."""
    parts = line.split()
    if not parts or parts[0] != keyword:
        raise FormatError(f"expected '{keyword}' line, got: {line}")
    if len(parts) != len(keys) + 1:
        raise FormatError(f"'{keyword}' line needs fields {keys}: {line}")
    out = {}
    for tok, key in zip(parts[1:], keys):
        if "=" not in tok:
            raise FormatError(f"expected {key}=<value> in: {line}")
        name, _, val = tok.partition("=")
        if name != key:
            raise FormatError(f"expected field '{key}', got '{name}': {line}")
        out[key] = val
    return out


def _int(s: str, what: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise FormatError(f"bad integer for {what}: {s!r}") from None


# ----------------------------------------------------------------------
# field header
# ----------------------------------------------------------------------

def format_field(F: gf.FieldDesc) -> str:
    poly = ",".join(str(c) for c in F.poly)
    return f"field p={F.p} k={F.k} poly={poly}"

def parse_field(line: str) -> gf.FieldDesc:
    kv = _kv_fields(line, "field", ("p", "k", "poly"))
    p = _int(kv["p"], "p")
    k = _int(kv["k"], "k")
    poly = tuple(_int(c, "poly coefficient") for c in kv["poly"].split(","))
    if len(poly) != k + 1 or poly[-1] != 1:
        raise FormatError(f"poly must be monic of degree k={k}: {line}")
    try:
        return gf.field_create(p, k, poly)
    except Exception as exc:
        raise FormatError(f"bad field parameters: {exc}") from exc


# ----------------------------------------------------------------------
# matrix blocks
# ----------------------------------------------------------------------

def format_matrix(M: MatrixGF) -> list[str]:
    out = [f"matrix r={M.rows} c={M.cols}"]
    for i in range(M.rows):
        out.append(" ".join(str(M[i, j]) for j in range(M.cols)))
    return out

def _parse_matrix(lines: _Lines, F: gf.FieldDesc) -> MatrixGF:
    kv = _kv_fields(lines.next("matrix header"), "matrix", ("r", "c"))
    r = _int(kv["r"], "rows")
    c = _int(kv["c"], "cols")
    if r < 1 or c < 1:
        raise FormatError(f"matrix dimensions must be positive: {r}x{c}")
    rows = []
    for i in range(r):
        toks = lines.next(f"matrix row {i}").split()
        if len(toks) != c:
            raise FormatError(f"matrix row {i} has {len(toks)} entries, "
                              f"expected {c}")
        row = [_int(t, "matrix entry") for t in toks]
        for x in row:
            if not 0 <= x < F.q:
                raise FormatError(f"matrix entry {x} outside field of "
                                  f"order {F.q}")
        rows.append(row)
    return MatrixGF.from_rows(F, rows)


# ----------------------------------------------------------------------
# representation files
# ----------------------------------------------------------------------

def serialize_rep(R: Representation) -> str:
    out = [format_field(R.field),
           f"gens n={len(R.gens)} d={R.degree}"]
    for M in R.gens:
        out.extend(format_matrix(M))
    return "\n".join(out) + "\n"

def parse_rep(text: str) -> Representation:
    lines = _Lines(text)
    F = parse_field(lines.next("field header"))
    kv = _kv_fields(lines.next("gens header"), "gens", ("n", "d"))
    n = _int(kv["n"], "n")
    d = _int(kv["d"], "d")
    if n < 0 or d < 1:
        raise FormatError(f"bad generator count {n} or degree {d}")
    gens = []
    for _ in range(n):
        M = _parse_matrix(lines, F)
        if M.rows != d or M.cols != d:
            raise FormatError(f"generator matrix is {M.rows}x{M.cols}, "
                              f"expected {d}x{d}")
        gens.append(M)
    if not lines.done():
        raise FormatError(f"trailing content: {lines.peek()}")
    try:
        return Representation(F, d, gens)
    except Exception as exc:
        raise FormatError(f"invalid representation: {exc}") from exc


# ----------------------------------------------------------------------
# descent certificates
# ----------------------------------------------------------------------

def serialize_certificate(cert: DescentCertificate) -> str:
    out = [format_field(cert.field),
           f"descent m={cert.m} seed={cert.seed}",
           f"mu {cert.mu}",
           f"nu {cert.nu}",
           "C"]
    out.extend(format_matrix(cert.C))
    out.append("A")
    out.extend(format_matrix(cert.A))
    return "\n".join(out) + "\n"

def serialize_certificate_chain(chain) -> str:
    return "".join(serialize_certificate(c) for c in chain)

def _parse_certificate(lines: _Lines) -> DescentCertificate:
    F = parse_field(lines.next("field header"))
    kv = _kv_fields(lines.next("descent header"), "descent", ("m", "seed"))
    m = _int(kv["m"], "m")
    seed = _int(kv["seed"], "seed")
    if m < 1 or F.k % m != 0 or m >= F.k:
        raise FormatError(f"certificate degree m={m} must properly divide "
                          f"k={F.k}")
    scalars = {}
    for name in ("mu", "nu"):
        toks = lines.next(f"{name} line").split()
        if len(toks) != 2 or toks[0] != name:
            raise FormatError(f"expected '{name} <int>', got: {' '.join(toks)}")
        val = _int(toks[1], name)
        if not 0 < val < F.q:
            raise FormatError(f"{name}={val} is not a nonzero field element")
        scalars[name] = val
    mats = {}
    for name in ("C", "A"):
        if lines.next(f"'{name}' label") != name:
            raise FormatError(f"expected matrix label '{name}'")
        M = _parse_matrix(lines, F)
        if M.rows != M.cols:
            raise FormatError(f"certificate matrix {name} must be square")
        mats[name] = M
    if mats["C"].rows != mats["A"].rows:
        raise FormatError("certificate matrices C and A differ in size")
    return DescentCertificate(F, m, mats["C"], scalars["mu"], scalars["nu"],
                              mats["A"], seed)

def parse_certificate_chain(text: str) -> list[DescentCertificate]:
    lines = _Lines(text)
    chain = []
    while not lines.done():
        chain.append(_parse_certificate(lines))
    if not chain:
        raise FormatError("empty certificate file")
    return chain


# ----------------------------------------------------------------------
# irreducible-table manifests
# ----------------------------------------------------------------------

def serialize_manifest(group_path: str, char: int, seed: int,
                       entries) -> str:
    """entries: iterable of dicts with keys index, degree, p, k,
    provenance, parent, file."""
    entries = list(entries)
    out = [f"manifest group={group_path} char={char} seed={seed} "
           f"count={len(entries)}"]
    for e in entries:
        out.append(f"entry index={e['index']} degree={e['degree']} "
                   f"p={e['p']} k={e['k']} provenance={e['provenance']} "
                   f"parent={e['parent']} file={e['file']}")
    return "\n".join(out) + "\n"

def parse_manifest(text: str) -> dict:
    lines = _Lines(text)
    kv = _kv_fields(lines.next("manifest header"), "manifest",
                    ("group", "char", "seed", "count"))
    head = {"group": kv["group"],
            "char": _int(kv["char"], "char"),
            "seed": _int(kv["seed"], "seed"),
            "count": _int(kv["count"], "count")}
    entries = []
    for _ in range(head["count"]):
        ekv = _kv_fields(lines.next("manifest entry"), "entry",
                         ("index", "degree", "p", "k", "provenance",
                          "parent", "file"))
        entries.append({
            "index": _int(ekv["index"], "index"),
            "degree": _int(ekv["degree"], "degree"),
            "p": _int(ekv["p"], "p"),
            "k": _int(ekv["k"], "k"),
            "provenance": ekv["provenance"],
            "parent": _int(ekv["parent"], "parent"),
            "file": ekv["file"]})
    if not lines.done():
        raise FormatError(f"trailing content: {lines.peek()}")
    head["entries"] = entries
    return head
