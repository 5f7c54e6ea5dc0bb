"""Command-line front end.

Subcommands:

  descend   rewrite a representation over a chosen subfield
  minfield  iterate descent to the minimal field
  irreps    build the full table of absolutely irreducible
            representations of a presented soluble group
  verify    re-check the invariants of any artifact file

Exit codes: 0 success, 2 malformed input, 3 not writable over the target
subfield, 4 precondition failure, 5 inconsistent presentation,
6 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import descent, fileio, gf, irrbuild, pcgroup, rep
from .errors import (
    FormatError,
    InconsistentPresentation,
    MinFieldError,
    NotAbsolutelyIrreducible,
    NotADivisor,
    NotWritable,
    PcSyntaxError,
    VerifyFailed,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_WRITABLE = 3
EXIT_PRECONDITION = 4
EXIT_INCONSISTENT = 5
EXIT_VERIFY = 6


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def cmd_descend(args) -> int:
    R = fileio.parse_rep(_read(args.rep_file))
    if args.m == R.field.k:
        # already over a field of the requested degree: a no-op
        _write(args.out + ".rep", fileio.serialize_rep(R))
        print(f"already over GF({R.field.p}^{R.field.k}); output unchanged")
        return EXIT_OK
    cert, out = descent.descend(R, args.m, seed=args.seed)
    _write(args.out + ".rep", fileio.serialize_rep(out))
    _write(args.out + ".cert", fileio.serialize_certificate(cert))
    print(f"descended GF({R.field.p}^{R.field.k}) -> "
          f"GF({out.field.p}^{out.field.k}), d={out.degree}, "
          f"seed={args.seed}")
    return EXIT_OK


def cmd_minfield(args) -> int:
    R = fileio.parse_rep(_read(args.rep_file))
    out, chain = descent.minimal_field(R, seed=args.seed)
    _write(args.out + ".rep", fileio.serialize_rep(out))
    if chain:
        _write(args.out + ".cert", fileio.serialize_certificate_chain(chain))
    print(f"minimal field GF({out.field.p}^{out.field.k}) "
          f"({len(chain)} descent step{'s' if len(chain) != 1 else ''}), "
          f"seed={args.seed}")
    return EXIT_OK


def cmd_irreps(args) -> int:
    text = _read(args.pc_file)
    P = pcgroup.parse_pc(text)
    table = irrbuild.irreps(P, args.char, seed=args.seed)
    os.makedirs(args.outdir, exist_ok=True)
    # copy the presentation so the output directory is self-contained
    _write(os.path.join(args.outdir, "group.pc"), pcgroup.serialize_pc(P))
    entries = []
    for idx, e in enumerate(table.entries):
        fname = f"rep_{idx}.rep"
        _write(os.path.join(args.outdir, fname), fileio.serialize_rep(e.rep))
        entries.append({"index": idx, "degree": e.degree, "p": e.field.p,
                        "k": e.field.k, "provenance": e.provenance,
                        "parent": e.parent, "file": fname})
    _write(os.path.join(args.outdir, "manifest.txt"),
           fileio.serialize_manifest("group.pc", args.char, args.seed,
                                     entries))
    print(f"{len(entries)} absolutely irreducible representation"
          f"{'s' if len(entries) != 1 else ''} in characteristic "
          f"{args.char}:")
    print("  degree  field")
    for e in entries:
        print(f"  {e['degree']:>6}  GF({e['p']}^{e['k']})")
    return EXIT_OK


def _sniff(text: str) -> str:
    for raw in text.splitlines():
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        return s.split()[0]
    raise FormatError("empty file")


def _verify_one(path: str) -> None:
    text = _read(path)
    head = _sniff(text)
    if head == "pcgroup":
        P = pcgroup.parse_pc(text)
        try:
            pcgroup.enumerate_and_check(P)
        except InconsistentPresentation as exc:
            raise VerifyFailed(f"{path}: {exc}") from exc
    elif head == "manifest":
        _verify_manifest(path, text)
    elif head == "field":
        lines = fileio._Lines(text)
        lines.next("field header")
        second = lines.peek()
        if second is not None and second.startswith("descent"):
            chain = fileio.parse_certificate_chain(text)
            for i, cert in enumerate(chain):
                try:
                    cert.verify()
                except AssertionError as exc:
                    raise VerifyFailed(
                        f"{path}: certificate {i}: {exc}") from exc
        else:
            fileio.parse_rep(text)  # nonsingularity checked on parse
    else:
        raise FormatError(f"{path}: unrecognized file type {head!r}")


def _verify_manifest(path: str, text: str) -> None:
    man = fileio.parse_manifest(text)
    base = os.path.dirname(os.path.abspath(path))
    P = pcgroup.parse_pc(_read(os.path.join(base, man["group"])))
    try:
        pcgroup.enumerate_and_check(P)
    except InconsistentPresentation as exc:
        raise VerifyFailed(f"{path}: group presentation: {exc}") from exc
    reps = []
    for e in man["entries"]:
        R0 = fileio.parse_rep(_read(os.path.join(base, e["file"])))
        if (R0.degree != e["degree"] or R0.field.p != e["p"]
                or R0.field.k != e["k"]):
            raise VerifyFailed(f"{path}: entry {e['index']} does not match "
                               f"its representation file")
        if len(R0.gens) != P.n:
            raise VerifyFailed(f"{path}: entry {e['index']} has "
                               f"{len(R0.gens)} generators, group has {P.n}")
        R = rep.Representation(R0.field, R0.degree, R0.gens, (P, 1))
        if not irrbuild.satisfies_relations(R):
            raise VerifyFailed(f"{path}: entry {e['index']} violates the "
                               f"presentation relations")
        if not rep.is_absolutely_irreducible(R):
            raise VerifyFailed(f"{path}: entry {e['index']} is not "
                               f"absolutely irreducible")
        if rep.character_field(R) != R.field.k:
            raise VerifyFailed(f"{path}: entry {e['index']} is not over its "
                               f"minimal field")
        reps.append(R)
    for a in range(len(reps)):
        for b in range(a + 1, len(reps)):
            ra, rb = reps[a], reps[b]
            if (ra.field == rb.field and ra.degree == rb.degree
                    and rep.are_equivalent(ra, rb)):
                raise VerifyFailed(f"{path}: entries {a} and {b} are "
                                   f"equivalent")


def cmd_verify(args) -> int:
    for path in args.paths:
        _verify_one(path)
        print(f"{path}: ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="minfield",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("descend",
                       help="rewrite a representation over a subfield")
    d.add_argument("rep_file")
    d.add_argument("--m", type=int, required=True,
                   help="target subfield degree over the prime field")
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--out", required=True,
                   help="output prefix (writes <out>.rep and <out>.cert)")
    d.set_defaults(func=cmd_descend)

    m = sub.add_parser("minfield",
                       help="rewrite a representation over its minimal field")
    m.add_argument("rep_file")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--out", required=True)
    m.set_defaults(func=cmd_minfield)

    i = sub.add_parser("irreps",
                       help="build all absolutely irreducible representations "
                            "of a presented soluble group")
    i.add_argument("pc_file")
    i.add_argument("--char", type=int, required=True,
                   help="prime characteristic")
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--outdir", required=True)
    i.set_defaults(func=cmd_irreps)

    v = sub.add_parser("verify", help="re-check artifact file invariants")
    v.add_argument("paths", nargs="+")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, PcSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotWritable as exc:
        print(f"not writable: {exc}", file=sys.stderr)
        return EXIT_NOT_WRITABLE
    except InconsistentPresentation as exc:
        print(f"inconsistent presentation: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except VerifyFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (NotAbsolutelyIrreducible, NotADivisor, MinFieldError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
