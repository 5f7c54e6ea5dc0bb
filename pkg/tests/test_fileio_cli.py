"""File formats and the command-line front end."""

import os
import random

import pytest

from minfield import cli, descent, fileio, gf, matgf, pcgroup, rep
from minfield.errors import FormatError
from minfield.matgf import MatrixGF
from minfield.rep import Representation

from conftest import fixture_path, fixture_text  # noqa: F401


def test_field_header_roundtrip():
    for p, k in [(2, 1), (2, 6), (3, 2), (7, 1)]:
        F = gf.field_create(p, k)
        assert fileio.parse_field(fileio.format_field(F)) == F


def test_rep_roundtrip():
    R = fileio.parse_rep(fixture_text("q8_gf9.rep"))
    assert R.degree == 2 and len(R.gens) == 3
    assert fileio.parse_rep(fileio.serialize_rep(R)) == R


def test_rep_parse_errors():
    good = fixture_text("q8_gf9.rep")
    with pytest.raises(FormatError):
        fileio.parse_rep("")
    with pytest.raises(FormatError):
        fileio.parse_rep(good.replace("gens n=3 d=2", "gens n=3"))
    with pytest.raises(FormatError):
        fileio.parse_rep(good.replace("matrix r=2 c=2", "matrix r=2 c=3", 1))
    with pytest.raises(FormatError):
        fileio.parse_rep(good.replace("3 0", "9 0"))  # 9 outside GF(9)
    with pytest.raises(FormatError):
        fileio.parse_rep(good + "\ntrailing\n")
    with pytest.raises(FormatError):
        # singular generator
        fileio.parse_rep("field p=2 k=1 poly=0,1\ngens n=1 d=1\n"
                         "matrix r=1 c=1\n0\n")


def test_certificate_roundtrip():
    F64 = gf.field_create(2, 6)
    F2 = gf.field_create(2, 1)
    emb = (lambda x: gf.subfield_embed(F2, F64, x))
    g1 = MatrixGF.from_rows(F2, [[0, 1], [1, 0]]).map_entries(F64, emb)
    g2 = MatrixGF.from_rows(F2, [[0, 1], [1, 1]]).map_entries(F64, emb)
    R = Representation(F64, 2, [g1, g2]).conjugate(
        matgf.random_nonsingular(F64, 2, random.Random(3)))
    cert, _ = descent.descend(R, 1, seed=11)
    text = fileio.serialize_certificate(cert)
    back = fileio.parse_certificate_chain(text)
    assert back == [cert]
    back[0].verify()


def test_certificate_chain_roundtrip():
    F16 = gf.field_create(2, 4)
    R = Representation(F16, 1, [MatrixGF.identity(F16, 1)])
    _, chain = descent.minimal_field(R, seed=0)
    text = fileio.serialize_certificate_chain(chain)
    assert fileio.parse_certificate_chain(text) == chain


def test_manifest_roundtrip():
    entries = [{"index": 0, "degree": 2, "p": 5, "k": 1,
                "provenance": "induction", "parent": 1, "file": "rep_0.rep"}]
    text = fileio.serialize_manifest("group.pc", 5, 42, entries)
    man = fileio.parse_manifest(text)
    assert man["char"] == 5 and man["seed"] == 42 and man["count"] == 1
    assert man["entries"] == entries


def run_cli(args):
    return cli.main([str(a) for a in args])


def test_cli_descend_roundtrip(tmp_path):
    out = tmp_path / "s3"
    code = run_cli(["descend", fixture_path("s3_gf64.rep"),
                    "--m", 1, "--seed", 5, "--out", out])
    assert code == 0
    R = fileio.parse_rep((tmp_path / "s3.rep").read_text())
    assert R.field.k == 1
    chain = fileio.parse_certificate_chain((tmp_path / "s3.cert").read_text())
    chain[0].verify()
    assert run_cli(["verify", str(out) + ".cert",
                    str(out) + ".rep"]) == 0


def test_cli_descend_noop_same_degree(tmp_path):
    out = tmp_path / "id"
    assert run_cli(["descend", fixture_path("identity_gf2.rep"),
                    "--m", 1, "--out", out]) == 0
    assert (tmp_path / "id.rep").read_text() == \
        fileio.serialize_rep(fileio.parse_rep(fixture_text("identity_gf2.rep")))


def test_cli_descend_not_writable(tmp_path):
    code = run_cli(["descend", fixture_path("c3_gf4.rep"),
                    "--m", 1, "--out", tmp_path / "x"])
    assert code == 3


def test_cli_descend_bad_input(tmp_path):
    bad = tmp_path / "bad.rep"
    bad.write_text("this is not a representation\n")
    assert run_cli(["descend", bad, "--m", 1, "--out", tmp_path / "x"]) == 2
    assert run_cli(["descend", tmp_path / "missing.rep",
                    "--m", 1, "--out", tmp_path / "x"]) == 2


def test_cli_descend_precondition(tmp_path):
    # reducible 2-dim representation of C3 over GF(4)
    red = tmp_path / "red.rep"
    red.write_text("field p=2 k=2 poly=1,1,1\ngens n=1 d=2\n"
                   "matrix r=2 c=2\n2 0\n0 3\n")
    assert run_cli(["descend", red, "--m", 1, "--out", tmp_path / "x"]) == 4


def test_cli_minfield(tmp_path):
    out = tmp_path / "q8"
    assert run_cli(["minfield", fixture_path("q8_gf9.rep"),
                    "--seed", 2, "--out", out]) == 0
    R = fileio.parse_rep((tmp_path / "q8.rep").read_text())
    assert (R.field.p, R.field.k) == (3, 1)
    assert run_cli(["verify", str(out) + ".cert"]) == 0


def test_cli_minfield_already_minimal(tmp_path):
    out = tmp_path / "c3"
    assert run_cli(["minfield", fixture_path("c3_gf4.rep"),
                    "--out", out]) == 0
    R = fileio.parse_rep((tmp_path / "c3.rep").read_text())
    assert R.field.k == 2
    assert not (tmp_path / "c3.cert").exists()


def test_cli_irreps_and_verify(tmp_path):
    outdir = tmp_path / "s3out"
    assert run_cli(["irreps", fixture_path("s3.pc"),
                    "--char", 5, "--seed", 1, "--outdir", outdir]) == 0
    man = fileio.parse_manifest((outdir / "manifest.txt").read_text())
    assert sorted((e["degree"], e["p"] ** e["k"])
                  for e in man["entries"]) == [(1, 5), (1, 5), (2, 5)]
    assert run_cli(["verify", outdir / "manifest.txt"]) == 0


def test_cli_irreps_inconsistent(tmp_path):
    assert run_cli(["irreps", fixture_path("s3_corrupt.pc"),
                    "--char", 5, "--outdir", tmp_path / "bad"]) == 5


def test_cli_verify_tampered_certificate(tmp_path):
    out = tmp_path / "s3"
    run_cli(["descend", fixture_path("s3_gf64.rep"),
             "--m", 1, "--seed", 5, "--out", out])
    text = (tmp_path / "s3.cert").read_text()
    lines = text.splitlines()
    # flip one entry of A (the last matrix block)
    row = lines[-1].split()
    row[0] = str((int(row[0]) + 1) % 64) or "1"
    if row[0] == "0":
        row[0] = "1"
    lines[-1] = " ".join(row)
    tampered = tmp_path / "tampered.cert"
    tampered.write_text("\n".join(lines) + "\n")
    assert run_cli(["verify", tampered]) == 6


def test_cli_verify_corrupt_presentation(tmp_path):
    assert run_cli(["verify", fixture_path("s3_corrupt.pc")]) == 6
    assert run_cli(["verify", fixture_path("s3.pc")]) == 0


def test_cli_outputs_bit_identical(tmp_path):
    dirs = []
    for tag in ("a", "b"):
        outdir = tmp_path / tag
        assert run_cli(["irreps", fixture_path("f21.pc"),
                        "--char", 2, "--seed", 33, "--outdir", outdir]) == 0
        dirs.append(outdir)
    names = sorted(os.listdir(dirs[0]))
    assert names == sorted(os.listdir(dirs[1]))
    for name in names:
        assert (dirs[0] / name).read_bytes() == (dirs[1] / name).read_bytes()
