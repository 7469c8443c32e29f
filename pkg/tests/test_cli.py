from __future__ import annotations

import pytest

from octminor.atlas import build
from octminor.cli import main
from octminor.io import decode_graph6, encode_edge_list
from octminor.minors import MinorModel, verify_model


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_branch_sets(text):
    sets = []
    for line in text.splitlines():
        if line.startswith("h") and ":" in line:
            sets.append(frozenset(int(x) for x in line.split(":", 1)[1].split()))
    return MinorModel(tuple(sets))


def test_minor_found_prints_verifiable_branch_sets(capsys):
    code, out, _ = run(capsys, "minor", "C8^2", "Oct1+")
    assert code == 0 and out.startswith("MINOR FOUND")
    assert verify_model(build("C8^2"), build("Oct1+"), parse_branch_sets(out))


def test_minor_absent(capsys):
    code, out, _ = run(capsys, "minor", "name:C6^2", "name:Oct1+")
    assert code == 1 and out.strip() == "NO MINOR"


def test_topological(capsys):
    code, out, _ = run(capsys, "minor", "Petersen", "K3,3", "--topological", "--witness")
    assert code == 0 and "TOPOLOGICAL MINOR FOUND" in out


def test_classify_numbered_deciders(capsys):
    code, out, _ = run(capsys, "classify", "--thm", "16", "L(K3,3)")
    assert code == 0 and "verdict: member" in out
    code, out, _ = run(capsys, "classify", "--thm", "14", "C8^2")
    assert code == 1 and "non-member" in out
    code, out, _ = run(capsys, "classify", "--thm", "15", "Oct", "--witness")
    assert code == 0 and "tree:" in out
    code, _, err = run(capsys, "classify", "--thm", "14", "Oct1+")
    assert code == 2 and "4-connected" in err


def test_classify_c_or_l(capsys):
    code, out, _ = run(capsys, "classify", "L(Cube)")
    assert code == 0 and out.startswith("L:")
    code, out, _ = run(capsys, "classify", "K5")
    assert out.startswith("C: squared cycle on 5")


def test_planar_witness(capsys):
    code, out, _ = run(capsys, "planar", "Oct2+", "--witness")
    assert code == 1 and out.startswith("non-planar")
    name = out.splitlines()[1].split()[1]
    assert name in ("K5", "K3,3")
    assert verify_model(build("Oct2+"), build(name), parse_branch_sets(out))
    code, out, _ = run(capsys, "planar", "Oct1+")
    assert code == 0 and out.strip() == "planar"


def test_conn(capsys):
    code, out, _ = run(capsys, "conn", "Oct1+", "-k", "4", "--witness")
    assert code == 1 and "connectivity: 3" in out and "cut vertices:" in out
    code, out, _ = run(capsys, "conn", "Prism", "--cyclic", "--witness")
    assert code == 1 and "cut edges:" in out


def test_graph_from_file(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text(encode_edge_list(build("K5")))
    code, out, _ = run(capsys, "minor", str(p), "K4")
    assert code == 0


def test_atlas_and_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "atlas", "Oct")
    assert code == 0 and decode_graph6(out.strip()) == build("Oct")
    code, out, _ = run(capsys, "atlas", "Oct", "--format", "dot")
    assert out.startswith("graph")
    code, out, _ = run(capsys, "atlas", "--list")
    assert "Oct1+" in out.split()
    dest = tmp_path / "o.txt"
    run(capsys, "atlas", "K4", "--format", "edges", "--out", str(dest))
    assert dest.read_text().startswith("4 6")


def test_gen(capsys, tmp_path):
    code, out, err = run(capsys, "gen", "k4-3sum", "7")
    assert code == 0 and len(out.split()) == 6 and "6 graphs" in err
    code, out, _ = run(capsys, "gen", "census", "6", "--filter", "4conn")
    assert len(out.split()) == 4
    code, _, err = run(capsys, "gen", "census", "8")
    assert code == 2 and "--slow" in err
    dest = tmp_path / "c.g6"
    run(capsys, "gen", "cubic-cyc4", "1", "--out", str(dest))
    assert (tmp_path / "c.g6.prov").exists()


@pytest.mark.parametrize("argv", [["minor", "zzz", "K4"], ["atlas", "Q7"], ["minor", "K5", "K4", "--budget", "-1"]])
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("OCTMINOR_BUDGET", "2")
    code, _, err = run(capsys, "minor", "L(V8)", "K6")
    assert code == 2 and "budget" in err


def test_verify_paper_selection(capsys, tmp_path):
    js = tmp_path / "s.json"
    code, out, _ = run(capsys, "verify-paper", "--claim", "oct-single-extensions", "--json", str(js))
    assert code == 0 and out.startswith("[PASS] oct-single-extensions")
    assert '"status": "pass"' in js.read_text()
    code, out, _ = run(capsys, "verify-paper", "--list")
    assert "lkk33-contraction-cases" in out.split()
    code, _, err = run(capsys, "verify-paper", "--claim", "nope")
    assert code == 2
