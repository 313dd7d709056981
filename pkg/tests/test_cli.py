import json

import pytest

from symdig.cli import main
from symdig.constructions import build_hamming, build_xq
from symdig.digraph import Digraph, check_map_is_isomorphism, complete_digraph, opp
from symdig.finfield import field_of_order
from symdig.formats import from_edgelist, from_json, read_graph, to_edgelist, to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_xq(capsys):
    code, out, _ = run(capsys, "construct", "--family", "xq", "--q", "7")
    assert code == 0
    g = from_edgelist(out)
    assert g.n == 16 and len(g.arcs) == 112
    assert g == build_xq(field_of_order(7))


def test_construct_hamming(capsys, tmp_path):
    path = tmp_path / "h.txt"
    assert run(capsys, "construct", "--family", "hamming", "--m", "3", "--n", "2",
               "--out", str(path))[0] == 0
    g = from_edgelist(path.read_text())
    assert g.n == 9 and len(g.arcs) == 36
    assert g.arcs == build_hamming(3, 2).arcs


@pytest.mark.parametrize("argv", [
    ["construct", "--family", "xq", "--q", "5"],
    ["construct", "--family", "paley", "--q", "9"],
    ["construct", "--family", "xq"],
    ["construct", "--family", "hamming", "--m", "3"],
    ["construct", "--family", "xq", "--q", "7", "--m", "2"],
    ["construct", "--family", "nope", "--q", "7"],
    ["quotient", "--family", "paley", "--q", "7", "--subgroup", "center"],
    ["quotient", "--family", "xq", "--q", "7", "--subgroup", "borel"],
    ["verify", "--family", "hamming", "--m", "3", "--n", "2", "--suite", "proposition"],
])
def test_bad_input_exits_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "xq", "--q", "7"],
    ["verify", "--family", "xq", "--q", "11", "--suite", "proposition"],
    ["verify", "--family", "xqn", "--q", "7", "--n", "2"],
    ["verify", "--family", "paley", "--q", "11"],
    ["verify", "--family", "hamming-complement", "--m", "4", "--n", "2"],
])
def test_verify_passes(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert err.count("PASS") == len(doc["claims"])


def test_verify_writes_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    assert run(capsys, "verify", "--family", "xq", "--q", "7", "--out", str(path))[0] == 0
    assert json.loads(path.read_text())["instance"]["q"] == 7


def test_verify_is_byte_identical(capsys):
    argv = ("verify", "--family", "xqn", "--q", "7", "--n", "2")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_quotient_center(capsys, tmp_path):
    out = tmp_path / "q.txt"
    assert run(capsys, "quotient", "--family", "xq", "--q", "7", "--subgroup", "center",
               "--out", str(out))[0] == 0
    Q = from_edgelist(out.read_text())
    assert Q.n == 8 and Q.arcs == complete_digraph(8).arcs
    blocks = (tmp_path / "q.txt.blocks").read_text().splitlines()
    assert len(blocks) == 8
    assert "[1,0]" in blocks[-1] and "[6,0]" in blocks[-1]


def test_quotient_to_stdout(capsys):
    code, out, _ = run(capsys, "quotient", "--family", "xq", "--q", "7", "--subgroup", "center")
    assert code == 0
    assert out.startswith("# vertices 8 directed false")
    assert out.rstrip().splitlines()[-1].startswith("7: ")


def test_iso(capsys, tmp_path):
    X = build_xq(field_of_order(7))
    a, b, c = tmp_path / "a.txt", tmp_path / "b.json", tmp_path / "c.txt"
    a.write_text(to_edgelist(X))
    b.write_text(to_json(opp(X)))
    c.write_text(to_edgelist(build_hamming(4, 2)))
    wit = tmp_path / "w.txt"
    assert run(capsys, "iso", str(a), str(b), "--witness", str(wit))[0] == 0
    f = [int(line.split()[1]) for line in wit.read_text().splitlines()]
    assert check_map_is_isomorphism(X, opp(X), f)
    assert run(capsys, "iso", str(a), str(c))[0] == 1


def test_iso_cap_and_missing_file(capsys, tmp_path):
    big = tmp_path / "big.txt"
    big.write_text(to_edgelist(Digraph(600, [])))
    assert run(capsys, "iso", str(big), str(big))[0] == 2
    assert run(capsys, "iso", str(big), str(tmp_path / "missing.txt"))[0] == 2
    garbage = tmp_path / "g.txt"
    garbage.write_text("hello world\n")
    assert run(capsys, "iso", str(garbage), str(garbage))[0] == 2


def test_formats_round_trip():
    X = build_xq(field_of_order(11))
    assert from_edgelist(to_edgelist(X)) == X
    assert from_json(to_json(X)) == X
    assert read_graph(to_json(X)) == X
    H = build_hamming(3, 2)
    assert from_edgelist(to_edgelist(H)) == H


def test_dot_output(capsys):
    code, out, _ = run(capsys, "construct", "--family", "paley", "--q", "7", "--format", "dot")
    assert code == 0 and out.startswith("digraph") and "->" in out
    code, out, _ = run(capsys, "construct", "--family", "hamming", "--m", "2", "--n", "2",
                       "--format", "dot")
    assert out.startswith("graph") and "--" in out and "->" not in out


def test_environment_overrides(capsys, monkeypatch):
    monkeypatch.setenv("SYMDIG_Q", "11")
    code, out, _ = run(capsys, "construct", "--family", "xq")
    assert code == 0 and from_edgelist(out).n == 24
    # An explicit flag wins over the environment.
    code, out, _ = run(capsys, "construct", "--family", "xq", "--q", "7")
    assert from_edgelist(out).n == 16
    monkeypatch.setenv("SYMDIG_CAP_ENUM", "10")
    code, _, err = run(capsys, "verify", "--family", "xq", "--q", "7", "--suite", "proposition")
    assert code == 2 and "cap" in err.lower()
