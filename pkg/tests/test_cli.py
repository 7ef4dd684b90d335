from __future__ import annotations

import json

import pytest

from hypothesis import given

from conftest import B3, B4, DELTA, G1, G3, G4, elements, w
from garside import InputError, is_conjugate, normalize
from garside.cli import WordSyntaxError, element_from_json, main, parse_word, run


def ok(*argv):
    code, out, err = run(list(argv))
    assert code == 0, err
    return out


def as_json(*argv):
    return json.loads(ok(*argv))


# ------------------------------------------------------------ word syntax


def test_parse_word_examples():
    assert parse_word("s1 s2 s3") == [1, 2, 3]
    assert parse_word("s1^3 s2^-1") == [1, 1, 1, -2]
    assert parse_word("") == []
    assert parse_word("D", B4) == list(B4.delta_word)
    assert parse_word("D^-1 s1", B4) == [-a for a in reversed(B4.delta_word)] + [1]


@pytest.mark.parametrize(
    "text, position",
    [("s1 x2", 3), ("s1 s0", 3), ("s1 s5", 3), ("s1^", 2), ("  q", 2)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text, B4)
    assert info.value.position == position


@given(elements(B4, 10))
def test_printed_form_parses_back(e):
    assert normalize(parse_word(str(e), B4), B4) == e


@given(elements(B3, 10))
def test_json_round_trip(e):
    obj = as_json("--structure", "braid:3", "nf", str(e))
    assert element_from_json(obj, B3) == e


def test_delta_needs_structure():
    with pytest.raises(InputError):
        parse_word("D")


# ------------------------------------------------------------ commands


def test_nf_and_round_trip():
    obj = as_json("nf", "s1 s1 s2 s1")
    assert obj == {"delta": 0, "factors": [[1, 2, 1], [2]]}
    assert element_from_json(obj, B4) == w("s1 s1 s2 s1")
    assert as_json("nf", "D^2 D^-2") == {"delta": 0, "factors": []}


def test_eq():
    assert as_json("eq", "s1 s3", "s3 s1") is True
    assert as_json("eq", "s1", "s2") is False


def test_conj_witness_verifies():
    obj = as_json("conj", "s1 s2 s3", "s3 s2 s1")
    assert obj["conjugate"]
    x = element_from_json(obj["conjugator"], B4)
    assert G1.conjugate(x) == w("s3 s2 s1")
    assert as_json("conj", "s1", "s1 s1") == {"conjugate": False, "conjugator": None}


def test_summit_set_commands():
    members = {tuple(map(tuple, h["factors"])) for h in as_json("sss", "s1 s2 s3")}
    assert members == {((1, 2, 3),), ((3, 2, 1),), ((1, 3, 2),), ((2, 1, 3),)}
    assert len(as_json("uss", "s1 s2 s3")) == 4
    stable = [element_from_json(h, B4) for h in as_json("stable", "s1 s2 s3")]
    assert set(stable) == {G3, G4}


def test_graph_dot_is_deterministic():
    a = ok("graph", "s1 s2 s3", "--set", "stable", "--dot")
    b = ok("--dot", "graph", "s2 s1 s3", "--set", "stable")
    assert a == b
    assert a.startswith("digraph summit {")
    assert a.count("->") == 2 and 'label="s1 s3"' in a


def test_graph_json_edges_verify():
    obj = as_json("graph", "s1 s2 s3")
    nodes = [element_from_json(h, B4) for h in obj["nodes"]]
    assert len(obj["edges"]) == 5
    for e in obj["edges"]:
        c = element_from_json(e["label"], B4)
        assert nodes[e["source"]].conjugate(c) == nodes[e["target"]]


def test_translation_command():
    assert as_json("translation", "s1 s2 s3") == {"num": 1, "den": 2}
    assert as_json("translation", "D^-3") == {"num": 3, "den": 1}


def test_free_abelian_structure():
    obj = as_json("--structure", "zn:2", "nf", "s1 s1 s2")
    assert obj == {"delta": 1, "factors": [[1]]}


def test_abelian_commands():
    obj = as_json("abelian-basis", "D^2", "s1 s2 s3")
    assert [element_from_json(g, B4) for g in obj["basis"]] == [G1]
    assert as_json("abelian-member", "D^2", "s1 s2 s3") == {"member": True, "exponents": [4]}
    assert as_json("abelian-member", "s2", "s1", "s3")["member"] is False
    assert as_json("abelian-equal", "--first", "D^2", "s1 s2 s3", "--second", "s1 s2 s3") is True
    obj = as_json("abelian-conjugate", "--first", "s1 s2 s3", "--second", "s1 s3 s2")
    assert obj["conjugate"]
    x = element_from_json(obj["conjugator"], B4)
    assert G1.conjugate(x) in {G3, G3.inverse()}
    obj = as_json("abelian-conj-member", "s2 s1 s3", "s1 s2 s3")
    x = element_from_json(obj["conjugator"], B4)
    assert obj["exponents"] == [1] and G1.conjugate(x) == w("s2 s1 s3")


# ------------------------------------------------------------ exit codes


@pytest.mark.parametrize(
    "argv",
    [
        ["nf", "s1 t2"],
        ["nf", "s4"],
        ["--structure", "braid:1", "nf", "s1"],
        ["frobnicate"],
        ["nf", "s1", "--dot"],
        ["graph", "s1", "--set", "mega"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = run(argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_budget_exit_3():
    code, _, err = run(["--budget", "2", "sss", "s1 s2 s3 s1 s2^-1"])
    assert code == 3 and "budget" in err


def test_domain_exit_4():
    code, _, err = run(["abelian-basis", "s1", "s2"])
    assert code == 4 and "domain" in err


def test_main_writes_streams(capsys):
    assert main(["nf", "D"]) == 0
    assert json.loads(capsys.readouterr().out) == {"delta": 1, "factors": []}
    assert main(["nf", "s9"]) == 2
    assert "error" in capsys.readouterr().err


def test_help_exits_zero():
    code, out, _ = run(["--help"])
    assert code == 0 and "garside" in out


# ------------------------------------------------------------ report


def test_report_writes_figures(tmp_path):
    out = tmp_path / "rep"
    obj = as_json("report", "s1 s2 s3", "--out", str(out))
    report = json.loads((out / "report.json").read_text())
    assert report["translation_number"] == {"num": 1, "den": 2}
    assert set(report["summit_sets"]) == {"super", "ultra", "stable"}
    for kind in ("super", "ultra", "stable"):
        png = out / f"{kind}_graph.png"
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
        assert (out / f"{kind}_graph.dot").read_text() == ok("graph", "s1 s2 s3", "--set", kind, "--dot")
    assert obj["figures"] == [str(out / f"{k}_graph.png") for k in ("super", "ultra", "stable")]


def test_report_subset(tmp_path):
    as_json("report", "D", "--out", str(tmp_path), "--sets", "stable")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["report.json", "stable_graph.dot", "stable_graph.png"]
    assert normalize(parse_word("D", B4), B4) == DELTA
    assert is_conjugate(DELTA, DELTA).is_identity()
