import pytest

from albertalg.errors import ParseError
from albertalg.workspace import Workspace, builtin_workspace, \
    parse_albert_elem, parse_assoc_elem

SPLIT_CFG = {
    "cayley": [{"label": "Os", "base": "Q", "params": ["1", "1", "1"]}],
    "assoc": [{"label": "M3", "backend": "matrix3", "field": "Q"}],
    "albert": [
        {"label": "JR", "kind": "reduced", "cayley": "Os",
         "gammas": ["1", "1", "1"]},
        {"label": "JM", "kind": "first", "algebra": "M3", "mu": "2"},
    ],
}


def test_load_shipped_configs(tmp_path):
    for name in ("split", "cyclic7"):
        ws = Workspace.load("configs/%s.json" % name)
        assert ws.albert
        for alg in ws.albert.values():
            assert len(alg.basis()) == 27


def test_from_dict_builds_everything():
    ws = Workspace.from_dict(SPLIT_CFG)
    assert set(ws.albert) == {"JR", "JM"}
    assert ws.albert["JM"].kind == "first"
    summary = ws.summary()
    assert {e["label"] for e in summary["albert"]} == {"JR", "JM"}


def test_duplicate_labels_rejected():
    cfg = {"assoc": [
        {"label": "A", "backend": "matrix3", "field": "Q"},
        {"label": "A", "backend": "matrix3", "field": "Q"},
    ]}
    with pytest.raises(ParseError):
        Workspace.from_dict(cfg)


def test_unknown_reference_rejected():
    cfg = {"albert": [{"label": "J", "kind": "first", "algebra": "nope",
                       "mu": "2"}]}
    with pytest.raises(ParseError):
        Workspace.from_dict(cfg)


def test_malformed_poly_rejected():
    cfg = {"fields": [{"label": "bad", "poly": ["x", "1"]}]}
    with pytest.raises(ParseError):
        Workspace.from_dict(cfg)


def test_invalid_json_file_rejected(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        Workspace.load(str(p))


def test_second_construction_from_config():
    cfg = {
        "fields": [{"label": "K", "poly": ["1", "0", "1"],
                    "automorphisms": [["0", "-1"]]}],
        "assoc": [{"label": "B", "backend": "matrix3", "field": "K",
                   "involution": {}}],
        "albert": [{"label": "J2", "kind": "second", "algebra": "B",
                    "u": [[["1", "0"], ["0", "0"], ["0", "0"]],
                          [["0", "0"], ["1", "0"], ["0", "0"]],
                          [["0", "0"], ["0", "0"], ["1", "0"]]],
                    "mu": ["0", "1"]}],
    }
    ws = Workspace.from_dict(cfg)
    assert ws.albert["J2"].kind == "second"


def test_parse_element_helpers():
    ws = builtin_workspace()
    m3 = ws.assoc["M3"]
    x = parse_assoc_elem(m3, [["1", "2", "0"], ["0", "1", "0"],
                              ["0", "0", "1"]])
    y = parse_assoc_elem(m3, ["1", "2", "0", "0", "1", "0", "0", "0", "1"])
    assert x == y
    with pytest.raises(ParseError):
        parse_assoc_elem(m3, ["1", "2"])
    jm = ws.albert["JM"]
    e = parse_albert_elem(jm, ["1"] + ["0"] * 26)
    assert e == jm.basis_elem(0)
    with pytest.raises(ParseError):
        parse_albert_elem(jm, ["1", "0"])


def test_builtin_workspace_is_cached_and_complete():
    ws1 = builtin_workspace()
    ws2 = builtin_workspace()
    assert ws1 is ws2
    assert set(ws1.albert) == {"JM", "JD", "J2", "JR", "JRC"}
    assert "B3" in ws1.involutions
