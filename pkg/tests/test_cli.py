import json

import pytest

from albertalg.cli import main

SPLIT = "configs/split.json"
CYCLIC7 = "configs/cyclic7.json"


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_define_split(capsys):
    code, rep = _run(capsys, "define", "--config", SPLIT)
    assert code == 0
    assert {e["label"] for e in rep["albert"]} == {"JR", "JM"}


def test_define_cyclic7_prints_anisotropy_note(capsys):
    code, rep = _run(capsys, "define", "--config", CYCLIC7,
                     "--count", "30", "--seed", "5")
    assert code == 0
    assert any("consistent with division" in n for n in rep["notes"])


def test_define_malformed_config_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"fields": [{"label": "f", "poly": ["x"]}]}))
    assert main(["define", "--config", str(p)]) == 2


def test_verify_suite_deterministic(capsys):
    code1, rep1 = _run(capsys, "verify", "composition",
                       "--seed", "9", "--count", "5")
    code2, rep2 = _run(capsys, "verify", "composition",
                       "--seed", "9", "--count", "5")
    assert code1 == code2 == 0
    assert rep1 == rep2
    assert rep1["passed"]


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuch"])
    assert exc.value.code == 2


def test_factor_jp_report(capsys):
    code, rep = _run(capsys, "factor", "jp", "--algebra", "JM",
                     "--i", '[["1","0","0"],["1","1","0"],["0","0","1"]]',
                     "--j", '[["1","0","1"],["0","1","0"],["0","0","1"]]')
    assert code == 0
    assert rep["verified"]
    assert rep["length"] == 5
    assert rep["similitude"] == "1/1"


def test_factor_ia_expanded_in_l(capsys):
    code, rep = _run(capsys, "factor", "ia", "--algebra", "JD",
                     "--a", '["1","1","0","0","0","0","0","0","0"]',
                     "--expand")
    assert code == 0
    assert rep["verified"] and rep["expanded"]
    assert all(g["gen"] != "prim" for g in rep["word"])


def test_factor_ia_generic_keeps_primitive(capsys):
    code, rep = _run(capsys, "factor", "ia", "--algebra", "JM",
                     "--a", '[["1","1","0"],["0","1","0"],["0","0","2"]]')
    assert code == 0
    assert rep["verified"] and not rep["expanded"]


def test_factor_ia_generic_expand_fails_with_1(capsys):
    code = main(["factor", "ia", "--algebra", "JM",
                 "--a", '[["1","1","0"],["0","1","0"],["0","0","2"]]',
                 "--expand"])
    assert code == 1


def test_factor_missing_args_is_usage_error():
    assert main(["factor", "jp", "--algebra", "JM"]) == 2


def test_factor_chi(capsys):
    code, rep = _run(capsys, "factor", "chi", "--algebra", "JD",
                     "--a", '["1","0","0","0","1","0","0","0","0"]',
                     "--count", "5")
    assert code == 0
    assert rep["verified"]


def test_eval_and_fixpoint_roundtrip(tmp_path, capsys):
    code, rep = _run(capsys, "factor", "jp", "--algebra", "JM",
                     "--i", '[["1","0","0"],["1","1","0"],["0","0","1"]]',
                     "--j", '[["1","0","1"],["0","1","0"],["0","0","1"]]')
    word_path = tmp_path / "word.json"
    word_path.write_text(json.dumps(rep["word"]))

    code, rep = _run(capsys, "eval", "--algebra", "JM",
                     "--word", str(word_path))
    assert code == 0
    assert rep["classification"]["automorphism"]
    assert rep["verified"]

    code, rep = _run(capsys, "fixpoint", "--algebra", "JM",
                     "--word", str(word_path))
    assert code == 0
    assert rep["automorphism"]
    assert rep["fixed_vector_in_A0"]
    assert 1 <= rep["fixed_space"]["dimension"] <= 27


def test_hexagon_command(capsys):
    code, rep = _run(capsys, "hexagon", "--seed", "2", "--count", "3")
    assert code == 0
    assert rep["passed"]
    assert rep["algebra"] == "JR"


def test_out_flag_writes_report(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code, rep = _run(capsys, "verify", "composition", "--seed", "1",
                     "--count", "3", "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text()) == rep


def test_unknown_algebra_is_usage_error(capsys):
    assert main(["eval", "--algebra", "NOPE", "--word", "[]"]) == 2
