import json

import pytest

from gl2images.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_genus_label(capsys):
    code, out = run_cli(capsys, "genus", "--label", "27.243.12.1")
    assert code == 0
    assert out.strip() == "12"


def test_level_and_cusps(capsys):
    code, out = run_cli(capsys, "level", "--label", "9.36.0.2")
    assert (code, out.strip()) == (0, "9")
    code, out = run_cli(capsys, "cusps", "--label", "X0(15)")
    assert code == 0
    assert "cusps: 4" in out and "rational cusps: 4" in out


def test_identify_gens(capsys):
    code, out = run_cli(
        capsys, "identify", "--gens", "[1,1,0,1];[2,0,0,1];[1,0,0,2]",
        "--mod", "3",
    )
    assert code == 0
    assert out.strip() == "3.4.0.1"


def test_identify_unknown_exits_1(capsys):
    code, out = run_cli(capsys, "identify", "--gens", "[1,0,0,1]", "--mod", "3")
    assert code == 1
    assert "unidentified" in out


def test_classify_r6(capsys):
    code, out = run_cli(
        capsys, "classify", "--graph", "R6", "--torsion", "2,2,6,6,6,6"
    )
    assert code == 0
    assert out.strip() == "(9.24.0.3,9.24.0.3,3.24.0.1,3.24.0.1,9.24.0.1,9.24.0.1)"


def test_transform_json(capsys):
    code, out = run_cli(capsys, "transform", "--label", "3.8.0.1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["outputs"][0]["output"] == "3.8.0.2"


def test_verify_table1(capsys):
    code, out = run_cli(capsys, "verify-table1")
    assert code == 0
    assert "39/39 rows reproduced" in out


def test_verify_lemmas_citations(capsys):
    code, out = run_cli(capsys, "verify-lemmas")
    assert code == 0
    assert "[lemma-4.9]" in out
    assert "[cor-4.4]" in out
    assert "9.18.0.2 conjugate into 9.9.0.1: yes" in out


def test_crosscheck_offline(capsys):
    code, out = run_cli(capsys, "crosscheck", "--class", "14.a", "--offline")
    assert code == 0
    assert "PASS" in out


def test_crosscheck_cm_rejected(capsys):
    code = main(["crosscheck", "--class", "27.a", "--offline"])
    captured = capsys.readouterr()
    assert code == 1
    assert "CM" in captured.err


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-verb"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--graph", "R6"])  # missing --torsion
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["genus"])  # neither --label nor --gens
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    runs = []
    for _ in range(2):
        code, out = run_cli(
            capsys, "classify", "--graph", "L2(3)", "--torsion", "3,1"
        )
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_json_shape(capsys):
    code, out = run_cli(capsys, "cusps", "--label", "X0(36)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["cusps"] == 12 and data["rational_cusps"] == 6


def test_transform_specific_line(capsys):
    from gl2images.catalog import shipped_catalog
    from gl2images.subgroups import Line, stable_lines

    (line,) = stable_lines(shipped_catalog().group("3.4.0.1"), 3)
    token = ",".join(map(str, line.rep))
    code, out = run_cli(
        capsys, "transform", "--label", "3.4.0.1", "--line", token
    )
    assert code == 0
    assert f"3.4.0.1 line {token} -> 3.4.0.1" in out
    unstable = next(
        l for l in Line.all_lines(3) if l != line
    )
    with pytest.raises(SystemExit) as exc:
        main(["transform", "--label", "3.4.0.1", "--line",
              ",".join(map(str, unstable.rep))])
    assert exc.value.code == 2  # that line is not stable for the group
