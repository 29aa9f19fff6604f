import csv
import io
import json

import pytest

from bohrlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["--theorem", "R1", "--k", "1", "--m", "3", "--p", "1"], "0.318201"),
    (["--theorem", "R1", "--k", "1", "--m", "1", "--p", "1"], "0.200000"),
    (["--theorem", "R5", "--k", "1", "--q", "1", "--p", "2"], "0.500000"),
    (["--theorem", "BetaKMP", "--k", "8", "--m", "1", "--p", "3"], "0.851600"),
])
def test_radius(capsys, argv, expected):
    code, out, _ = run(capsys, "radius", *argv)
    assert code == 0
    assert out.splitlines()[0] == expected
    assert "bracket:" in out and "residual:" in out


def test_radius_json(capsys):
    code, out, _ = run(capsys, "radius", "--theorem", "ZetaM", "--m", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["value"] == pytest.approx(0.2, abs=1e-12)
    assert abs(data["residual"]) <= 1e-10


def test_radius_r5_with_a_solves_psi5(capsys):
    code, out, _ = run(capsys, "radius", "--theorem", "R5", "--k", "1", "--p", "1", "--a", "0.5")
    assert code == 0 and float(out.splitlines()[0]) >= 1 / 3 - 1e-6


def test_radius_usage_errors(capsys):
    code, _, err = run(capsys, "radius", "--theorem", "R1", "--p", "3")
    assert code == 2 and "p in (0, 2]" in err
    with pytest.raises(SystemExit) as exc:
        main(["radius", "--theorem", "R9"])
    assert exc.value.code == 2


def test_radius_no_root(capsys, monkeypatch):
    from bohrlab import radii
    monkeypatch.setattr(radii.RadiusQuery, "defining_function", lambda self: (lambda r: 1.0 + 0 * r))
    code, _, err = run(capsys, "radius", "--theorem", "R1")
    assert code == 3 and "NoRootFound" in err


@pytest.mark.parametrize("table_id, needle", [(1, "0.318201"), (2, "0.850170"), (3, "0.499037")])
def test_table_diff(capsys, table_id, needle):
    code, out, _ = run(capsys, "table", str(table_id), "--diff")
    assert code == 0
    assert needle in out
    assert "(ok)" in out


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert len(rows) == 7 and len(rows[0]) == 5
    assert rows[1][1] == "0.318201"
    assert all(len(cell.split(".")[1]) == 6 for row in rows[1:] for cell in row[1:])


def test_table_json_and_bad_id(capsys):
    code, out, _ = run(capsys, "table", "3", "--format", "json")
    assert code == 0 and json.loads(out)["table"] == 3
    code, _, err = run(capsys, "table", "4")
    assert code == 2


def test_table_out_file(capsys, tmp_path):
    path = tmp_path / "t2.md"
    code, out, _ = run(capsys, "table", "2", "--out", str(path))
    assert code == 0 and out == ""
    assert "0.236068" in path.read_text()


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "T1", "--k", "1", "--m", "2", "--p", "1",
                       "--random", "20", "--seed", "42")
    assert code == 0 and "| verdict | pass |" in out
    code, out, _ = run(capsys, "verify", "T6", "--k", "1", "--m", "1", "--a", "0.9", "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["verdict"] == "fail" and data["max_lhs"] > 1
    code, out, _ = run(capsys, "verify", "T1", "--k", "1", "--m", "2", "--p", "1",
                       "--family", "constant-zero", "--format", "json")
    assert code == 0 and json.loads(out)["max_lhs"] == 0


def test_verify_random_schwarz(capsys):
    code, _, _ = run(capsys, "verify", "T3", "--k", "2", "--m", "1", "--p", "1.5", "--lambda", "2",
                     "--random", "5", "--schwarz", "random", "--family", "random")
    assert code == 0


def test_verify_bad_params(capsys):
    code, _, _ = run(capsys, "verify", "T2", "--s", "1", "--t", "1")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["T1", "--k", "1", "--m", "1", "--p", "2"],
    ["T2", "--lambda", "1", "--s", "1", "--t", "0", "--k", "1", "--m", "1", "--p", "1"],
    ["T4", "--lambda", "1", "--a", "0", "--k", "1", "--m", "1", "--p", "1"],
])
def test_sharpness_examples(capsys, argv):
    code, out, _ = run(capsys, "sharpness", *argv, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "pass" and data["witness"]["lhs"] > 1


def test_sharpness_t1_witness_location(capsys):
    code, out, _ = run(capsys, "sharpness", "T1", "--k", "1", "--m", "1", "--p", "2",
                       "--a", "0.999", "--format", "json")
    w = json.loads(out)["witness"]
    assert code == 0 and w["r"] == pytest.approx(0.3433, abs=1e-4) and w["a"] == 0.999


def test_sharpness_no_witness(capsys):
    code, _, err = run(capsys, "sharpness", "T1", "--eps", "-0.05")
    assert code == 1 and "NoWitness" in err


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas")
    assert code == 0
    assert out.count(": pass") == 4


@pytest.mark.parametrize("argv", [
    ["--which", "G", "--d", "2", "--norm", "sup"],
    ["--which", "K", "--d", "2", "--norm", "l2", "--a", "0.656854", "--r", "0.333333"],
    ["--which", "J", "--d", "3", "--norm", "l2", "--q", "2", "--p", "3"],
])
def test_multidim(capsys, argv):
    code, out, _ = run(capsys, "multidim", *argv)
    assert code == 0 and "pass" in out


@pytest.mark.parametrize("argv", [
    ["table", "1", "--format", "json"],
    ["verify", "T1", "--random", "5", "--seed", "7", "--format", "json"],
    ["sharpness", "T3", "--format", "md"],
    ["lemmas", "--format", "json"],
])
def test_determinism(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
