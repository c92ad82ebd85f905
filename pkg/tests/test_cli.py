import json

import pytest

from fintop.cli import main
from fintop.core import example_space, space_from_doc, space_to_doc


def write_space(tmp_path, name, space):
    path = tmp_path / name
    path.write_text(json.dumps(space_to_doc(space)))
    return str(path)


@pytest.fixture
def sierpinski_file(tmp_path):
    return write_space(tmp_path, "s.json", example_space("sierpinski"))


def test_check_axiom_true(sierpinski_file, capsys):
    assert main(["check", sierpinski_file, "--axiom", "t12"]) == 0
    assert capsys.readouterr().out.strip() == "true"


def test_check_axiom_false(sierpinski_file, capsys):
    assert main(["check", sierpinski_file, "--axiom", "t02"]) == 1
    assert capsys.readouterr().out.strip() == "false"


def test_check_full_report(sierpinski_file, capsys):
    assert main(["check", sierpinski_file]) == 0
    out = capsys.readouterr().out
    assert "t0: true" in out and "t02: false" in out


def test_check_json_single_document(sierpinski_file, capsys):
    assert main(["check", sierpinski_file, "--json"]) == 0
    out = capsys.readouterr().out
    doc = json.loads(out)  # exactly one JSON document on stdout
    assert doc["profile"]["t0"] is True
    assert doc["pre_hausdorff"]["by_definition"] is False


def test_check_rejects_broken_space(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"points": 2, "opens": [[], [1]]}')  # missing full set
    assert main(["check", str(path)]) == 2
    assert capsys.readouterr().out == ""


def test_check_rejects_bad_json(tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("not json")
    assert main(["check", str(path)]) == 2


def test_reflect_t1_to_point(sierpinski_file, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["reflect", sierpinski_file, "--axiom", "t1", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert space_from_doc(doc) == example_space("point")
    assert doc["projection"] == [0, 0]
    assert "points: 2 -> 1" in capsys.readouterr().err


def test_reflect_preh_gives_indiscrete(sierpinski_file, tmp_path):
    out = tmp_path / "r.json"
    assert main(["reflect", sierpinski_file, "--axiom", "preh", "--out", str(out)]) == 0
    assert space_from_doc(json.loads(out.read_text())) == example_space("indiscrete:2")


def test_reflect_retract_unchanged(tmp_path):
    f = write_space(tmp_path, "d2.json", example_space("discrete:2"))
    out = tmp_path / "r.json"
    assert main(["reflect", f, "--axiom", "t2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert space_from_doc(doc) == example_space("discrete:2")
    assert doc["projection"] == [0, 1]


def test_count_commands(capsys):
    assert main(["count", "bell", "-n", "14"]) == 0
    assert capsys.readouterr().out.strip() == "190899322"
    assert main(["count", "partitions", "-n", "14"]) == 0
    assert capsys.readouterr().out.strip() == "135"
    assert main(["count", "bell", "-n", "0"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_count_rejects_bad_n(capsys):
    assert main(["count", "bell", "-n", "1000"]) == 3


def test_census_command(tmp_path, capsys):
    out = tmp_path / "c4.csv"
    assert main(["census", "-n", "4", "--out", str(out), "--workers", "1"]) == 0
    assert capsys.readouterr().out.strip() == "total=355 preH=15 bell_check=ok"
    text = out.read_text()
    assert text.startswith("n,t0,t1,t2,")
    assert sum(int(l.split(",")[-1]) for l in text.strip().split("\n")[1:]) == 355


def test_census_over_limit(tmp_path):
    assert main(["census", "-n", "9", "--out", str(tmp_path / "c.csv")]) == 3
    assert main(["census", "-n", "7", "--out", str(tmp_path / "c.csv")]) == 3


def test_homeomorphic_fast_path(tmp_path, capsys):
    a = write_space(tmp_path, "a.json", example_space("partition:0,1|2"))
    b = write_space(tmp_path, "b.json", example_space("partition:1,2|0"))
    assert main(["homeomorphic", a, b]) == 0
    assert capsys.readouterr().out.strip() == "true (fast path)"


def test_homeomorphic_false(tmp_path, capsys):
    a = write_space(tmp_path, "a.json", example_space("sierpinski"))
    b = write_space(tmp_path, "b.json", example_space("indiscrete:2"))
    assert main(["homeomorphic", a, b]) == 1
    assert capsys.readouterr().out.strip() == "false (general path)"


def test_homeomorphic_identical_files(tmp_path, capsys):
    a = write_space(tmp_path, "a.json", example_space("sierpinski"))
    assert main(["homeomorphic", a, a]) == 0
    assert "true" in capsys.readouterr().out


def test_example_command(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["example", "sierpinski", "--out", str(out)]) == 0
    assert space_from_doc(json.loads(out.read_text())) == example_space("sierpinski")
    assert main(["example", "indiscrete:3", "--out", str(out)]) == 0
    assert space_from_doc(json.loads(out.read_text())) == example_space("indiscrete:3")
    assert main(["example", "nosuch"]) == 2


def test_written_spaces_reparse_canonically(tmp_path):
    # round-trip through the CLI writer for a non-canonically ordered input
    path = tmp_path / "in.json"
    path.write_text('{"points": 2, "opens": [[0, 1], [1], []]}')
    out = tmp_path / "out.json"
    assert main(["reflect", str(path), "--axiom", "t0", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["opens"] == [[], [1], [0, 1]]  # canonical order
