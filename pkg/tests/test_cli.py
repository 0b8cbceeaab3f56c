import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from fixedclip import cli
from fixedclip.clip import run_boolean
from fixedclip.errors import InvalidInput, TraversalNotClosing
from fixedclip.geometry import point
from fixedclip.io import parse_polygon, parse_result, polygon_document, result_document
from fixedclip.marking import BooleanOp
from fixedclip.model import Hand, Role, Rule, VertexFlag
from fixedclip.svg import render

from conftest import polygon, rect

SVG = "{http://www.w3.org/2000/svg}"


def write(path, contours, **extra):
    doc = {"contours": contours, **extra}
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def squares(tmp_path):
    a = write(tmp_path / "a.json", [[[0, 0], [1, 0], [1, 1], [0, 1]]])
    b = write(tmp_path / "b.json", [[["0.5", "0.5"], ["1.5", "0.5"], ["1.5", "1.5"], ["0.5", "1.5"]]])
    return a, b


def test_parse_exact_decimals():
    poly, rule = parse_polygon('{"contours": [[[0.1, 0], ["0.2", 0], [0, "1/3"]]], "rule": "evenodd"}')
    assert [v.pos for v in poly.vertices()] == [point("0.1", 0), point("0.2", 0), point(0, "1/3")]
    assert rule is Rule.EVENODD and poly.rule is Rule.EVENODD


@pytest.mark.parametrize("text, where", [
    ('{"contours": [[[0, 0], [1, 0], [1, 1]], [[0, 0], [1]]]}', "contour 1 vertex 1"),
    ('{"contours": [[[0, 0], [1, 0], ["x", 1]]]}', "contour 0 vertex 2"),
    ('{"contours": [[[0, 0], [1, 0]]]}', "contour 0"),
    ('{"contours": [[[0, 0], [0, 0], [1, 1]]]}', "contour 0"),
    ('{"contours": []}', "at least one contour"),
    ('{"contour": []}', "contours"),
    ('{"contours": [[[0, 0], [1, 0], [1, 1]]], "hand": "up"}', "hand"),
    ('{"contours": [[[0, 0], [1, 0], [1, 1]]', "line 1"),
])
def test_parse_errors_name_location(text, where):
    with pytest.raises(InvalidInput, match=where):
        parse_polygon(text)


def test_polygon_document_roundtrip():
    text = polygon_document([rect(0, "0.5", "1/3", 2)], Hand.LEFT, Rule.NONZERO)
    poly, rule = parse_polygon(text)
    assert poly.contours[0].points() == rect(0, "0.5", "1/3", 2)
    assert poly.contours[0].declared_hand is Hand.LEFT and rule is Rule.NONZERO


def test_result_roundtrip():
    run = run_boolean(polygon(rect(0, 0, 2, 2), role=Role.CLIPPER), polygon(rect(1, 1, 3, 3)),
                      BooleanOp.UNION)
    text = result_document(run.result, BooleanOp.UNION)
    assert parse_result(text).contours == run.result.contours
    assert result_document(parse_result(text), "union") == text


def test_run_ok(squares, tmp_path, capsys):
    a, b = squares
    out, svg = tmp_path / "r.json", tmp_path / "r.svg"
    code = cli.main(["--clipper", a, "--subject", b, "--op", "intersection",
                     "--verify", "1000", "--out", str(out), "--svg", str(svg)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["op"] == "intersection" and doc["empty"] is False
    assert len(doc["contours"]) == 1
    assert {e["origin"] for e in doc["contours"][0]["edges"]} == {"clipper", "subject"}
    ET.parse(svg)


def test_run_stdout_and_byte_determinism(squares, capsys):
    a, b = squares
    outputs = []
    for _ in range(3):
        assert cli.main(["--clipper", a, "--subject", b, "--op", "union", "--simplify"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_malformed_json_exit_1(tmp_path, squares, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"contours": [[[0, 0], ')
    assert cli.main(["--clipper", str(bad), "--subject", squares[1], "--op", "union"]) == 1
    assert "line 1" in capsys.readouterr().err


def test_missing_file_and_bad_flags_exit_1(tmp_path, squares, capsys):
    assert cli.main(["--clipper", str(tmp_path / "nope.json"), "--subject", squares[1],
                     "--op", "union"]) == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["--clipper", squares[0], "--op", "union"])
    assert exc.value.code == 1


def test_conflicting_rules_exit_1(tmp_path):
    a = write(tmp_path / "a.json", [[[0, 0], [1, 0], [1, 1]]], rule="evenodd")
    b = write(tmp_path / "b.json", [[[0, 0], [1, 0], [1, 1]]], rule="nonzero")
    assert cli.main(["--clipper", a, "--subject", b, "--op", "union"]) == 1
    assert cli.main(["--clipper", a, "--subject", b, "--op", "union", "--rule", "nonzero"]) == 0


def test_figure_eight_touching_at_pinch_exit_2(tmp_path, capsys):
    eight = write(tmp_path / "eight.json", [[[0, 0], [2, 2], [2, 0], [0, 2]]])
    other = write(tmp_path / "tri.json", [[[1, 1], [3, 1], [3, 3]]])
    assert cli.main(["--clipper", eight, "--subject", other, "--op", "intersection"]) == 2
    assert "self-intersection" in capsys.readouterr().err


def test_oracle_disagreement_exit_3(squares, monkeypatch):
    import fixedclip.clip as clip_mod

    from fixedclip.tracing import ResultRegion

    def wrong(clipper, subject, op):
        return ResultRegion()

    monkeypatch.setattr(clip_mod, "trace", wrong)
    a, b = squares
    assert cli.main(["--clipper", a, "--subject", b, "--op", "intersection", "--verify", "200"]) == 3


def test_internal_failure_exit_4(squares, monkeypatch):
    import fixedclip.clip as clip_mod

    def broken(clipper, subject, op):
        raise TraversalNotClosing("forced")

    monkeypatch.setattr(clip_mod, "trace", broken)
    a, b = squares
    assert cli.main(["--clipper", a, "--subject", b, "--op", "intersection"]) == 4


def test_svg_content():
    red = polygon(rect(1, 0, 2, 1), role=Role.CLIPPER)
    black = polygon(rect(0, 0, 1, 2))
    run = run_boolean(red, black, BooleanOp.UNION)
    root = ET.fromstring(render(run))
    lines = root.findall(f"{SVG}line")
    red_lines = [ln for ln in lines if ln.get("class") == "clipper-edge"]
    black_lines = [ln for ln in lines if ln.get("class") == "subject-edge"]
    assert len(red_lines) == len(list(run.clipper.vertices()))
    assert len(black_lines) == len(list(run.subject.vertices()))
    flagged = [
        v for p in (run.clipper, run.subject) for v in p.vertices() if v.flag is not VertexFlag.NONE
    ]
    circles = root.findall(f"{SVG}circle")
    assert len(circles) == len(flagged) > 0
    assert {c.get("data-flag") for c in circles} == {"en", "ex"}
    assert root.find(f"{SVG}path").get("fill") == "cyan"


def test_corpus_runs(tmp_path, capsys):
    assert cli.main(["generate", str(tmp_path / "gen"), "--count", "4", "--seed", "3"]) == 0
    assert len(list((tmp_path / "gen").glob("*.json"))) == 8
    assert cli.main(["corpus", str(tmp_path / "gen"), "--verify", "200", "--jobs", "2"]) == 0
    out = capsys.readouterr().out
    assert "12/12 passed" in out


def test_corpus_empty_directory(tmp_path, capsys):
    (tmp_path / "empty").mkdir()
    assert cli.main(["corpus", str(tmp_path / "empty")]) == 0
    assert "0/0 passed" in capsys.readouterr().out


def test_corpus_reports_scope_case(tmp_path, capsys):
    d = tmp_path / "c"
    d.mkdir()
    write(d / "ok.clipper.json", [[[0, 0], [1, 0], [1, 1], [0, 1]]])
    write(d / "ok.subject.json", [[[1, 0], [2, 0], [2, 1], [1, 1]]])
    write(d / "pinch.clipper.json", [[[0, 0], [2, 2], [2, 0], [0, 2]]])
    write(d / "pinch.subject.json", [[[1, 1], [3, 1], [3, 3]]])
    assert cli.main(["corpus", str(d), "--op", "intersection"]) == 1
    out = capsys.readouterr().out
    assert "pinch" in out and "FAIL(2)" in out
    assert "1/2 passed" in out


def test_bundled_fixtures_pass(capsys):
    from pathlib import Path

    fixtures = Path(__file__).parent / "fixtures" / "degenerate"
    assert cli.main(["corpus", str(fixtures), "--verify", "1000"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_console_script_entry_point(squares):
    a, b = squares
    proc = subprocess.run(
        [sys.executable, "-m", "fixedclip", "--clipper", a, "--subject", b, "--op", "difference"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["op"] == "difference"
