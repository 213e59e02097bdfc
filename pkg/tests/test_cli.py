import json

import pytest
from hypothesis import given, strategies as st

from zgon.cli import main
from zgon.core import Gon, Point
from zgon.formats import (
    ParseError,
    object_from_json,
    parse_arc,
    parse_interval,
    parse_point,
    to_json,
)
from zgon.rep import Interval, intervals
from zgon.stable import Arc, ar_quiver, arc, arcs
from zgon import figures

from conftest import I

pts = st.builds(Point, st.integers(1, 5), st.integers(-99, 99))


@given(pts)
def test_point_round_trip(z):
    assert parse_point(str(z)) == z
    assert object_from_json(to_json(z)) == z


@given(pts, pts, st.integers(0, 1))
def test_interval_round_trip(a, b, h):
    U = Interval(a, b, h)
    assert parse_interval(str(U)) == U
    assert object_from_json(to_json(U)) == U


@given(pts, pts)
def test_arc_round_trip(a, b):
    x = Arc(a, b)
    assert parse_arc(str(x)) == x
    assert object_from_json(to_json(x)) == x


def test_parse_variants():
    assert parse_interval("(1:0,1:2;0)") == I(0, 2, 0)
    assert parse_arc("( 1:1 |1:0 )") == arc(1, 0)
    for bad in ("(1:0, 1:2)", "1:0", "(1:0, 1:2; 2)"):
        with pytest.raises(ParseError):
            parse_interval(bad)


def test_hom_command(capsys):
    assert main(["hom", "--m", "1", "(1:0,1:2;0)", "(1:-1,1:1;0)", "--output", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert (rep["dim_rep"], rep["hammock"], rep["dim_stable"]) == (1, "Hplus", 1)
    assert parse_interval(rep["source"]) == I(0, 2, 0)
    assert main(["hom", "--m", "1", "--arcs", "(1:1|1:0)", "(1:1|1:0)", "--output", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 1
    assert main(["hom", "--m", "1", "(1:0,1:1;1)", "(1:0,1:1;1)", "--output", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert (rep["dim_rep"], rep["dim_stable"]) == (2, 0)


def test_hom_command_errors(capsys):
    assert main(["hom", "--m", "1", "(1:0,1:3;1)", "(1:0,1:1;1)"]) == 2
    assert main(["hom", "--m", "1", "--arcs", "(1:2|1:0)", "(1:1|1:0)"]) == 2
    assert main(["hom", "--m", "1", "nonsense", "(1:0,1:1;1)"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["hom", "--field", "real", "(1:0,1:1;1)", "(1:0,1:1;1)"])
    assert exc.value.code == 2


def test_verify_command(capsys):
    code = main(["verify", "--m", "1", "--window", "2", "--samples", "40", "--output", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["passed"]
    assert {s["suite"] for s in out["suites"]} >= {"hom_agreement", "serre_duality", "exactness"}
    assert main(["verify", "--m", "1", "--window", "0"]) == 2


def test_verify_reports_counterexamples(monkeypatch, capsys):
    from zgon import verify

    def broken(cfg):
        res = verify.SuiteResult("broken")
        res.record(("x", "y"), 1, 0)
        return res

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    assert main(["verify", "--suite", "broken"]) == 1
    out = capsys.readouterr().out
    assert "FAIL broken" in out and "(x, y): closed form 1, oracle 0" in out


def test_arquiver_dot(tmp_path):
    path = tmp_path / "q.dot"
    assert main(["arquiver", "--m", "2", "--window", "3", "--file", str(path)]) == 0
    text = path.read_text()
    assert text.startswith("digraph") and '"(1:1 | 1:0)"' in text
    assert "style=dashed" in text and "cluster_2_1_1" in text
    assert figures.quiver_adjacency(ar_quiver(Gon(2), 3))["components"] == 6


def test_arquiver_json_and_empty(capsys):
    assert main(["arquiver", "--m", "1", "--window", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["components"] == 2
    assert {parse_arc(v["arc"]) for v in data["vertices"]} == set(arcs(Gon(1), 3))
    assert main(["arquiver", "--m", "1", "--window", "0"]) == 0
    out = capsys.readouterr().out
    assert "->" not in out and out.rstrip().endswith("}")


def test_plot(tmp_path, capsys):
    path = tmp_path / "a.svg"
    assert main(["plot", "--m", "1", "(1:1|1:0)", "--hammocks", "--file", str(path)]) == 0
    svg = path.read_text()
    assert svg.count("<polygon") == 2 and "url(#hatch)" in svg
    assert main(["plot", "--m", "1", "(1:3|1:0)", "--triangle"]) == 0
    svg = capsys.readouterr().out
    assert svg.count('stroke-dasharray="2,4"') == 2
    assert main(["plot", "--m", "2"]) == 0
    bare = capsys.readouterr().out
    assert "stroke-width=\"2.5\"" not in bare and bare.count('r="5"') == 2
    assert main(["plot", "--m", "1", "(1:0,1:1;1)"]) == 2


def test_svg_is_deterministic():
    objs = [arc(3, 0), I(0, 2, 0)]
    assert figures.gon_svg(Gon(2), objs) == figures.gon_svg(Gon(2), objs)
