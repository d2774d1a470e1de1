import json

import pytest

from hrtrees import io
from hrtrees.cli import run
from hrtrees.club import club_of
from hrtrees.fixtures import c1club, lunar, pizza, triangle


def test_polyhedral_round_trip(tmp_path):
    g = pizza(4)
    path = tmp_path / "pz4.json"
    path.write_text(io.dumps(io.polyhedral_to_json(g)))
    back = io.load(path)
    assert back == g


def test_coloured_round_trip_keeps_provenance(tmp_path):
    club = club_of(lunar(2))
    doc = io.coloured_to_json(club.graph, club.squares, club.provenance)
    g, sq, prov = io.coloured_from_json(json.loads(io.dumps(doc)))
    assert g == club.graph and sq.keys() == club.squares.keys() and prov == club.provenance


def test_bad_documents_are_malformed(tmp_path):
    from hrtrees.errors import MalformedInput
    with pytest.raises(MalformedInput):
        io.coloured_from_json({"vertices": ["a"], "edges": [{"id": "e"}]})
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(MalformedInput):
        io.load(p)


def test_dot_and_tikz_use_the_legend():
    g, _ = c1club()
    dot = io.coloured_to_dot(g)
    assert "color=blue, style=solid" in dot and "color=red, style=dashed" in dot
    tikz = io.coloured_to_tikz(g)
    assert r"\draw[->, red, dashed]" in tikz


def cli(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr()


def test_tree_check_on_c1(capsys):
    code, out = cli(capsys, "tree-check", "lunar:1")
    assert code == 0
    assert out.out.strip() == "trivial π₁, planar, euler ok"


def test_analyse_q4(capsys):
    code, out = cli(capsys, "analyse", "hypercube:4", "--format", "json")
    assert code == 0
    assert json.loads(out.out)["planar"] is False


def test_analyse_triangle(capsys):
    code, out = cli(capsys, "analyse", "triangle", "--format", "json")
    assert json.loads(out.out)["fixedPointFreeOrders"] == [3]


def test_validate_loop_is_input_error(tmp_path, capsys):
    doc = {"points": ["p", "q"], "arcs": [{"id": "x", "r": "p", "s": "p"},
                                         {"id": "y", "r": "p", "s": "q"},
                                         {"id": "z", "r": "q", "s": "p"}],
           "rotation": {"p": ["x", "x", "y", "z"], "q": ["y", "z"]}}
    path = tmp_path / "loop.json"
    path.write_text(json.dumps(doc))
    code, out = cli(capsys, "validate", str(path))
    assert code == 2
    assert "NoLoops" in out.out


def test_pi1_json_schema(capsys):
    code, out = cli(capsys, "pi1", "pizza:3", "--format", "json")
    doc = json.loads(out.out)
    assert code == 0 and doc["status"] == "Trivial"
    assert set(doc) == {"status", "tree", "killed", "trace", "residual"}
    assert len(doc["tree"]) == 13
    assert doc["trace"][0]["generator"] == "(a1,R4)"


def test_pi1_negative_verdict(capsys):
    code, out = cli(capsys, "pi1", "lambda")
    assert code == 1 and "Reduced" in out.out


def test_colour_and_clash_exit_codes(capsys):
    code, out = cli(capsys, "colour", "pizza:3", "--colours", "3")
    assert code == 1
    code, out = cli(capsys, "club", "pizza:3", "--convention", "arc")
    assert code == 1 and "asked for colours" in out.err


def test_generate_then_club(tmp_path, capsys):
    path = tmp_path / "c2.json"
    assert run(["generate", "lunar", "2", "-o", str(path)]) == 0
    code, out = cli(capsys, "club", str(path), "--format", "json")
    doc = json.loads(out.out)
    assert code == 0 and doc["format"] == "colouredgraph.v1"
    assert len(doc["provenance"]) == 6


def test_glue_cut_quotient_commands(tmp_path, capsys):
    g, sq = c1club()
    src = tmp_path / "c1.json"
    src.write_text(io.dumps(io.coloured_to_json(g, sq)))
    mark = tmp_path / "mark.json"
    mark.write_text(json.dumps({"vertices": ["p:v2"], "edges": []}))
    half = tmp_path / "half.json"
    assert run(["cut", str(src), "--mark", str(mark), "--keep", "outside", "-o", str(half)]) == 0
    other_mark = tmp_path / "mark1.json"
    other_mark.write_text(json.dumps({"vertices": ["p:v1"], "edges": []}))
    other = tmp_path / "other.json"
    assert run(["cut", str(src), "--mark", str(other_mark), "--keep", "outside", "-o", str(other)]) == 0
    locus = ["a:a0", "a:a1", "f:r0", "f:r1"]
    edges = ["(a0,r0)", "(a0,r1)", "(a1,r0)", "(a1,r1)"]
    m = tmp_path / "locus.json"
    m.write_text(json.dumps({"vertices": locus, "edges": edges}))
    iso = tmp_path / "iso.json"
    iso.write_text(json.dumps({"vertexMap": {x: x for x in locus}, "edgeMap": {x: x for x in edges}}))
    code, out = cli(capsys, "glue", str(half), str(other), "--iso", str(iso),
                    "--mark1", str(m), "--mark2", str(m), "--format", "json")
    assert code == 0 and len(json.loads(out.out)["vertices"]) == 6
    rel = tmp_path / "rel.json"
    rel.write_text(json.dumps({"edgePairs": [["(a0,r0)", "(r0,v1)"]]}))
    code, _ = cli(capsys, "quotient", str(src), "--relation", str(rel))
    assert code == 2


def test_export_formats(capsys):
    code, out = cli(capsys, "export", "lunar:1")
    assert code == 0 and out.out.startswith("graph polyhedral")
    code, out = cli(capsys, "export", "lunar:1", "--club", "--to", "tikz")
    assert code == 0 and "tikzpicture" in out.out
    code, out = cli(capsys, "export", "triangle", "--to", "dot")
    assert out.out.startswith("digraph")


def test_usage_errors(capsys):
    assert run(["frobnicate"]) == 2
    assert run(["validate", "no-such-family"]) == 2
    assert run(["pi1", "triangle", "--format", "yaml"]) == 2


def test_output_is_deterministic(capsys):
    _, a = cli(capsys, "pi1", "pizza:4", "--format", "json")
    _, b = cli(capsys, "pi1", "pizza:4", "--format", "json")
    assert a.out == b.out


def test_triangle_round_trips_through_json(tmp_path):
    g, sq = triangle()
    p = tmp_path / "t.json"
    p.write_text(io.dumps(io.coloured_to_json(g, sq)))
    g2, sq2, _ = io.load(p)
    assert g2 == g and sq2.keys() == sq.keys()
