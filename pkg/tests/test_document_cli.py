from __future__ import annotations

import json
import subprocess
import sys

import pytest
from hypothesis import given

from cli_cases import CASES, GOLDEN, golden_path, run, run_case
from rpkernel import ArcColouredDigraph, DocumentError, fixture
from rpkernel.document import dumps, parse_document, serialize, to_document
from rpkernel.dot import PALETTE, to_dot
from strategies import coloured_digraphs

TRIANGLE = '{"vertices": ["a", "b", "c"], "arcs": [["a", "b", 1], ["b", "c", 2], ["c", "a", 3]]}'


@pytest.fixture
def write(tmp_path):
    def _write(text: str, name: str = "d.json") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


# document format


@given(coloured_digraphs(max_n=6))
def test_serialize_round_trips(d):
    assert parse_document(serialize(d)) == d
    assert json.loads(serialize(d)) == json.loads(dumps(to_document(d)))


def test_serialized_fixture_matches_checked_in_copy():
    assert serialize(fixture("FIG4")) == (GOLDEN / "FIG4.json").read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "text",
    [
        "[]",
        '{"vertices": [1]}',
        '{"vertices": ["a", "a"]}',
        '{"vertices": ["a"], "arcs": [["a", "b", 1]]}',
        '{"vertices": ["a", "b"], "arcs": [["a", "b", 0]]}',
        '{"vertices": ["a", "b"], "arcs": [["a", "b", true]]}',
        '{"vertices": ["a", "b"], "arcs": [["a", "b"]]}',
        '{"vertices": ["a", "b"], "arcs": [["a", "b", 1], ["a", "b", 2]]}',
        '{"vertices": ["a"], "arcs": [], "extra": 1}',
    ],
)
def test_malformed_documents_are_rejected(text):
    with pytest.raises(DocumentError):
        parse_document(text)


def test_syntax_errors_carry_line_and_column():
    with pytest.raises(DocumentError) as info:
        parse_document('{\n  "vertices": [,]\n}')
    assert (info.value.line, info.value.column) == (2, 16)


# exit codes


def test_parse_error_exits_2_with_position(write):
    code, out, err = run(["classify", write('{"vertices": ["a"],\n "arcs": [}')])
    assert code == 2 and out == ""
    assert "line 2, column 11" in err


def test_missing_file_and_unknown_vertex_exit_2(write, tmp_path):
    assert run(["classify", str(tmp_path / "absent.json")])[0] == 2
    code, _, err = run(["validate", write(TRIANGLE), "--kernel", "a,zz"])
    assert code == 2 and "zz" in err


def test_bad_arguments_exit_2():
    assert run(["solve"])[0] == 2
    assert run(["generate", "tree"])[0] == 2
    assert run(["generate", "unicyclic", "--n", "1"])[0] == 2


def test_solve_exit_codes(write, tmp_path):
    tri = write(TRIANGLE)
    code, out, _ = run(["solve", tri])
    assert code == 0 and "RP-kernel: {a}" in out and "method: unicyclic" in out
    fig4 = str(GOLDEN / "FIG4.json")
    code, out, _ = run(["solve", fig4, "--method", "brute"])
    assert code == 1 and "no RP-kernel" in out
    code, out, _ = run(["solve", fig4, "--method", "bipartite"])
    assert code == 4 and "precondition failed: 4-cycles >= 3 colours" in out
    code, out, _ = run(["solve", fig4, "--bound", "3"])
    assert code == 3 and "unknown" in out


def test_solve_validate_rechecks(write):
    code, out, _ = run(["solve", write(TRIANGLE), "--validate", "--json"])
    doc = json.loads(out)
    assert code == 0 and doc["recheck"] and doc["in_enumeration"]


def test_validate_reports_the_witness():
    code, out, _ = run(["validate", str(GOLDEN / "FIG4.json"), "--kernel", "y1,y2"])
    assert code == 1 and out == "not an RP-kernel: x2 unabsorbed\n"


# other subcommands


def test_closure_marks_added_arcs(write):
    two_path = '{"vertices": ["u", "v", "w"], "arcs": [["u", "v", 1], ["v", "w", 2]]}'
    path = write(two_path)
    code, out, _ = run(["closure", path])
    assert code == 0 and "  + u -> w" in out
    doc = json.loads(run(["closure", "--json", path])[1])
    assert ["u", "w", None] in doc["arcs"]


def test_reach_matrix(write):
    doc = json.loads(run(["reach", "--json", write(TRIANGLE)])[1])
    assert doc["matrix"] == [[False, True, True], [True, False, True], [True, True, False]]


def test_generate_then_classify(tmp_path):
    path = tmp_path / "semi.json"
    assert run(["generate", "semicomplete", "--n", "6", "--seed", "1", "-o", str(path)])[0] == 0
    code, out, _ = run(["classify", str(path)])
    assert code == 0 and "3-cycles rainbow: PASS" in out and "semicomplete: true" in out


def test_generate_is_reproducible():
    args = ["generate", "bipartite", "--parts", "2,5", "--m", "4", "--seed", "7"]
    assert run(args)[1] == run(args)[1]


def test_export_dot_highlights_kernel(tmp_path):
    code, out, _ = run(["export-dot", str(GOLDEN / "TB4.json"), "--kernel", "u4"])
    assert code == 0 and out.startswith('digraph "TB4" {')
    assert '"u4" [style=filled' in out and f'color="{PALETTE[0]}"' in out


def test_dot_labels_colours_past_the_palette():
    d = ArcColouredDigraph(2, [(0, 1, 13)])
    assert 'label="13"' in to_dot(d) and f'color="{PALETTE[0]}"' in to_dot(d)


def test_figures_are_rendered(tmp_path):
    solve_png, dot_png = tmp_path / "solve.png", tmp_path / "closure.png"
    assert run(["solve", str(GOLDEN / "QT4.json"), "--figure", str(solve_png)])[0] == 0
    assert run(["export-dot", str(GOLDEN / "FIG4.json"), "--closure", "--figure", str(dot_png)])[0] == 0
    for png in (solve_png, dot_png):
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_console_script_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "rpkernel.cli", "solve", "-"],
        input=TRIANGLE,
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "RP-kernel: {a}" in proc.stdout


# goldens


@pytest.mark.parametrize(("name", "command", "extra", "code"), CASES, ids=[f"{c[0]}-{c[1]}" for c in CASES])
def test_json_goldens(name, command, extra, code):
    got_code, out = run_case(name, command, extra)
    assert got_code == code
    assert out == golden_path(name, command).read_text(encoding="utf-8")
