import itertools
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from graphproj.cli import main
from graphproj.graph import parse_graph, serialize_graph
from graphproj.groupoid import OperatorWord
from graphproj.verify import letter_pool

DATA = Path(__file__).parent / "data"
G1 = str(DATA / "g1.txt")
G2 = str(DATA / "g2.txt")
G3 = str(DATA / "g3.txt")
PARALLEL = str(DATA / "parallel.txt")


@pytest.fixture
def runner():
    return CliRunner()


def test_check_projection_exits_zero(runner):
    result = runner.invoke(main, ["check", G1, "e*", "e"])
    assert result.exit_code == 0
    assert "projection at y" in result.output


def test_check_non_projection_exits_one(runner):
    result = runner.invoke(main, ["check", G1, "e"])
    assert result.exit_code == 1
    assert "not a projection" in result.output


def test_check_json_payload(runner):
    result = runner.invoke(main, ["check", G1, "--json", "e* e"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload == {
        "projection": True,
        "vertex": "y",
        "normal_form": "y",
        "lattice_endpoint": [0, 0],
        "zero": False,
        "agreement": True,
        "groupoid_vertex": "y",
        "lattice_vertex": "y",
    }


def test_check_json_zero_word(runner):
    result = runner.invoke(main, ["check", G1, "--json", "x y"])
    assert result.exit_code == 1
    payload = json.loads(result.output)
    assert payload["zero"] is True
    assert payload["projection"] is False
    assert payload["normal_form"] == "Zero"
    assert payload["lattice_endpoint"] is None


def test_check_fock_report(runner):
    result = runner.invoke(main, ["check", G1, "--json", "--fock", "e* e"])
    assert result.exit_code == 0
    assert json.loads(result.output)["fock"] == "projection-below(y)"
    result = runner.invoke(main, ["check", G1, "--json", "--fock", "e"])
    assert json.loads(result.output)["fock"] == "partial-isometry"
    result = runner.invoke(main, ["check", G1, "--json", "--fock", "x y"])
    assert json.loads(result.output)["fock"] == "zero"


def test_check_disagreement_exits_three(runner):
    # two parallel edges: e f* balances lengths without reducing to a unit
    result = runner.invoke(main, ["check", PARALLEL, "e", "f*"])
    assert result.exit_code == 3
    payload = json.loads(
        runner.invoke(main, ["check", PARALLEL, "--json", "e f*"]).output
    )
    assert payload["projection"] is False
    assert payload["agreement"] is False
    assert payload["groupoid_vertex"] is None
    assert payload["lattice_vertex"] == "p"


def test_check_never_disagrees_on_narrow_graphs(runner):
    # on graphs where no two edges share a source or a range the length
    # test is exact, so exit 3 must never happen; exhaustive to 3 letters
    for path in (G1, G2, G3):
        g = parse_graph(Path(path).read_text())
        pool = [str(letter) for letter in letter_pool(g, 2)]
        for n in (1, 2, 3):
            for combo in itertools.product(pool, repeat=n):
                result = runner.invoke(main, ["check", path, " ".join(combo)])
                assert result.exit_code in (0, 1), combo


def test_check_parse_errors_exit_two(runner, tmp_path):
    result = runner.invoke(main, ["check", G1, "nope"])
    assert result.exit_code == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("vertex a\nedge e a b\n")
    result = runner.invoke(main, ["check", str(bad), "a"])
    assert result.exit_code == 2
    assert "line 2" in result.stderr
    result = runner.invoke(main, ["check", str(tmp_path / "missing.txt"), "a"])
    assert result.exit_code == 2


def test_reduce_outputs(runner):
    assert runner.invoke(main, ["reduce", G2, "f f f*"]).output == "f\n"
    assert runner.invoke(main, ["reduce", G1, "e* e"]).output == "y\n"
    assert runner.invoke(main, ["reduce", G1, "x y"]).output == "Zero\n"
    assert (
        runner.invoke(main, ["reduce", PARALLEL, "e f*"]).output == "e.f^-1\n"
    )


def test_lattice_csv_stdout(runner):
    result = runner.invoke(main, ["lattice", G1, "e* e"])
    assert result.exit_code == 0
    assert result.stdout == "0,0\n-1,-1\n0,0\n"
    assert "star axis: yes" in result.stderr


def test_lattice_svg_to_file_with_figure(runner, tmp_path):
    out = tmp_path / "path.svg"
    fig = tmp_path / "path.png"
    result = runner.invoke(
        main,
        ["lattice", G1, "--format", "svg", "--out", str(out),
         "--figure", str(fig), "e* e"],
    )
    assert result.exit_code == 0
    assert out.read_text().startswith("<svg")
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_lattice_empty_path_message(runner):
    result = runner.invoke(main, ["lattice", G1, "x y"])
    assert "empty path" in result.stderr
    assert "# empty lattice path" in result.output


def test_verify_single_graph(runner):
    result = runner.invoke(main, ["verify", G1, "-L", "2"])
    assert result.exit_code == 0
    assert "no violations" in result.output
    assert "total: 42 words, 0 violations" in result.output


def test_verify_branching_graph_exits_nonzero(runner):
    result = runner.invoke(main, ["verify", PARALLEL, "-L", "2", "-K", "1"])
    assert result.exit_code == 1
    assert "VIOLATIONS" in result.output


def test_verify_fuzz_with_report_dir(runner, tmp_path):
    result = runner.invoke(
        main,
        ["verify", "--fuzz", "3", "--seed", "1", "-L", "2", "-K", "1",
         "-N", "3", "--report-dir", str(tmp_path)],
    )
    assert result.exit_code in (0, 1)
    csv_text = (tmp_path / "verify_report.csv").read_text()
    lines = csv_text.strip().splitlines()
    assert lines[0].startswith("graph,vertices,edges,words")
    assert len(lines) == 4
    assert (tmp_path / "verify_summary.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_verify_needs_a_target(runner):
    assert runner.invoke(main, ["verify"]).exit_code == 2
    assert runner.invoke(main, ["verify", G1, "--fuzz", "2"]).exit_code == 2


def test_graph_validate(runner, tmp_path):
    result = runner.invoke(main, ["graph", "validate", G3])
    assert result.exit_code == 0
    assert "3 vertices, 2 edges" in result.output
    bad = tmp_path / "bad.txt"
    bad.write_text("edge e a b\n")
    assert runner.invoke(main, ["graph", "validate", str(bad)]).exit_code == 2


def test_graph_round_trip_is_byte_identical(runner, tmp_path):
    for name in ("g1.txt", "g2.txt", "g3.txt", "parallel.txt"):
        original = (DATA / name).read_text()
        assert serialize_graph(parse_graph(original)) == original


def test_word_tokens_may_be_split_or_joined(runner):
    split = runner.invoke(main, ["check", G1, "--json", "e*", "e"])
    joined = runner.invoke(main, ["check", G1, "--json", "e* e"])
    assert split.output == joined.output
