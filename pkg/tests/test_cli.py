"""
Tests for the flift command line
"""
import json

import pytest

from src.cli.main import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, build_parser, main

COARSE_PAIR = "group 4\nvertex a index 2\nvertex b index 2\nedge a b 0\n"


@pytest.fixture(autouse=True)
def isolated_corpus(tmp_path, monkeypatch):
    monkeypatch.setenv("FLIFT_CORPUS_DIR", str(tmp_path / "corpus"))
    monkeypatch.delenv("FLIFT_TOL", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_j42(capsys):
    """Test the octahedron summary"""
    code, out, _ = run(capsys, "build", "j42")

    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "N=6, 4-regular, 12 edges"
    assert len(lines) == 25


def test_build_f3c6(capsys):
    """Test the F3(C6) summary"""
    code, out, _ = run(capsys, "build", "f3c6")

    assert code == EXIT_OK
    assert out.splitlines()[0] == "N=20, degrees 2^6 4^12 6^2, 36 edges"


def test_build_json(capsys):
    """Test the JSON lift document"""
    code, out, _ = run(capsys, "build", "j42", "--format", "json")
    document = json.loads(out)

    assert code == EXIT_OK
    assert document["N"] == 6
    assert document["summary"] == "N=6, 4-regular, 12 edges"


def test_build_missing_file(capsys):
    """Test exit 2 on a missing input"""
    code, _, err = run(capsys, "build", "missing.cvg")

    assert code == EXIT_INPUT
    assert "no such file" in err


def test_build_parse_error(capsys, tmp_path):
    """Test exit 2 with a line-numbered message"""
    path = tmp_path / "bad.cvg"
    path.write_text("group 6\nvertex a index 4\n", encoding="utf-8")
    code, _, err = run(capsys, "build", str(path))

    assert code == EXIT_INPUT
    assert "line 2:" in err


def test_spectrum_both_f3c6(capsys):
    """Test the end-to-end comparison"""
    code, out, _ = run(capsys, "spectrum", "f3c6", "--method", "both")

    assert code == EXIT_OK
    assert "comparison: pass, 20 matched" in out
    assert "complete: yes (20 of N=20)" in out


def test_spectrum_polymat_table(capsys):
    """Test the table layout with starred zeros"""
    code, out, _ = run(capsys, "spectrum", "f3c6", "--method", "polymat")

    assert code == EXIT_OK
    assert "spec(B(ζ^1))=spec(B(ζ^5))" in out
    assert out.count("0*") == 2
    assert "polymat spectrum: {4^[1], 2^[4], 1^[4], 0^[2], -1^[4], -2^[4], -4^[1]}" in out


def test_spectrum_direct_j42(capsys):
    """Test the oracle alone"""
    code, out, _ = run(capsys, "spectrum", "j42", "--method", "direct")

    assert code == EXIT_OK
    assert out.strip() == "direct spectrum: {4^[1], 0^[3], -2^[2]}"


def test_spectrum_json_j42(capsys):
    """Test the JSON document of a full comparison"""
    code, out, _ = run(capsys, "spectrum", "j42", "--method", "both", "--format", "json")
    document = json.loads(out)

    assert code == EXIT_OK
    assert document["comparison"]["verdict"] == "pass"
    assert document["polymat"]["complete"] is True
    assert document["polymat"]["N"] == 6
    assert len(document["direct"]) == 6
    assert [block["r"] for block in document["polymat"]["per_r"]] == [0, 1, 2, 3]


def test_spectrum_output_is_deterministic(capsys):
    """Test byte-identical output of repeated runs"""
    _, first, _ = run(capsys, "spectrum", "f3c6", "--method", "both", "--format", "json")
    _, second, _ = run(capsys, "spectrum", "f3c6", "--method", "both", "--format", "json")

    assert first == second


def test_spectrum_simple_mode_mismatch(capsys, tmp_path):
    """Test exit 3 when the simple-mode lift disagrees"""
    path = tmp_path / "pair.cvg"
    path.write_text(COARSE_PAIR, encoding="utf-8")
    code, out, _ = run(capsys, "spectrum", str(path), "--method", "both", "--mode", "simple")

    assert code == EXIT_MISMATCH
    assert "comparison: fail" in out


@pytest.mark.parametrize("name", ["f3c6", "j42", "c7"])
def test_verify_builtins(capsys, name):
    """Test that the builtins verify"""
    code, out, _ = run(capsys, "verify", name)

    assert code == EXIT_OK
    assert out.splitlines()[-1] == "result: pass"


def test_verify_simple_mode_fails(capsys, tmp_path):
    """Test exit 3 from the suite"""
    path = tmp_path / "pair.cvg"
    path.write_text(COARSE_PAIR, encoding="utf-8")
    code, out, _ = run(capsys, "verify", str(path), "--mode", "simple")

    assert code == EXIT_MISMATCH
    assert "FAIL  residuals" in out


def test_table(capsys):
    """Test the table subcommand"""
    code, out, _ = run(capsys, "table", "j42")

    assert code == EXIT_OK
    assert out.splitlines()[1].endswith(": 0, 0*")


def test_sweep_writes_report(capsys, tmp_path):
    """Test the JSON sweep report"""
    output = tmp_path / "sweep.json"
    code, out, _ = run(
        capsys, "sweep", "--seed", "1", "--trials", "20", "--max-m", "12", "--max-n", "5", "--output", str(output),
    )
    document = json.loads(output.read_text(encoding="utf-8"))

    assert code == EXIT_OK
    assert out == ""
    assert document["trials"] == 20
    assert document["multiplicity_pass"] == 20


def test_tol_environment_variable(capsys, monkeypatch):
    """Test FLIFT_TOL handling"""
    monkeypatch.setenv("FLIFT_TOL", "not-a-number")
    code, _, err = run(capsys, "spectrum", "j42")

    assert code == EXIT_INPUT
    assert "FLIFT_TOL" in err


def test_parser_defaults():
    """Test default options"""
    args = build_parser().parse_args(["spectrum", "f3c6"])

    assert args.mode == "multiplicity"
    assert args.method == "polymat"
    assert args.format == "text"
    assert build_parser().parse_args(["sweep"]).format == "json"
