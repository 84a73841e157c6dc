"""Command line interface: parsing, JSON payloads, and exit codes."""

import json
import subprocess
import sys

import pytest

from coxlen.cli import main, parse_element, parse_vector, parse_window_text
from coxlen.errors import ParseError
from coxlen.rootsys import root_system


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_parse_vector():
    assert parse_vector("(1,-1,0)") == (1, -1, 0)
    assert parse_vector(" ( 1/2 , -3 ) ")[0].denominator == 2
    for bad in ["1,2", "()", "(a,b)", "(1,2))"]:
        with pytest.raises(ParseError):
            parse_vector(bad)


def test_parse_window_text():
    assert parse_window_text("[4,2,0]").values == (4, 2, 0)
    for bad in ["4,2,0", "[]", "[1.5,2]", "[1,2,4]"]:
        with pytest.raises(ParseError):
            parse_window_text(bad)


def test_parse_element_grammar():
    rs = root_system("B2")
    t = parse_element(rs, "lambda=(1,1)")
    assert t.translation == (1, 1)
    w = parse_element(rs, "word=s1 s2")
    assert not w.is_identity()
    both = parse_element(rs, "lambda=(1,1); word=s1")
    assert both.translation != (0, 0)
    r = parse_element(rs, "refl(1,0) refl(1,0)")
    assert r.is_identity()
    for bad in ["", "word=s3", "word=x1", "foo=1", "refl(9,0)", "refl(1)"]:
        with pytest.raises(ParseError):
            parse_element(rs, bad)


def test_len_command_json(capsys):
    payload = run_json(
        capsys, "len", "--type", "B2", "--element", "lambda=(1,1)", "--json"
    )
    assert payload["type"] == "B2"
    assert (payload["e"], payload["d"]) == (0, 1)
    assert payload["length"] == 2
    assert payload["witness_roots"] == [["1", "1"]]


def test_len_command_verify(capsys):
    payload = run_json(
        capsys,
        "len", "--type", "B2", "--element", "lambda=(2,0); word=s1 s2",
        "--verify", "--json",
    )
    assert payload["oracle_agrees"]
    assert payload["oracle_length"] == payload["length"]


def test_len_command_text_output(capsys):
    code, out, _ = run(capsys, "len", "--type", "A2", "--element", "word=s1")
    assert code == 0
    assert "reflection length = 1" in out


def test_factor_command(capsys):
    payload = run_json(
        capsys, "factor", "--type", "B2", "--element", "lambda=(1,1)", "--json"
    )
    assert payload["length"] == 2
    assert len(payload["factors"]) == 2
    for f in payload["factors"]:
        assert set(f) == {"root", "level"}


def test_split_command(capsys):
    payload = run_json(
        capsys,
        "split", "--type", "B2", "--element", "lambda=(2,0); word=s1",
        "--json",
    )
    assert payload["translation_length"] + payload["elliptic_length"] >= 0
    assert len(payload["elliptic_factors"]) == payload["elliptic_length"]


def test_window_command(capsys):
    payload = run_json(capsys, "window", "--window", "[6,0,7,-1,3]", "--json")
    assert payload["n"] == 5
    assert payload["lambda"] == [1, -1, 1, -1, 0]
    assert payload["permutation"] == [1, 5, 2, 4, 3]
    assert payload["cycles"] == [[1], [2, 3, 5], [4]]
    assert payload["relative_nullity"] == 2
    assert payload["length"] == 4
    assert payload["good_origin"] == ["2/5", "2/5", "-3/5", "2/5", "-3/5"]


def test_nullity_command(capsys):
    payload = run_json(
        capsys, "nullity", "--vector", "(-3,-2,-2,-1,1,2,5)", "--verify", "--json"
    )
    assert payload["nullity"] == 3
    assert payload["oracle_agrees"]
    assert payload["proper_basic_null_blocks"] == 12
    assert payload["complex_vertices"] == 7
    assert payload["complex_edges"] == 7
    assert len(payload["maximal_cliques"]) == 3


def test_genfun_command(capsys):
    payload = run_json(
        capsys, "genfun", "--type", "B2", "--lambda", "(3,1)", "--json"
    )
    assert payload["polynomial"] == "3*t^2 + 4*s*t + s^2"
    assert payload["specialized"] == [0, 0, 3, 4, 1]
    classify = run_json(
        capsys, "genfun", "--type", "B2", "--classify", "1", "--json"
    )
    assert sum(c["points"] for c in classify["classes"]) == 9


def test_genfun_needs_an_input(capsys):
    code, _, err = run(capsys, "genfun", "--type", "B2")
    assert code == 2
    assert "error" in err


def test_render_command_stdout(capsys):
    code, out, _ = run(
        capsys,
        "render-svg", "--type", "B2", "--mode", "alcoves", "--radius", "1.5",
        "--out", "-",
    )
    assert code == 0
    assert out.startswith("<?xml")
    assert "<svg" in out and "</svg>" in out


def test_render_command_file(tmp_path, capsys):
    target = tmp_path / "b2.svg"
    code, out, _ = run(
        capsys,
        "render-svg", "--type", "B2", "--mode", "classes", "--radius", "1",
        "--out", str(target),
    )
    assert code == 0
    assert "wrote" in out
    assert target.read_text().startswith("<?xml")


def test_oracle_command(capsys):
    payload = run_json(
        capsys, "oracle", "--type", "B2", "--element", "lambda=(1,1)", "--json"
    )
    assert payload["length"] == 2
    assert payload["certified"]


def test_exit_code_2_on_bad_input(capsys):
    assert run(capsys, "len", "--type", "B2", "--element", "garbage=1")[0] == 2
    assert run(capsys, "len", "--type", "A 2x", "--element", "word=s1")[0] == 2
    assert run(capsys, "window", "--window", "[1,2,4]")[0] == 2
    # group membership failures are bad input as well
    assert run(capsys, "len", "--type", "B2", "--element", "lambda=(1,0)")[0] == 2
    assert run(capsys, "render-svg", "--type", "B2", "--radius", "-1",
               "--out", "-")[0] == 2


def test_exit_code_3_on_unsupported_type(capsys):
    assert run(capsys, "len", "--type", "E8", "--element", "word=s1")[0] == 3
    assert run(capsys, "len", "--type", "A9", "--element", "word=s1")[0] == 3
    assert run(capsys, "render-svg", "--type", "A3", "--out", "-")[0] == 3


def test_exit_code_4_on_budget(capsys):
    code, _, err = run(
        capsys,
        "split", "--type", "B2", "--element", "lambda=(2,0); word=s1",
        "--budget", "0",
    )
    assert code == 4
    assert "budget" in err.lower()


def test_budget_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("COXLEN_BUDGET", "0")
    code, _, _ = run(
        capsys, "split", "--type", "B2", "--element", "lambda=(2,0); word=s1"
    )
    assert code == 4
    monkeypatch.setenv("COXLEN_BUDGET", "not-a-number")
    code, _, err = run(
        capsys, "split", "--type", "B2", "--element", "lambda=(2,0); word=s1"
    )
    assert code == 2
    assert "COXLEN_BUDGET" in err
    # explicit --budget flag wins over the environment
    monkeypatch.setenv("COXLEN_BUDGET", "0")
    code, _, _ = run(
        capsys,
        "split", "--type", "B2", "--element", "lambda=(2,0); word=s1",
        "--budget", "100000",
    )
    assert code == 0


def test_entry_point_subprocess():
    out = subprocess.run(
        [sys.executable, "-m", "coxlen.cli", "len", "--type", "B2",
         "--element", "lambda=(1,1)", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["length"] == 2
    script = subprocess.run(
        ["coxlen", "len", "--type", "B2", "--element", "lambda=(1,1)", "--json"],
        capture_output=True, text=True,
    )
    assert script.returncode == 0
    assert json.loads(script.stdout)["length"] == 2
