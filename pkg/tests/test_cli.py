import io
import json
import subprocess
import sys

import jsonschema
import pytest

from hallpuzzle.cli import EXIT_DISAGREE, EXIT_OK, EXIT_USAGE, run
from hallpuzzle.puzzles import PUZZLE_SCHEMA


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_unbalanced_triple_prints_zero():
    code, out = call("hall", "--lambda", "2", "--mu", "1", "--nu", "3")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "0"


def test_validate_hall_sweep():
    code, out = call("validate", "--max-weight", "6", "--kind", "hall")
    assert code == EXIT_OK
    assert "hall: 1110 triples, 0 disagreements" in out


def test_hall_value_and_routes():
    code, out = call("hall", "--lambda", "4,1,1,1", "--mu", "3,1,1,0", "--nu", "2")
    assert (code, out.strip()) == (EXIT_OK, "1 - t^3")
    code, out = call("hall", "--lambda", "3,2,1", "--mu", "2,1,0", "--nu", "2,1", "--route", "ct,oracle")
    assert out.strip() == "2 + t - t^2"


def test_json_output():
    code, out = call("inv-kostka", "--lambda", "1,1,1", "--mu", "0,0,0", "--nu", "2,1", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["agree"] and data["routes"]["puzzle"] == "-t - t^2"


def test_lr_trace_lists_puzzles():
    code, out = call("lr", "--lambda", "4,4,2,1", "--mu", "3,3,1,0", "--nu", "2,1,1,0", "--trace")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "2"


def test_hall_trace_reports_frame():
    code, out = call("hall", "--lambda", "3,2,1", "--mu", "2,1,0", "--nu", "2,1", "--trace")
    assert code == EXIT_OK
    assert "28 puzzles" in out


@pytest.mark.parametrize("argv", [
    ["hall", "--lambda", "1,2", "--mu", "1", "--nu", "2"],
    ["hall", "--lambda", "2", "--mu", "1"],
    ["hall", "--lambda", "2", "--mu", "1", "--nu", "1", "--route", "magic"],
    ["frobnicate"],
    ["puzzles", "--variant", "hall", "--lambda", "1", "--mu", "2,1", "--nu", "1"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_puzzles_ascii_and_json():
    code, out = call("puzzles", "--variant", "hall", "--target", "--lambda", "4,1,1,1",
                     "--mu", "3,1,1,0", "--nu", "2")
    assert code == EXIT_OK
    assert "count 4" in out
    assert ":|G#g:.:G#g:   r=3" in out
    code, out = call("puzzles", "--variant", "kostka", "--target", "--lambda", "1,1,1",
                     "--mu", "0,0,0", "--nu", "2,1", "--render", "json")
    data = json.loads(out)
    assert data["summary"]["count"] == 12
    for p in data["puzzles"]:
        jsonschema.validate(p, PUZZLE_SCHEMA)


@pytest.mark.parametrize("variant", ["rt", "kt"])
def test_lr_puzzle_variants(variant):
    code, out = call("puzzles", "--variant", variant, "--lambda", "4,4,2,1", "--mu", "3,3,1,0",
                     "--nu", "2,1,1,0", "--trace")
    assert code == EXIT_OK
    assert "count 2" in out
    assert "lattice configuration 2" in out


def test_literal_flag_changes_weights():
    args = ["puzzles", "--variant", "hall", "--target", "--lambda", "4", "--mu", "3", "--nu", "1"]
    _, orbit = call(*args)
    _, literal = call(*args, "--literal")
    assert orbit.splitlines()[0] != literal.splitlines()[0]


def test_check_models():
    code, out = call("check-models", "--cutoff", "1")
    assert code == EXIT_OK
    assert "trivial action: ok" in out


def test_validate_json():
    code, out = call("validate", "--max-weight", "3", "--kind", "all", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["ok"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hallpuzzle", "lr", "--lambda", "2,1",
                           "--mu", "1", "--nu", "1,1"], capture_output=True, text=True)
    assert proc.returncode == EXIT_OK
    assert proc.stdout.strip() == "1"


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_USAGE, EXIT_DISAGREE}) == 3
