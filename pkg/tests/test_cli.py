##
## command-line interface test suite
##

import json

import pytest
from click.testing import CliRunner

from orbisnake.cli import main
from orbisnake.fixtures import (BMATRIX_LEFT, BMATRIX_PENDING, BMATRIX_RIGHT,
                                example_triangulation, gamma1)
from orbisnake.orbifold import descriptor_to_json, triangulation_to_json


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def gamma1_file(tmp_path):
    doc = {"schema_version": 1,
           "triangulation": triangulation_to_json(example_triangulation()),
           "curve": descriptor_to_json(gamma1())}
    path = tmp_path / "gamma1.json"
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def bmatrix_file(tmp_path):
    doc = {"schema_version": 1,
           "rows": [list(r) for r in BMATRIX_LEFT],
           "pending": list(BMATRIX_PENDING)}
    path = tmp_path / "b.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_expand_canonical(runner, gamma1_file):
    res = runner.invoke(main, ["expand", gamma1_file])
    assert res.exit_code == 0
    assert res.output.strip() == \
        "x1^-1*x2^2*y1^2 + L5*x1^-1*x2*x3*y1 + x1^-1*x3^2"


def test_expand_latex(runner, gamma1_file):
    res = runner.invoke(main, ["expand", gamma1_file, "--format", "latex"])
    assert res.exit_code == 0
    assert "\\lambda_{5}" in res.output


def test_expand_json(runner, gamma1_file):
    res = runner.invoke(main, ["expand", gamma1_file, "--format", "json"])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["schema_version"] == 1
    assert data["canonical"].startswith("x1^-1")


def test_expand_malformed_winding_exits_2(runner, tmp_path):
    doc = {"schema_version": 1,
           "triangulation": triangulation_to_json(example_triangulation()),
           "curve": descriptor_to_json(gamma1())}
    doc["curve"]["word"][0]["winding"] = 99
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    res = runner.invoke(main, ["expand", str(path)])
    assert res.exit_code == 2


def test_expand_unreadable_file_exits_2(runner, tmp_path):
    res = runner.invoke(main, ["expand", str(tmp_path / "missing.json")])
    assert res.exit_code == 2


def test_expand_universal_poset_dot(runner, tmp_path):
    path = tmp_path / "ug3.json"
    path.write_text(json.dumps({"schema_version": 1, "universal": {"n": 3}}))
    res = runner.invoke(main, ["expand", str(path), "--format", "dot",
                               "--poset"])
    assert res.exit_code == 0
    assert res.output.startswith("digraph")
    nodes = [line for line in res.output.splitlines()
             if "label=" in line and "->" not in line]
    assert len(nodes) == 8


def test_mutate_fixture(runner, bmatrix_file):
    res = runner.invoke(main, ["mutate", bmatrix_file, "2"])
    assert res.exit_code == 0
    assert json.loads(res.output)["rows"] == [list(r) for r in BMATRIX_RIGHT]


def test_mutate_empty_and_involution(runner, bmatrix_file):
    plain = runner.invoke(main, ["mutate", bmatrix_file])
    twice = runner.invoke(main, ["mutate", bmatrix_file, "1", "1"])
    assert plain.exit_code == 0 and twice.exit_code == 0
    assert plain.output == twice.output
    assert json.loads(plain.output)["rows"] == [list(r) for r in BMATRIX_LEFT]


def test_mutate_bad_index_exits_2(runner, bmatrix_file):
    res = runner.invoke(main, ["mutate", bmatrix_file, "7"])
    assert res.exit_code == 2


@pytest.mark.parametrize("suite,args", [
    ("arcsgraphs", ["--fuzz", "15", "--seed", "3"]),
    ("lift", ["--fuzz", "10", "--seed", "3"]),
    ("universal", ["--n", "3"]),
    ("skein", []),
    ("mutation", ["--fuzz", "30"]),
    ("chebyshev", []),
])
def test_verify_suites_pass(runner, suite, args):
    res = runner.invoke(main, ["verify", suite] + args)
    assert res.exit_code == 0, res.output
    assert "FAIL" not in res.output


def test_verify_is_deterministic(runner):
    a = runner.invoke(main, ["verify", "arcsgraphs", "--fuzz", "10",
                             "--seed", "11"])
    b = runner.invoke(main, ["verify", "arcsgraphs", "--fuzz", "10",
                             "--seed", "11"])
    assert a.output == b.output


def test_verify_unknown_suite_rejected(runner):
    res = runner.invoke(main, ["verify", "nonsense"])
    assert res.exit_code != 0
