import json
import logging

import pytest
from click.testing import CliRunner

from domwb.cli.main import cli

_log = logging.getLogger(__name__)


@pytest.fixture
def runner():
    return CliRunner(echo_stdin=True)


@pytest.fixture
def diamond_file(tmp_path):
    path = tmp_path / "diamond.json"
    path.write_text(
        json.dumps(
            {
                "elements": ["bot", "a", "b", "top"],
                "covers": [["bot", "a"], ["bot", "b"], ["a", "top"], ["b", "top"]],
            }
        )
    )
    return str(path)


@pytest.fixture
def broken_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(
        json.dumps(
            {
                "elements": ["x", "y", "z"],
                "leq": [[1, 1, 0], [0, 1, 1], [0, 0, 1]],
            }
        )
    )
    return str(path)


def invoke(runner, args):
    result = runner.invoke(cli, args=args, catch_exceptions=True)
    _log.info(result.output)
    return result


def test_version(runner):
    result = invoke(runner, ["--version"])
    assert result.exit_code == 0
    assert "version" in result.output


def test_dyadic_val(runner):
    result = invoke(runner, ["dyadic", "val", "r(l(c))"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"num": 1, "den": 4}


def test_dyadic_val_syntax_error(runner):
    result = invoke(runner, ["dyadic", "val", "r(x)"])
    assert result.exit_code == 2


def test_dyadic_check(runner):
    result = invoke(runner, ["dyadic", "check", "--depth", "5"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["passed"]
    assert payload["count"] == 63


def test_output_is_deterministic(runner):
    first = invoke(runner, ["dyadic", "check", "--depth", "3"])
    second = invoke(runner, ["dyadic", "check", "--depth", "3"])
    assert first.output == second.output


def test_text_format(runner):
    result = invoke(runner, ["dyadic", "val", "--format", "text", "l(c)"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["den: 2", "num: -1"]


def test_tower_check(runner):
    result = invoke(runner, ["tower", "check", "--levels", "2", "--tab-limit", "2"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["passed"]
    assert payload["sizes"] == [2, 3, 10]


def test_tower_build_to_file(runner, tmp_path):
    output = str(tmp_path / "tower" / "tower.json")
    result = invoke(
        runner, ["tower", "build", "--levels", "1", "--tab-limit", "1", "--output", output]
    )
    assert result.exit_code == 0
    with open(output) as file:
        dump = json.load(file)
    assert [level["size"] for level in dump["levels"]] == [2, 3]


def test_tower_build_over_budget(runner, monkeypatch):
    monkeypatch.setenv("DOMWB_BUDGET", "5")
    result = invoke(runner, ["tower", "build", "--levels", "2", "--tab-limit", "2"])
    assert result.exit_code == 2


def test_poset_waybelow_missing_file(runner):
    result = invoke(runner, ["poset", "waybelow", "missing.json", "a", "b"])
    assert result.exit_code == 2
    assert "does not exist" in result.output


def test_poset_waybelow(runner, diamond_file):
    result = invoke(runner, ["poset", "waybelow", diamond_file, "a", "top"])
    assert result.exit_code == 0
    assert json.loads(result.output)["way_below"] is True

    result = invoke(runner, ["poset", "waybelow", diamond_file, "a", "c"])
    assert result.exit_code == 2


def test_poset_check(runner, diamond_file):
    result = invoke(runner, ["poset", "check", diamond_file])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["least"] == "bot"
    assert payload["compact"] == ["bot", "a", "b", "top"]


def test_poset_check_reports_counterexamples(runner, broken_file):
    result = invoke(runner, ["poset", "check", broken_file])
    assert result.exit_code == 1
    payload = json.loads(result.output)
    assert payload["passed"] is False
    assert payload["axioms"]["transitive"]["witness"] == [0, 1, 2]


def test_poset_export_dot(runner, diamond_file, tmp_path):
    result = invoke(runner, ["poset", "export-dot", diamond_file])
    assert result.exit_code == 0
    assert result.output.startswith("digraph poset {")

    output = str(tmp_path / "diamond.dot")
    result = invoke(runner, ["poset", "export-dot", diamond_file, "--output", output])
    assert result.exit_code == 0
    with open(output) as file:
        assert "n0 -> n1;" in file.read()


def test_lam_eval_omega(runner):
    result = invoke(runner, ["lam", "eval", "--levels", "2", "--tab-limit", "2", "Omega"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["components"][:2] == ["bot", "[bot,bot]"]
    assert payload["stabilized"] is True


def test_lam_eval_redex_is_stable_below_the_top(runner):
    result = invoke(
        runner, ["lam", "eval", "--levels", "2", "--tab-limit", "2", r"(\x.x) (\z.z)"]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["stabilized"] is True


def test_lam_eval_term_text(runner):
    result = invoke(
        runner, ["lam", "eval", "--levels", "1", "--tab-limit", "1", r"(\x.x x)(\x.x x)"]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["components"] == ["bot", "[bot,bot]"]


@pytest.mark.parametrize("term", [r"\x.y", r"\x.", "(x"])
def test_lam_eval_rejects_bad_terms(runner, term):
    result = invoke(runner, ["lam", "eval", "--levels", "1", term])
    assert result.exit_code == 2


def test_lam_compare(runner):
    result = invoke(
        runner,
        ["lam", "compare", "--levels", "2", "--tab-limit", "2", r"(\x.x) (\y.y)", r"\y.y"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["verdict"] == "leq_at_N"
    assert payload["stabilized"] is True


def test_idl_waybelow(runner):
    result = invoke(runner, ["idl", "waybelow", "--basis", "dyadic", "--depth", "3", "c", "r(c)"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["way_below"] == {"truth": "true", "witness": "r(l(c))"}

    result = invoke(runner, ["idl", "waybelow", "--depth", "3", "r(c)", "c"])
    assert json.loads(result.output)["way_below"]["truth"] == "false"


def test_idl_check_basis(runner, tmp_path):
    result = invoke(runner, ["idl", "check-basis", "--basis", "dyadic", "--depth", "3"])
    assert result.exit_code == 0

    chain = tmp_path / "chain.json"
    chain.write_text(json.dumps({"elements": ["0", "1"], "covers": [["0", "1"]]}))
    result = invoke(runner, ["idl", "check-basis", "--basis", "strict", "--poset-file", str(chain)])
    assert result.exit_code == 1
    assert json.loads(result.output)["checks"]["nullary_interpolation"] is False

    result = invoke(runner, ["idl", "check-basis", "--basis", "strict"])
    assert result.exit_code == 2


def test_lift_free_ext(runner, tmp_path):
    map_file = tmp_path / "map.json"
    map_file.write_text(
        json.dumps(
            {
                "carrier": ["a", "b"],
                "codomain": {"elements": ["0", "1", "2"], "covers": [["0", "1"], ["1", "2"]]},
                "map": {"a": "1", "b": "2"},
            }
        )
    )
    result = invoke(runner, ["lift", "free-ext", str(map_file)])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["passed"]
    assert payload["extension"] == {"bot": "0", "eta(a)": "1", "eta(b)": "2"}
