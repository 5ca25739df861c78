import json
import logging
from types import SimpleNamespace

import pytest

from cli.router import CommandRouter
from main import cli_router, main
from services.pell import pell_service

E1 = ["1", "0", "-2", "-6", "8", "0"]
E2 = ["1", "2", "-2", "0", "-6", "-4"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_classify_la2(capsys):
    code, doc = run_json(capsys, "classify", *E1)
    assert code == 0
    assert doc["command"] == "classify"
    assert doc["result"]["verdict"] == "LA2"
    assert doc["result"]["j"] == "1"
    assert doc["input"] == {"a": "1", "b": "0", "c": "-2", "d": "-6", "e": "8", "f": "0"}


def test_classify_not_la2(capsys):
    code, doc = run_json(capsys, "classify", "1", "1", "-2", "-6", "8", "0")
    assert code == 2
    assert doc["result"]["verdict"] == "NotLA2"
    assert "(iii)" in [failure["condition"] for failure in doc["result"]["failed_conditions"]]


def test_classify_content_above_one(capsys):
    code, doc = run_json(capsys, "classify", "2", "0", "-2", "-6", "8", "0")
    assert code == 2
    assert doc["result"]["content"] == "2"


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "0", "0", "-2", "-6", "8", "0"],
        ["classify", "1", "0", "-2"],
        ["classify", "1", "0", "x", "-6", "8", "0"],
        ["classify"],
        ["nonsense"],
        ["count", *E1],
        ["count", *E1, "--x", "-1"],
        ["count", *E1, "--x", "abc"],
    ],
)
def test_parse_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_coefficient_sources(capsys, tmp_path):
    path = tmp_path / "eq.json"
    path.write_text(json.dumps({"a": 1, "b": "0", "c": -2, "d": -6, "e": 8, "f": 0}))
    assert run_json(capsys, "classify", "--input", str(path))[0] == 0
    assert run_json(capsys, "classify", "--coeffs", "1,0,-2,-6,8,0")[0] == 0
    assert run(capsys, "classify", *E1, "--coeffs", "1,0,-2,-6,8,0")[0] == 1


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", *E1)
    assert code == 0
    assert out.strip() == "ũ² − 2ṽ² = 1, ũ = u − 3, ṽ = v − 2"
    code, doc = run_json(capsys, "reduce", *E2)
    assert doc["result"]["description"] == "ũ² − 3ṽ² = 1, ũ = u + v, ṽ = v + 1"
    assert doc["result"]["lambda"] == "1"


def test_reduce_other_class_warns(capsys):
    code, doc = run_json(capsys, "reduce", "1", "0", "-2", "-2", "8", "0")
    assert code == 0
    assert doc["result"]["description"].startswith("ũ² − 2ṽ² = −7")
    assert any("only Z(1)" in warning for warning in doc["warnings"])


def test_reduce_non_la2_exit_two(capsys):
    code, doc = run_json(capsys, "reduce", "1", "1", "-2", "-6", "8", "0")
    assert code == 2
    assert doc["error"]["type"] == "ClassificationError"
    assert doc["error"]["report"]["verdict"] == "NotLA2"


def test_thresholds(capsys):
    code, doc = run_json(capsys, "thresholds", *E1)
    assert code == 0
    assert doc["result"]["L"] == "34"
    assert doc["result"]["M"] == {"1": "34", "2": "28", "3": "24", "4": "30"}
    assert doc["result"]["branches"][0]["P"] == "1 + √2"
    code, out, _ = run(capsys, "thresholds", *E2)
    assert "L = 17" in out


def test_count(capsys):
    code, doc = run_json(capsys, "count", *E1, "--x", "34")
    assert code == 0
    assert doc["result"]["count"] == "10"
    assert doc["result"]["source"] == "formula"
    assert run_json(capsys, "count", *E1, "--x", "174.9")[1]["result"]["count"] == "14"


def test_count_below_l(capsys):
    code, doc = run_json(capsys, "count", *E1, "--x", "33")
    assert code == 3
    assert doc["error"]["threshold"] == "34"
    code, doc = run_json(capsys, "count", *E1, "--x", "20")
    assert code == 3


def test_count_fallback_oracle(capsys):
    code, doc = run_json(capsys, "count", *E1, "--x", "33", "--fallback-oracle")
    assert code == 0
    assert doc["result"]["count"] == "9"
    assert doc["warnings"] == ["below L: brute force used"]
    code, doc = run_json(capsys, "count", *E1, "--x", "20", "--fallback-oracle")
    assert doc["result"]["count"] == "6"


def test_count_fallback_with_workers(capsys, monkeypatch, fresh_settings):
    monkeypatch.setenv("LA2_ORACLE_WORKERS", "3")
    code, doc = run_json(capsys, "count", *E1, "--x", "20", "--fallback-oracle")
    assert code == 0
    assert doc["result"]["count"] == "6"


def test_count_other_class_exit_two(capsys):
    code, _ = run_json(capsys, "count", "1", "0", "-2", "-2", "8", "0", "--x", "100")
    assert code == 2


def test_enumerate(capsys):
    code, doc = run_json(capsys, "enumerate", *E2, "--x", "17")
    assert code == 0
    solutions = [tuple(int(c) for c in point) for point in doc["result"]["solutions"]]
    assert (12, -5) in solutions
    assert solutions == sorted(solutions)
    assert len(solutions) == 10


def test_verify(capsys):
    code, doc = run_json(capsys, "verify", *E1, "--x-range", "34..60")
    assert code == 0
    assert doc["result"]["all_match"] is True
    assert len(doc["result"]["reports"]) == 27
    assert "timing" in doc

    code, doc = run_json(capsys, "verify", *E2, "--x", "17")
    assert code == 0 and doc["result"]["reports"][0]["match"] is True

    code, doc = run_json(capsys, "verify", *E1, "--x", "33")
    assert code == 0
    report = doc["result"]["reports"][0]
    assert report["applicable"] is False
    assert report["oracle_count"] == "9"


def test_generate_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--lambda", "1", "--tau", "3", "--p", "1", "--q", "0", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"] == {"a": "1", "b": "2", "c": "-2", "d": "0", "e": "-6", "f": "-4"}

    path = tmp_path / "generated.json"
    path.write_text(out)
    code, classified = run_json(capsys, "classify", "--input", str(path))
    assert code == 0
    assert classified["result"]["j"] == "1"


def test_generate_rejects_square_tau(capsys):
    code, _, _ = run(capsys, "generate", "--lambda", "0", "--tau", "4", "--p", "0", "--q", "0")
    assert code == 1


def test_pell(capsys):
    code, doc = run_json(capsys, "pell", "--tau", "61")
    assert code == 0
    assert doc["result"]["fundamental"] == {"alpha": "1766319049", "beta": "226153980"}
    code, doc = run_json(capsys, "pell", "--tau", "7", "--terms", "2")
    assert doc["result"]["period"] == ["1", "1", "1", "4"]
    assert doc["result"]["sequence"] == [{"m": "1", "u": "8", "v": "3"}, {"m": "2", "u": "127", "v": "48"}]


def test_json_output_is_deterministic(capsys):
    first = run(capsys, "thresholds", *E1, "--json")[1]
    second = run(capsys, "thresholds", *E1, "--json")[1]
    assert first == second


def test_reduce_warning_is_reported_once(capsys, caplog):
    with caplog.at_level(logging.DEBUG, logger="la2"):
        code, _, err = run(capsys, "reduce", "1", "0", "-2", "-2", "8", "0")
    assert code == 0
    assert err.count("only Z(1)") == 1
    assert not [record for record in caplog.records if record.levelno >= logging.WARNING]


def test_count_table_shows_branch_constants(capsys):
    code, out, _ = run(capsys, "count", *E1, "--x", "34")
    assert code == 0
    header = out.splitlines()[1]
    for column in ("P_l", "Q_l", "R_l", "K", "m range"):
        assert column in header
    assert "1 + √2" in out


def test_unserializable_result_exits_four(capsys, monkeypatch):
    broken = SimpleNamespace(alpha=float("nan"), beta=1.0, tau=7)
    monkeypatch.setattr(pell_service, "fundamental_solution", lambda tau: broken)
    code, doc = run_json(capsys, "pell", "--tau", "7", "--terms", "1")
    assert code == 4
    assert doc["error"]["type"] == "ConsistencyError"
    assert doc["result"] is None


def test_router_collects_included_commands():
    root = CommandRouter()
    root.include_router(cli_router)
    names = [command.name for command in root.commands]
    assert names == ["classify", "reduce", "generate", "thresholds", "count", "enumerate", "verify", "pell"]
