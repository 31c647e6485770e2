import csv
import json

import pytest

from ssg.cli import main
from ssg.fixtures import FIG3_OPTIMAL, FIG3_SIGMA
from ssg.game import serialize_game


@pytest.fixture
def fig3_file(tmp_path, fig3):
    path = tmp_path / "fig3.json"
    path.write_bytes(serialize_game(fig3))
    return str(path)


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.mark.parametrize("algo", ["brute", "hk", "rp", "dfs"])
def test_solve_fig3(fig3_file, capsys, algo):
    assert main(["solve", "--algorithm", algo, fig3_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["algorithm"] == algo
    assert out["strategy"] == FIG3_OPTIMAL
    assert out["values"]["x1"] == "4/7"
    assert {out["values"][x] for x in ("x2", "x3", "x4", "x5")} == {"1"}


def test_solve_writes_stats(tmp_path, fig3_file):
    stats = tmp_path / "stats.csv"
    assert main(["solve", "--algorithm", "rp", "--stats", str(stats), fig3_file]) == 0
    (row,) = csv.DictReader(stats.open())
    assert row["algo"] == "rp" and row["n"] == "5" and row["N_total"] == "10"
    assert int(row["loop_iterations"]) <= int(row["bound_rp"])


def test_verify(tmp_path, fig3_file, capsys):
    assert main(["verify", fig3_file, write_json(tmp_path, "opt.json", FIG3_OPTIMAL)]) == 0
    assert capsys.readouterr().out.strip() == "optimal"
    assert main(["verify", fig3_file, write_json(tmp_path, "sigma.json", FIG3_SIGMA)]) == 1
    assert capsys.readouterr().out.strip() == "not optimal; switch set: x3, x4, x5"


@pytest.mark.parametrize(
    "strategy",
    [{"x1": "r3"}, {**FIG3_SIGMA, "x1": "x5"}, {**FIG3_SIGMA, "x9": "1"}, ["x1"]],
)
def test_verify_bad_strategy(tmp_path, fig3_file, capsys, strategy):
    assert main(["verify", fig3_file, write_json(tmp_path, "bad.json", strategy)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["solve", str(bad)]) == 2
    assert main(["solve", str(tmp_path / "missing.json")]) == 2
    assert main(["solve", "--algorithm", "simplex", str(bad)]) == 2
    assert main(["frobnicate"]) == 2
    invalid = write_json(tmp_path, "invalid.json", {"vertices": [
        {"id": "x", "kind": "max", "succ": ["s"]}, {"id": "s", "kind": "sink", "value": "1"},
    ]})
    assert main(["solve", invalid]) == 2
    assert "outdegree" in capsys.readouterr().err


def test_dfs_refuses_non_binary(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["generate", "--n-max", "3", "--degree", "3", "--n-random", "3", "-o", str(out)]) == 0
    assert main(["solve", "--algorithm", "dfs", str(out)]) == 2
    assert "binary" in capsys.readouterr().err


def test_generate_is_deterministic(tmp_path, capsys):
    args = ["generate", "--n-max", "5", "--n-min", "2", "--seed", "42", "--binary"]
    assert main(args) == 0
    first = capsys.readouterr().out
    path = tmp_path / "g.json"
    assert main(args + ["-o", str(path)]) == 0
    assert path.read_text() == first
    assert main(["solve", "--algorithm", "hk", str(path)]) == 0
    assert main(["generate", "--n-max", "1", "--n-random", "0", "--n-sinks", "1"]) == 2


def test_bench(tmp_path, capsys):
    config = tmp_path / "c.cfg"
    config.write_text("sizes = 2,3\ninstances = 2\nalgorithms = brute,rp\n")
    out = tmp_path / "out.csv"
    assert main(["bench", str(config), "-o", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 8 and {r["agree"] for r in rows} == {"true"}
    assert main(["bench", str(config)]) == 0
    assert capsys.readouterr().out.startswith("game_id,")
    config.write_text("sizes = 2\nflavour = mild\n")
    assert main(["bench", str(config)]) == 2
