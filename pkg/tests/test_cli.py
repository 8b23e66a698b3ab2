# File: tests/test_cli.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import csv
import json

import pytest

from src import router
from src.graph import edges_between, load_graph
from src.helpers.commands import EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS
from src.helpers.dataclass import SWEEP_COLUMNS, RunRecord


def gen(tmp_path, model, n, *extra):
    out = tmp_path / f"{model}-{n}.txt"
    assert router.run(["gen", "--model", model, "--n", str(n), "--out", str(out), *extra]) == EXIT_OK
    return out


def records(path):
    return [RunRecord.model_validate_json(line) for line in path.read_text().splitlines()]


class TestGen:
    @pytest.mark.parametrize("model, n, edges", [("complete", 4, 6), ("cycle", 8, 8)])
    def test_edge_counts(self, tmp_path, model, n, edges):
        g, comments = load_graph(gen(tmp_path, model, n))
        assert g.edge_count == edges
        assert comments[0] == f"model={model} n={n} seed=0"

    def test_gnp_with_p_one(self, tmp_path):
        g, _ = load_graph(gen(tmp_path, "gnp", 100, "--p", "1.0"))
        assert g.edge_count == 4950

    def test_invalid_parameters(self, tmp_path):
        assert router.run(["gen", "--model", "cycle", "--n", "2", "--out", str(tmp_path / "c.txt")]) == EXIT_USAGE

    def test_unknown_model(self, tmp_path):
        assert router.run(["gen", "--model", "torus", "--n", "9", "--out", str(tmp_path / "t.txt")]) == EXIT_USAGE


class TestRun:
    def test_path_keeps_every_edge(self, tmp_path):
        graph = gen(tmp_path, "path", 32)
        out = tmp_path / "runs.jsonl"
        assert router.run(["run", "--graph", str(graph), "--k", "1", "--out", str(out)]) == EXIT_OK
        (record,) = records(out)
        assert record.results.size == 31
        assert record.results.max_stretch == 1
        assert record.params.h == 5
        assert record.graph.model == "path"
        assert record.results.wall_time is None

    def test_distributed_mode(self, tmp_path):
        graph = gen(tmp_path, "complete", 16)
        out = tmp_path / "runs.jsonl"
        args = ["run", "--graph", str(graph), "--h", "4", "--seed", "7", "--mode", "distributed", "--out", str(out)]
        assert router.run(args) == EXIT_OK
        (record,) = records(out)
        assert record.mode == "distributed"
        assert record.results.counters.rounds_elapsed == 103
        assert record.results.verification["protocol_ok"] is True

    def test_records_append_and_reproduce(self, tmp_path):
        graph = gen(tmp_path, "gnp", 40, "--p", "0.2", "--seed", "5")
        out = tmp_path / "runs.jsonl"
        args = ["run", "--graph", str(graph), "--k", "2", "--seed", "3", "--out", str(out)]
        assert router.run(args) == EXIT_OK
        assert router.run(args) == EXIT_OK
        first, second = out.read_text().splitlines()
        assert first == second
        echoed = json.loads(first)
        assert set(echoed) == {"params", "graph", "mode", "results"}
        assert echoed["params"]["seed"] == 3

    def test_csv_row(self, tmp_path):
        graph = gen(tmp_path, "cycle", 8)
        out = tmp_path / "runs.csv"
        assert router.run(["run", "--graph", str(graph), "--format", "csv", "--out", str(out)]) == EXIT_OK
        assert router.run(["run", "--graph", str(graph), "--format", "csv", "--out", str(out)]) == EXIT_OK
        rows = list(csv.reader(out.read_text().splitlines()))
        assert rows[0] == list(SWEEP_COLUMNS)
        assert len(rows) == 3
        assert rows[1][SWEEP_COLUMNS.index("|S|")] == "8"

    def test_missing_graph(self, tmp_path):
        assert router.run(["run", "--graph", str(tmp_path / "nothing.txt")]) == EXIT_USAGE

    def test_bad_parameters(self, tmp_path):
        graph = gen(tmp_path, "cycle", 8)
        assert router.run(["run", "--graph", str(graph), "--h", "0"]) == EXIT_USAGE
        assert router.run(["run", "--graph", str(graph), "--mode", "gossip"]) == EXIT_USAGE


class TestSweep:
    def test_rows_per_grid_cell(self, tmp_path):
        out = tmp_path / "sweep.csv"
        args = ["sweep", "--model", "complete", "--n", "16,32", "--seeds", "0,1", "--out", str(out)]
        assert router.run(args) == EXIT_OK
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 4
        assert tuple(rows[0]) == SWEEP_COLUMNS
        assert [int(row["n"]) for row in rows] == [16, 16, 32, 32]
        assert all(int(row["violations"]) == 0 for row in rows)
        assert all(row["mode"] == "centralized" for row in rows)

    def test_append(self, tmp_path):
        out = tmp_path / "sweep.csv"
        base = ["sweep", "--model", "cycle", "--n", "8", "--seeds", "0", "--out", str(out)]
        assert router.run(base) == EXIT_OK
        assert router.run([*base, "--mode", "distributed", "--append"]) == EXIT_OK
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert [row["mode"] for row in rows] == ["centralized", "distributed"]
        assert int(rows[1]["rounds"]) > 0

    def test_bad_grid(self, tmp_path):
        args = ["sweep", "--model", "complete", "--n", "16,x", "--out", str(tmp_path / "s.csv")]
        assert router.run(args) == EXIT_USAGE

    def test_trend_budget_scale(self, tmp_path):
        out = tmp_path / "sweep.csv"
        args = ["sweep", "--model", "cycle", "--n", "16,64", "--seeds", "0", "--budget-scale", "trend,1"]
        assert router.run([*args, "--out", str(out)]) == EXIT_OK
        rows = list(csv.DictReader(out.read_text().splitlines()))
        scales = [(int(row["n"]), float(row["budget_scale"])) for row in rows]
        assert scales == [(16, pytest.approx(4 / (16 * 64))), (16, 1.0), (64, pytest.approx(4 / (16 * 216))), (64, 1.0)]


class TestBroadcast:
    @pytest.fixture
    def recorded(self, tmp_path):
        graph = gen(tmp_path, "gnp", 40, "--p", "0.2", "--seed", "5")
        out = tmp_path / "runs.jsonl"
        assert router.run(["run", "--graph", str(graph), "--out", str(out)]) == EXIT_OK
        return graph, out

    def test_complete_over_recorded_spanner(self, tmp_path, recorded):
        graph, record = recorded
        out = tmp_path / "flood.jsonl"
        args = ["broadcast", "--graph", str(graph), "--record", str(record), "--t", "2", "--out", str(out)]
        assert router.run(args) == EXIT_OK
        outcome = json.loads(out.read_text())
        assert outcome["missing"] == []
        assert outcome["rounds"] == 10

    def test_radius_zero(self, tmp_path, recorded):
        graph, record = recorded
        out = tmp_path / "flood.jsonl"
        args = ["broadcast", "--graph", str(graph), "--record", str(record), "--t", "0", "--out", str(out)]
        assert router.run(args) == EXIT_OK
        assert json.loads(out.read_text())["messages"] == 0

    def test_alpha_override(self, tmp_path):
        graph = gen(tmp_path, "path", 6)
        record = tmp_path / "runs.jsonl"
        assert router.run(["run", "--graph", str(graph), "--out", str(record)]) == EXIT_OK
        out = tmp_path / "flood.jsonl"
        args = ["broadcast", "--graph", str(graph), "--record", str(record), "--t", "1", "--alpha", "1"]
        assert router.run([*args, "--out", str(out)]) == EXIT_OK
        outcome = json.loads(out.read_text())
        assert (outcome["alpha"], outcome["rounds"]) == (1, 1)

    def test_record_for_another_graph(self, tmp_path, recorded):
        _, record = recorded
        other = gen(tmp_path, "cycle", 8)
        args = ["broadcast", "--graph", str(other), "--record", str(record), "--t", "1"]
        assert router.run(args) == EXIT_USAGE

    def test_record_index_out_of_range(self, tmp_path, recorded):
        graph, record = recorded
        args = ["broadcast", "--graph", str(graph), "--record", str(record), "--index", "4", "--t", "1"]
        assert router.run(args) == EXIT_USAGE

    def test_in_simulation_spanner(self, tmp_path):
        graph = gen(tmp_path, "cycle", 8)
        out = tmp_path / "flood.jsonl"
        args = ["broadcast", "--graph", str(graph), "--gamma", "1", "--t", "1", "--out", str(out)]
        assert router.run(args) == EXIT_OK
        assert json.loads(out.read_text())["flood"]["missing"] == []

    def test_incomplete_flood_exits_with_violations(self, tmp_path):
        graph = gen(tmp_path, "cycle", 8)
        record = tmp_path / "runs.jsonl"
        assert router.run(["run", "--graph", str(graph), "--out", str(record)]) == EXIT_OK
        (kept,) = records(record)
        g, _ = load_graph(graph)
        dropped = edges_between(g, 0, 7)
        kept.results.spanner_edges = [e for e in kept.results.spanner_edges if e not in dropped]
        record.write_text(kept.model_dump_json(by_alias=True) + "\n")

        out = tmp_path / "flood.jsonl"
        args = ["broadcast", "--graph", str(graph), "--record", str(record), "--t", "1", "--alpha", "1"]
        assert router.run([*args, "--out", str(out)]) == EXIT_VIOLATIONS
        outcome = json.loads(out.read_text())
        assert sorted(tuple(pair) for pair in outcome["missing"]) == [(0, 7), (7, 0)]

    def test_needs_a_spanner(self, tmp_path):
        graph = gen(tmp_path, "cycle", 8)
        assert router.run(["broadcast", "--graph", str(graph), "--t", "1"]) == EXIT_USAGE


def test_no_command():
    assert router.run([]) == EXIT_USAGE


def test_unknown_flag():
    assert router.run(["run", "--graph", "g.txt", "--colour", "blue"]) == EXIT_USAGE


def test_every_command_is_registered():
    router.load_plugins()
    assert set(router.handlers) == {"gen", "run", "sweep", "broadcast"}


def test_version(capsys):
    with pytest.raises(SystemExit) as exited:
        router.run(["--version"])
    assert exited.value.code == 0
    assert capsys.readouterr().out.startswith("spansim 0.4.0")
