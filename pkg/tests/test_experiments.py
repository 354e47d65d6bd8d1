import json

import pytest

from antclust.aco import AcoParams
from antclust.errors import ConfigurationError
from antclust.experiments import (
    Aggregate,
    ExperimentResult,
    ExperimentSpec,
    RunRow,
    export,
    export_aggregates_csv,
    export_json,
    export_rows_csv,
    load_result_json,
    load_spec,
    run,
)


def tiny_spec(**overrides):
    defaults = dict(
        node_counts=(12,),
        ranges=(120.0, 250.0),
        area_side=400.0,
        seeds=(0, 1),
        algorithms=("aco", "lic", "hd", "kconid", "wca", "greedy", "exact"),
        aco=AcoParams(ants=5),
    )
    defaults.update(overrides)
    return ExperimentSpec(**defaults)


class TestSpecValidation:
    def test_empty_seeds(self):
        with pytest.raises(ConfigurationError, match="seeds"):
            tiny_spec(seeds=()).validate()

    def test_unknown_algorithm(self):
        with pytest.raises(ConfigurationError, match="unknown algorithm"):
            tiny_spec(algorithms=("simulated-annealing",)).validate()

    def test_bad_node_count(self):
        with pytest.raises(ConfigurationError, match="node_counts"):
            tiny_spec(node_counts=(0,)).validate()

    def test_defaults_are_the_benchmark_grid(self):
        spec = ExperimentSpec()
        spec.validate()
        assert spec.node_counts == (50, 100, 200, 300, 400)
        assert spec.ranges == (200.0, 300.0, 400.0)
        assert spec.area_side == 1000.0
        assert len(spec.seeds) >= 10
        assert spec.aco.alpha == 9 and spec.aco.beta == 1 and spec.aco.ants == 20


class TestRun:
    def test_all_algorithms_small_grid(self):
        result = run(tiny_spec())
        assert len(result.rows) == 7 * 1 * 2 * 2
        assert all(r.ok for r in result.rows)
        assert all(r.head_count >= 1 for r in result.rows)
        # rows come out sorted by (algorithm, n, range, seed)
        assert [r.key for r in result.rows] == sorted(r.key for r in result.rows)

    def test_exact_over_limit_fails_row_but_run_continues(self):
        result = run(tiny_spec(node_counts=(16,), algorithms=("exact", "greedy"), ranges=(150.0,)))
        exact_rows = [r for r in result.rows if r.algorithm == "exact"]
        greedy_rows = [r for r in result.rows if r.algorithm == "greedy"]
        assert all(not r.ok and "node limit" in r.error for r in exact_rows)
        assert all(r.ok for r in greedy_rows)

    def test_deterministic_head_counts(self):
        spec = tiny_spec(algorithms=("aco", "hd"))
        a = run(spec)
        b = run(spec)
        assert [(r.key, r.head_count) for r in a.rows] == [(r.key, r.head_count) for r in b.rows]


class TestAggregates:
    def test_mean_min_max(self):
        rows = [
            RunRow("aco", 50, 200.0, s, hc, 50, 1.0) for s, hc in enumerate((7, 8, 9))
        ]
        aggs = ExperimentResult(rows).aggregates()
        assert aggs == [Aggregate("aco", 50, 200.0, 8.0, 7, 9)]

    def test_failed_rows_excluded(self):
        rows = [
            RunRow("aco", 50, 200.0, 0, 7, 50, 1.0),
            RunRow("aco", 50, 200.0, 1, 0, 0, 1.0, ok=False, error="boom"),
        ]
        aggs = ExperimentResult(rows).aggregates()
        assert aggs == [Aggregate("aco", 50, 200.0, 7.0, 7, 7)]


class TestExport:
    def test_single_row_csv(self, tmp_path):
        result = ExperimentResult([RunRow("hd", 10, 50.0, 0, 3, 1, 2.5)])
        p = tmp_path / "rows.csv"
        export_rows_csv(result, p)
        lines = p.read_text().splitlines()
        assert len(lines) == 2
        assert lines[0] == "algorithm,n,range,seed,head_count,wall_time_ms"
        assert lines[1].startswith("hd,10,50,0,3,")

    def test_aggregate_csv(self, tmp_path):
        rows = [RunRow("hd", 10, 50.0, s, hc, 1, 1.0) for s, hc in enumerate((7, 8, 9))]
        p = tmp_path / "agg.csv"
        export_aggregates_csv(ExperimentResult(rows), p)
        lines = p.read_text().splitlines()
        assert lines[0] == "algorithm,n,range,mean,min,max"
        assert lines[1] == "hd,10,50,8.0,7,9"

    def test_json_round_trip(self, tmp_path):
        result = run(tiny_spec(algorithms=("hd", "greedy")))
        p = tmp_path / "res.json"
        export_json(result, p)
        back = load_result_json(p)
        assert back.aggregates() == result.aggregates()
        assert back.rows == result.rows

    def test_export_dispatch(self, tmp_path):
        result = ExperimentResult([RunRow("hd", 10, 50.0, 0, 3, 1, 2.5)])
        export(result, "csv", tmp_path / "a.csv")
        export(result, "json", tmp_path / "a.json")
        assert json.loads((tmp_path / "a.json").read_text())["rows"][0]["algorithm"] == "hd"
        with pytest.raises(ConfigurationError):
            export(result, "xml", tmp_path / "a.xml")

    def test_unwritable_path(self, tmp_path):
        result = ExperimentResult([RunRow("hd", 10, 50.0, 0, 3, 1, 2.5)])
        with pytest.raises(OSError):
            export_rows_csv(result, tmp_path / "missing-dir" / "rows.csv")

    def test_empty_result_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            export_rows_csv(ExperimentResult([]), tmp_path / "rows.csv")


class TestSpecFile:
    def test_load_spec(self, tmp_path):
        p = tmp_path / "spec.json"
        p.write_text(json.dumps({
            "node_counts": [10, 20],
            "ranges": [100, 150],
            "area_side": 300,
            "seeds": [0, 1, 2],
            "algorithms": ["aco", "wca"],
            "aco": {"ants": 5, "seed": 9},
            "wca": {"w1": 0.4, "w2": 0.4, "w3": 0.1, "w4": 0.1, "ideal_degree": 6},
            "kconid_k": 2,
        }))
        spec = load_spec(p)
        assert spec.node_counts == (10, 20)
        assert spec.aco.ants == 5
        assert spec.wca.ideal_degree == 6
        assert spec.kconid_k == 2

    def test_unknown_field_rejected(self, tmp_path):
        p = tmp_path / "spec.json"
        p.write_text(json.dumps({"node_count": [10]}))
        with pytest.raises(ConfigurationError, match="unknown spec fields"):
            load_spec(p)

    def test_empty_seeds_rejected(self, tmp_path):
        p = tmp_path / "spec.json"
        p.write_text(json.dumps({"seeds": []}))
        with pytest.raises(ConfigurationError, match="seeds"):
            load_spec(p)
