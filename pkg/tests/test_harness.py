import json
import math

import pytest

from diskcover import (
    bench,
    candidate_disks,
    generate,
    verify,
    write_bench_csv,
    write_bench_json,
)
from diskcover.harness import BENCH_FIELDS, TIMING_FIELDS


def csv_without_timing(path):
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line.rstrip("\n").split(",") for line in fh if line.strip()]
    keep = [i for i, name in enumerate(rows[0]) if name not in TIMING_FIELDS]
    return [[row[i] for i in keep] for row in rows]


class TestGenerate:
    def test_single_point_in_bounds(self):
        inst = generate(1, 10.0, 0)
        assert len(inst.points) == 1
        p = inst.points[0]
        assert 0.0 <= p.x <= 10.0 and 0.0 <= p.y <= 10.0

    def test_thousand_points_in_bounds(self):
        inst = generate(1000, 200.0, 4242)
        assert len(inst.points) == 1000
        assert all(0.0 <= p.x <= 200.0 and 0.0 <= p.y <= 200.0 for p in inst.points)
        assert [p.idx for p in inst.points] == list(range(1000))

    def test_deterministic_in_seed(self):
        a = generate(50, 30.0, 9).points
        b = generate(50, 30.0, 9).points
        c = generate(50, 30.0, 10).points
        assert [(p.x, p.y) for p in a] == [(p.x, p.y) for p in b]
        assert [(p.x, p.y) for p in a] != [(p.x, p.y) for p in c]

    def test_meta(self):
        inst = generate(5, 3.0, 77, m=2)
        assert inst.meta.kind == "uniform-square"
        assert (inst.meta.n, inst.meta.side, inst.meta.seed) == (5, 3.0, 77)
        assert inst.m == 2

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            generate(0, 1.0, 0)
        with pytest.raises(ValueError):
            generate(1, 0.0, 0)
        with pytest.raises(ValueError):
            generate(1, -2.0, 0)


class TestBench:
    def test_records_sorted_and_exact(self):
        records = bench([(40, 10.0), (20, 6.0)], seeds=[2, 1], m=2)
        keys = [(r.n, r.side, r.seed) for r in records]
        assert keys == sorted(keys)
        for r in records:
            assert r.cover_baseline == r.cover_ours
            assert r.rho <= r.n
            assert r.pairs_ours <= r.pairs_baseline

    def test_dense_tiny_instance_counts_comparable(self):
        # with the single-disk optimum near n the two solvers do similar
        # work; the gap stays within a small factor instead of exploding
        records = bench([(10, 2.0)], seeds=[1, 2, 3], m=2)
        for r in records:
            assert r.pairs_ours <= r.pairs_baseline
            assert r.pairs_baseline <= 60 * max(r.pairs_ours, 1)

    def test_sample_baseline_keeps_exactness_and_pair_count(self):
        full = bench([(60, 12.0)], seeds=[5], m=2)[0]
        capped = bench([(60, 12.0)], seeds=[5], m=2, sample_baseline=10)[0]
        assert capped.cover_baseline == full.cover_baseline == full.cover_ours
        n_candidates = len(candidate_disks(generate(60, 12.0, 5).points))
        assert capped.pairs_baseline == math.comb(n_candidates, 2)
        assert capped.pairs_baseline == full.pairs_baseline

    def test_empty_arguments_rejected(self):
        with pytest.raises(ValueError):
            bench([], seeds=[1])
        with pytest.raises(ValueError):
            bench([(10, 2.0)], seeds=[])


class TestBenchOutput:
    def test_csv_schema_and_determinism(self, tmp_path):
        records = bench([(30, 8.0)], seeds=[1, 2], m=2)
        p1 = str(tmp_path / "a.csv")
        p2 = str(tmp_path / "b.csv")
        write_bench_csv(records, p1)
        write_bench_csv(bench([(30, 8.0)], seeds=[1, 2], m=2), p2)
        rows1 = csv_without_timing(p1)
        rows2 = csv_without_timing(p2)
        assert rows1 == rows2
        with open(p1) as fh:
            header = fh.readline().strip().split(",")
        assert header == BENCH_FIELDS

    def test_json_round_trip(self, tmp_path):
        records = bench([(20, 5.0)], seeds=[3], m=2)
        path = str(tmp_path / "r.json")
        write_bench_json(records, path)
        with open(path) as fh:
            data = json.load(fh)
        assert len(data) == 1
        assert data[0]["n"] == 20
        assert data[0]["cover_baseline"] == data[0]["cover_ours"]


class TestVerify:
    def test_single_point_single_disk(self):
        report = verify(1, 1, 1, seed=0)
        assert report.ok and report.passes == 1

    def test_two_hundred_trials_pass(self):
        report = verify(200, 20, 2, seed=1)
        assert report.trials_run == 200
        assert report.passes == 200
        assert report.failures == []

    def test_hundred_trials_three_disks(self):
        report = verify(100, 25, 3, seed=6, max_seconds=120.0)
        assert report.passes == report.trials_run
        assert report.failures == []

    def test_time_budget_stops_early(self):
        report = verify(10_000, 20, 2, seed=2, max_seconds=0.2)
        assert report.trials_run < 10_000
        assert report.failures == []

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            verify(0, 10, 1, seed=0)
