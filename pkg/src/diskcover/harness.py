"""Instance generation, benchmarking, and self-verification.

The benchmark compares the cost metric of the two exact multi-disk solvers:
the number of complete disk combinations ("pairs" for m=2) each one scores.
The baseline enumerates candidate pairs over the whole instance; the
output-sensitive solver only enumerates inside greedy neighborhoods, so its
pair count tracks the single-disk optimum instead of n.  Coverage values of
the two solvers are hard-asserted equal on every record.

Instances are drawn uniformly from a square with the package's fixed
splitmix64/xoshiro256** generator, so identical (n, side, seed) arguments
reproduce identical points in any environment.
"""

from __future__ import annotations

import csv
import json
import math
import time
from dataclasses import asdict, dataclass, field

from .exact import most_points
from .geometry import Point, candidate_disks, coverage_bits_many, union_cover
from .rng import Xoshiro256StarStar
from .solver import solve

BENCH_FIELDS = [
    "n",
    "side",
    "rho",
    "pairs_baseline",
    "pairs_ours",
    "cover_baseline",
    "cover_ours",
    "time_baseline_ms",
    "time_ours_ms",
    "seed",
]

TIMING_FIELDS = ("time_baseline_ms", "time_ours_ms")


class BenchmarkError(RuntimeError):
    """A benchmark record failed; message identifies the (n, side, seed)."""


@dataclass(frozen=True)
class GeneratorMeta:
    kind: str  # "uniform-square" or "file"
    n: int
    side: float
    seed: int


@dataclass
class Instance:
    points: list[Point]
    m: int
    meta: GeneratorMeta


@dataclass
class BenchRecord:
    n: int
    side: float
    rho: int
    pairs_baseline: int
    pairs_ours: int
    cover_baseline: int
    cover_ours: int
    time_baseline_ms: float
    time_ours_ms: float
    seed: int


@dataclass
class VerificationReport:
    trials_requested: int
    trials_run: int
    passes: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.trials_run > 0


def generate(n: int, side: float, seed: int, m: int = 1) -> Instance:
    """n points i.i.d. uniform in [0, side]^2, deterministic in the seed.

    Draw order is fixed: x then y per point, points in index order.
    """
    if n < 1:
        raise ValueError("generate requires n >= 1")
    if not (side > 0):
        raise ValueError("generate requires side > 0")
    rng = Xoshiro256StarStar(seed)
    pts = []
    for i in range(n):
        x = rng.random() * side
        y = rng.random() * side
        pts.append(Point(x, y, i))
    return Instance(pts, m, GeneratorMeta("uniform-square", n, side, seed))


def bench(
    configs: list[tuple[int, float]],
    seeds: list[int],
    m: int = 2,
    sample_baseline: int | None = None,
) -> list[BenchRecord]:
    """Run baseline and output-sensitive solver on every config x seed.

    ``sample_baseline`` caps the baseline's enumeration cost: when the
    candidate count exceeds the cap, the baseline optimum is computed through
    the (provably value-preserving) dedup+prune path while pairs_baseline is
    still reported as the full C(candidates, m) the faithful enumeration
    would score.  Coverage equality is asserted on every record either way.
    """
    if not configs or not seeds:
        raise ValueError("bench requires at least one config and one seed")
    records = []
    for n, side in sorted(configs):
        for seed in sorted(seeds):
            inst = generate(n, side, seed, m=m)
            try:
                records.append(_bench_one(inst.points, n, side, seed, m, sample_baseline))
            except BenchmarkError:
                raise
            except Exception as exc:
                raise BenchmarkError(
                    f"config n={n} side={side} seed={seed}: {exc}"
                ) from exc
    records.sort(key=lambda r: (r.n, r.side, r.seed))
    return records


def _bench_one(
    pts: list[Point],
    n: int,
    side: float,
    seed: int,
    m: int,
    sample_baseline: int | None,
) -> BenchRecord:
    t0 = time.perf_counter()
    ours = solve(pts, m)
    time_ours = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    n_candidates = len(candidate_disks(pts))
    accelerated = sample_baseline is not None and n_candidates > sample_baseline
    if accelerated:
        baseline = most_points(pts, m, dedup=True, prune=True)
        pairs_baseline = math.comb(n_candidates, m)
    else:
        baseline = most_points(pts, m, dedup=False, prune=False)
        pairs_baseline = baseline.stats.combos_evaluated
    time_baseline = (time.perf_counter() - t0) * 1000.0

    if baseline.covered.count != ours.covered.count:
        raise BenchmarkError(
            f"config n={n} side={side} seed={seed}: coverage mismatch "
            f"(baseline {baseline.covered.count}, ours {ours.covered.count})"
        )
    return BenchRecord(
        n=n,
        side=side,
        rho=ours.rho,
        pairs_baseline=pairs_baseline,
        pairs_ours=ours.total_combos,
        cover_baseline=baseline.covered.count,
        cover_ours=ours.covered.count,
        time_baseline_ms=time_baseline,
        time_ours_ms=time_ours,
        seed=seed,
    )


def write_bench_csv(records: list[BenchRecord], path: str) -> None:
    """Fixed schema: header matches the record fields, '.' decimals."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(BENCH_FIELDS)
        for r in records:
            d = asdict(r)
            writer.writerow([d[f] for f in BENCH_FIELDS])


def write_bench_json(records: list[BenchRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([asdict(r) for r in records], fh, indent=2)
        fh.write("\n")


def _check_set_identities(bitsets: list[int], rng: Xoshiro256StarStar) -> str | None:
    """Spot-check the coverage-set algebra on sampled disk coverages."""
    if not bitsets:
        return None
    from .geometry import CoverageSet, exclusive_cover

    for _ in range(8):
        d = [CoverageSet(bitsets[rng.randint(0, len(bitsets) - 1)])]
        e = [CoverageSet(bitsets[rng.randint(0, len(bitsets) - 1)])]
        cd = union_cover(d).count
        ce = union_cover(e).count
        cde = union_cover(d + e).count
        if exclusive_cover(d, e) > cd:
            return "exclusive cover exceeded cover"
        if cde != cd + exclusive_cover(e, d):
            return "union != cover + exclusive-cover identity"
        if cde > cd + ce:
            return "union exceeded sum of covers"
    return None


def verify(
    trials: int,
    n_max: int,
    m_max: int,
    seed: int,
    max_seconds: float | None = None,
) -> VerificationReport:
    """Randomized self-check of the output-sensitive solver.

    Per trial: draw a small instance, assert the solver's coverage equals the
    exact enumeration optimum, assert the neighborhood packing bound
    (neighborhood size <= 21 * rho * (i - 1)) on every iteration, and check
    the coverage-set identities on sampled disks.  Failures carry a
    reproducer (seed, n, m).  ``max_seconds`` stops early on a time budget.
    """
    if trials < 1 or n_max < 1 or m_max < 1:
        raise ValueError("verify requires positive trials, n_max, m_max")
    rng = Xoshiro256StarStar(seed)
    report = VerificationReport(trials_requested=trials, trials_run=0, passes=0)
    t_start = time.perf_counter()
    for _ in range(trials):
        if max_seconds is not None and time.perf_counter() - t_start > max_seconds:
            break
        n = rng.randint(1, n_max)
        m = rng.randint(1, m_max)
        side = rng.uniform(1.0, 3.0 * math.sqrt(n))
        inst_seed = rng.next_u64()
        inst = generate(n, side, inst_seed, m=m)
        tag = f"seed={inst_seed} n={n} m={m} side={side:.6f}"
        report.trials_run += 1

        sol = solve(inst.points, m, prune=True)
        opt = most_points(inst.points, m, dedup=True, prune=True)
        if sol.covered.count != opt.covered.count:
            report.failures.append(
                f"{tag}: solver covered {sol.covered.count}, optimum {opt.covered.count}"
            )
            continue
        bound_bad = False
        for tr in sol.traces:
            if tr.neighborhood_size > 21 * sol.rho * (tr.i - 1):
                report.failures.append(
                    f"{tag}: neighborhood {tr.neighborhood_size} exceeds "
                    f"21*rho*(i-1) = {21 * sol.rho * (tr.i - 1)} at i={tr.i}"
                )
                bound_bad = True
                break
        if bound_bad:
            continue
        cands = candidate_disks(inst.points)
        bitsets = coverage_bits_many(cands, inst.points)
        problem = _check_set_identities(bitsets, rng)
        if problem:
            report.failures.append(f"{tag}: {problem}")
            continue
        report.passes += 1
    return report
