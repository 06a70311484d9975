"""Exact maximum-coverage of planar points by m unit disks.

Library layout:
  geometry     points, disks, coverage bitsets, the candidate-disk set
  single_disk  exact single-disk optimum (angular sweep, shifted grids)
  exact        exact best-k disks by candidate enumeration
  solver       output-sensitive exact solver (greedy + neighborhood re-solve)
  harness      reproducible instances, benchmark, self-verification
  rng          fixed splitmix64/xoshiro256** generator
"""

from .exact import ExactSolveStats, MultiDiskResult, most_points, most_points_excluding
from .geometry import (
    EPS_COVER,
    CoverageSet,
    Point,
    PointFormatError,
    UnitDisk,
    candidate_disks,
    coverage,
    coverage_bits_many,
    covers,
    exclusive_cover,
    load_points,
    parse_points,
    save_points,
    union_cover,
)
from .harness import (
    BenchRecord,
    BenchmarkError,
    GeneratorMeta,
    Instance,
    VerificationReport,
    bench,
    generate,
    verify,
    write_bench_csv,
    write_bench_json,
)
from .rng import Xoshiro256StarStar, splitmix64
from .single_disk import GridSpec, SingleDiskResult, best_disk_grid, best_disk_sweep
from .solver import (
    NEIGHBOR_RADIUS,
    IterationTrace,
    NeighborhoodSpec,
    Solution,
    greedy_solve,
    neighbor_points,
    solve,
)

__all__ = [
    "EPS_COVER",
    "NEIGHBOR_RADIUS",
    "BenchRecord",
    "BenchmarkError",
    "CoverageSet",
    "ExactSolveStats",
    "GeneratorMeta",
    "GridSpec",
    "Instance",
    "IterationTrace",
    "MultiDiskResult",
    "NeighborhoodSpec",
    "Point",
    "PointFormatError",
    "SingleDiskResult",
    "Solution",
    "UnitDisk",
    "VerificationReport",
    "Xoshiro256StarStar",
    "bench",
    "best_disk_grid",
    "best_disk_sweep",
    "candidate_disks",
    "coverage",
    "coverage_bits_many",
    "covers",
    "exclusive_cover",
    "generate",
    "greedy_solve",
    "load_points",
    "most_points",
    "most_points_excluding",
    "neighbor_points",
    "parse_points",
    "save_points",
    "solve",
    "splitmix64",
    "union_cover",
    "verify",
    "write_bench_csv",
    "write_bench_json",
]

__version__ = "0.1.0"
