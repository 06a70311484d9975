"""Output-sensitive exact solver for covering the most points with m disks.

The driver keeps an optimal set of i disks and grows it one disk at a time.
At each step two branches are compared on full-instance coverage:

* greedy extension: the incumbent plus the single best disk on the points it
  does not cover yet;
* neighborhood re-solve: an exact best-(i) search restricted to the points
  within distance 3 of the incumbent's centers.  Any disk sharing a covered
  point with the incumbent lies entirely inside that region, so whenever the
  greedy extension is not optimal the re-solve is.

The better branch is provably optimal at every step, while the expensive
exact search only ever sees the neighborhood, whose size is bounded by a
constant times the single-disk optimum rather than by n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import most_points, most_points_excluding
from .geometry import CoverageSet, Point, UnitDisk, coverage, union_cover
from .single_disk import best_disk_grid

# Neighborhood circles have radius 3 around each chosen center: a unit disk
# that shares a point with a chosen unit disk has its center within 2 of
# that disk's center, hence covers only points within 3 of it.
NEIGHBOR_RADIUS = 3.0

# Same closed-boundary philosophy as disk coverage, scaled to radius 3
# (slack applies to the squared distance).
NEIGHBOR_EPS = 9e-9


@dataclass(frozen=True)
class NeighborhoodSpec:
    """Search region around chosen centers; 3 = 1 (own radius) + 2 (any
    unit disk through one of the covered points)."""

    radius: float = NEIGHBOR_RADIUS


@dataclass
class IterationTrace:
    """Per-iteration record of the branch comparison (i runs from 2 to m)."""

    i: int
    greedy_gain: int
    neighborhood_size: int
    exact_value: int
    chose_greedy: bool
    combos_evaluated: int


@dataclass
class Solution:
    disks: list[UnitDisk]
    covered: CoverageSet
    rho: int
    traces: list[IterationTrace] = field(default_factory=list)
    total_combos: int = 0


def neighbor_points(
    pts: list[Point],
    disks: list[UnitDisk],
    spec: NeighborhoodSpec = NeighborhoodSpec(),
) -> list[Point]:
    """Points within spec.radius of at least one disk center (ids preserved)."""
    if not disks:
        raise ValueError("neighbor_points requires at least one disk")
    limit = spec.radius * spec.radius + NEIGHBOR_EPS
    out = []
    for p in pts:
        for d in disks:
            dx = p.x - d.cx
            dy = p.y - d.cy
            if dx * dx + dy * dy <= limit:
                out.append(p)
                break
    return out


def solve(pts: list[Point], m: int, prune: bool = False) -> Solution:
    """Exactly cover the maximum number of points with m unit disks.

    The first disk comes from the shifted-grid single-disk solver; each later
    disk is the better of the greedy extension and the exact neighborhood
    re-solve (ties go to the re-solve).  ``prune`` enables branch-and-bound
    inside the neighborhood searches; it changes combo counts, never values.

    combos_evaluated in each trace counts the complete disk combinations the
    neighborhood search scored; the greedy branch contributes none.
    """
    if not pts:
        raise ValueError("solve requires a non-empty point list")
    if m < 1:
        raise ValueError("solve requires m >= 1")

    first = best_disk_grid(pts)
    rho = first.rho_witness
    disks: list[UnitDisk] = [first.disk]
    covered = first.covered
    traces: list[IterationTrace] = []
    total_combos = 0

    for i in range(2, m + 1):
        greedy = most_points_excluding(pts, 1, covered)
        greedy_union = union_cover([covered, greedy.covered])

        nbr = neighbor_points(pts, disks)
        refined = most_points(nbr, i, dedup=True, prune=prune)
        # the refined disks may also cover points outside the neighborhood;
        # both branches are compared on full-instance coverage
        refined_cover = union_cover([coverage(d, pts) for d in refined.disks])

        chose_greedy = greedy_union.count > refined_cover.count
        if chose_greedy:
            disks.append(greedy.disks[0])
            covered = greedy_union
        else:
            disks = list(refined.disks)
            covered = refined_cover

        traces.append(
            IterationTrace(
                i=i,
                greedy_gain=greedy_union.count,
                neighborhood_size=len(nbr),
                exact_value=refined_cover.count,
                chose_greedy=chose_greedy,
                combos_evaluated=refined.stats.combos_evaluated,
            )
        )
        total_combos += refined.stats.combos_evaluated

    return Solution(disks, covered, rho, traces, total_combos)


def greedy_solve(pts: list[Point], m: int) -> Solution:
    """Plain greedy: repeatedly add the best disk on the uncovered points.

    Covers at least a (1 - 1/e) fraction of the optimum; used as a baseline
    and as the quality floor the exact solver is tested against.
    """
    if not pts:
        raise ValueError("greedy_solve requires a non-empty point list")
    if m < 1:
        raise ValueError("greedy_solve requires m >= 1")
    first = best_disk_grid(pts)
    disks = [first.disk]
    covered = first.covered
    for _ in range(2, m + 1):
        step = most_points_excluding(pts, 1, covered)
        disks.append(step.disks[0])
        covered = union_cover([covered, step.covered])
    return Solution(disks, covered, first.rho_witness)
