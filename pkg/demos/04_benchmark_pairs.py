"""Pair-count benchmark: whole-instance enumeration vs neighborhood re-solve.

Both solvers are exact, so the interesting number is the work: how many
two-disk combinations each one scores.  The baseline enumerates all candidate
pairs of the full instance, roughly C(n + 2p, 2) for p close point pairs.
The output-sensitive solver only enumerates candidates inside the greedy
neighborhood, whose size follows the single-disk optimum rho, not n.  As the
instance gets sparser (rho/n smaller) the gap widens; on dense instances
where one disk covers almost everything the two counts approach each other.
"""

import statistics

from diskcover import bench

CONFIGS = [(1000, 200.0), (1000, 100.0), (500, 100.0), (200, 20.0), (30, 3.0)]
SEEDS = [11, 12, 13, 14, 15]

records = bench(CONFIGS, seeds=SEEDS, m=2)

print(f"{'n':>5} {'side':>6} {'rho~':>5} {'pairs baseline':>15} {'pairs ours':>11} {'ratio':>9}")
for n, side in CONFIGS:
    rows = [r for r in records if r.n == n and r.side == side]
    rho = statistics.median(r.rho for r in rows)
    base = statistics.median(r.pairs_baseline for r in rows)
    ours = statistics.median(r.pairs_ours for r in rows)
    print(f"{n:>5} {side:>6g} {rho:>5g} {base:>15.0f} {ours:>11.0f} "
          f"{base / max(ours, 1):>8.0f}x")

print()
print("every record hard-asserts cover_baseline == cover_ours;")
print("timings and CSV/JSON output: see the bench CLI subcommand")
