"""Why plain greedy is not enough, and how the neighborhood re-solve fixes it.

The instance below has a 10-point middle group flanked by two 6-point outer
groups.  The best single disk takes the middle ten, but the optimal pair of
disks instead splits the middle group between its flanks, pairing each flank
with an outer group for 9 + 9 = 18.  Greedy commits to the middle ten and
can only add 6 more.

The solver compares greedy extension against an exact re-solve restricted to
the points within distance 3 of the incumbent centers; whenever greedy is
suboptimal, every optimal disk overlaps the incumbent's points and thus lives
inside that neighborhood, so the re-solve finds it.
"""

from diskcover import Point, greedy_solve, most_points, solve


def clumped_instance() -> list[Point]:
    coords = []
    for x0, k in [(0.0, 6), (1.3, 3), (2.15, 4), (3.0, 3), (4.3, 6)]:
        coords.extend((x0 + 0.001 * i, 0.0) for i in range(k))
    return [Point(x, y, i) for i, (x, y) in enumerate(coords)]


pts = clumped_instance()
print(f"{len(pts)} points in five collinear clumps: 6 | 3 4 3 | 6")
print()

grd = greedy_solve(pts, 2)
print(f"plain greedy, 2 disks : {grd.covered.count} covered "
      f"(takes the middle 10, then one outer 6)")

opt = most_points(pts, 2)
print(f"exact enumeration     : {opt.covered.count} covered")

sol = solve(pts, 2)
tr = sol.traces[0]
print(f"output-sensitive solve: {sol.covered.count} covered")
print()
print(f"iteration 2 trace: greedy branch {tr.greedy_gain}, "
      f"neighborhood branch {tr.exact_value} "
      f"({tr.neighborhood_size} neighborhood points, "
      f"{tr.combos_evaluated} combinations) -> "
      f"{'greedy' if tr.chose_greedy else 'neighborhood'}")

assert sol.covered.count == opt.covered.count > grd.covered.count
print()
print("the re-solve recovered the optimum that greedy misses")
