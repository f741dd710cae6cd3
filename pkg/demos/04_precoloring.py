"""Extending a partial proper coloring with a fixed color budget.

Independent classes reduce away first (a pinned color floods its class, a
fully uncolored class acts as one vertex).  The remaining question is
distributional: group colors by where the input pins them, decide how many
colors of each group occupy each admissible set of classes, and solve the
resulting integer system.

Run with: python3 demos/04_precoloring.py
"""

from ndsolve import (
    Graph,
    PrecolorInstance,
    compute_type_partition,
    reduce_independent_types,
    solve_precolor,
)
from ndsolve.precolor import compute_color_categories

# A 4-cycle with opposite corners pinned to different colors cannot be
# finished with 2 colors; the free corners neighbor both pinned ones.
c4 = Graph.from_edges(4, [(0, 1), (0, 3), (2, 1), (2, 3)])
pinned = {0: 1, 2: 2}
for budget in (2, 3):
    report = solve_precolor(PrecolorInstance(c4, pinned, budget))
    verdict = "yes" if report.answer else "no"
    print(f"C_4, corners pinned 1/2, budget {budget}: {verdict}")
    if report.answer:
        print("   full coloring:", list(report.witness.colors))

# The reduction in isolation: one pinned vertex floods its independent
# class, a fully uncolored class collapses to a representative.
fan = Graph.from_edges(7, [(v, 6) for v in range(6)])
inst = PrecolorInstance(fan, {0: 4}, 4)
partition = compute_type_partition(fan)
reduced = reduce_independent_types(inst, partition)
print("\nfan with one pinned leaf:")
print("   extended precoloring:", dict(sorted(reduced.precolor.items())))
print("   frozen classes:", sorted(reduced.frozen_types))

inst2 = PrecolorInstance(fan, {}, 2)
reduced2 = reduce_independent_types(inst2, compute_type_partition(fan))
print("fan with nothing pinned: collapsed groups", reduced2.collapsed)

# Color categories are fixed by the input; the solver only has to split
# them into admissible occupancy patterns.
k4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
inst3 = PrecolorInstance(k4, {0: 2, 1: 5}, 6)
reduced3 = reduce_independent_types(inst3, compute_type_partition(k4))
for category in compute_color_categories(reduced3):
    where = sorted(category.type_set) or "nowhere"
    print(f"   colors {category.colors} pinned in {where}")
report = solve_precolor(inst3)
print("K_4 with two pins, budget 6:", "yes" if report.answer else "no",
      "->", list(report.witness.colors))

# Interchangeability at work: 40 interchangeable colors, classes of
# hundreds of vertices, still a handful of count variables.
blocks = Graph.from_edges(
    300,
    [(u, v) for u in range(100) for v in range(100, 200)]
    + [(u, v) for u in range(100, 200) for v in range(200, 300)],
)
report = solve_precolor(PrecolorInstance(blocks, {0: 1, 299: 1}, 40))
print(
    f"\n300-vertex layered graph, budget 40: "
    f"{'yes' if report.answer else 'no'} "
    f"({report.ilp_vars} count variables, {report.elapsed_ms:.1f} ms)"
)
