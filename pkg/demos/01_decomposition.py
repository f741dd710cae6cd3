"""Tour of the type decomposition: classes, the quotient graph, and how
neighborhood diversity relates to vertex cover.

Run with: python3 demos/01_decomposition.py
"""

from ndsolve import (
    Graph,
    build_type_graph,
    complete_bipartite,
    complete_graph,
    compute_type_partition,
    compute_vertex_cover,
    path_graph,
    same_type,
)


def show(name, g):
    p = compute_type_partition(g)
    h = build_type_graph(g, p)
    print(f"{name}: n={g.n} m={g.m} -> nd={p.num_types}")
    for t, members in enumerate(p.classes):
        kind = "clique" if p.clique_flag[t] else "independent"
        print(f"   type {t} ({kind}, size {len(members)}): {list(members)}")
    print(f"   quotient edges: {list(h.edges()) or '(none)'}")
    return p


# A huge clique collapses to a single class: every two vertices are
# adjacent twins (equal closed neighborhoods).
show("K_30", complete_graph(30))

# A complete bipartite graph has two classes of non-adjacent twins,
# fully joined to each other.
show("K_4,7", complete_bipartite(4, 7))

# Paths are the opposite extreme: beyond three vertices, no two vertices
# share a type, so the parameter equals n.
show("P_3", path_graph(3))
show("P_6", path_graph(6))

# The same-type test itself is a simple set equation.
g = path_graph(3)
print("\nsame_type on P_3: ends", same_type(g, 0, 2), "| end vs middle", same_type(g, 0, 1))

# Graphs with a small vertex cover always have small neighborhood
# diversity (at most 2^c + c classes for a cover of size c), but not the
# other way around: K_30 above has 29 cover vertices and a single class.
star_plus = Graph.from_edges(8, [(0, v) for v in range(1, 8)] + [(1, 2)])
cover = None
for budget in range(0, 9):
    cover = compute_vertex_cover(star_plus, budget)
    if cover is not None:
        break
p = compute_type_partition(star_plus)
c = len(cover)
print(f"\nstar-plus-edge: cover size c={c}, nd={p.num_types}, bound 2^c+c={2**c + c}")
assert p.num_types <= 2**c + c
print("hierarchy bound holds")
