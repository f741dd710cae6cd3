import random

from ndsolve import (
    Graph,
    PrecolorInstance,
    build_type_graph,
    complete_graph,
    compute_type_partition,
    oracle_precolor,
    reduce_independent_types,
    solve_precolor,
    validate_coloring_witness,
)
from ndsolve.ilp import solve_feasibility
from ndsolve.precolor import (
    build_precolor_ilp,
    compute_color_categories,
)
from helpers import small_sweep_instance

C4_EDGES = [(0, 1), (0, 3), (2, 1), (2, 3)]  # = K_{2,2}, types {0,2} and {1,3}


def _reduced(inst):
    partition = compute_type_partition(inst.graph)
    return reduce_independent_types(inst, partition), build_type_graph(
        inst.graph, partition
    )


def test_reduction_extends_pinned_color_over_independent_type():
    # independent type {0,1,2}, all joined to 3; vertex 0 pinned to color 5
    g = Graph.from_edges(4, [(0, 3), (1, 3), (2, 3)])
    inst = PrecolorInstance(g, {0: 5}, 5)
    reduced, _ = _reduced(inst)
    assert reduced.precolor[1] == 5 and reduced.precolor[2] == 5
    t = reduced.partition.type_of[0]
    assert t in reduced.frozen_types
    assert not reduced.collapsed


def test_reduction_collapses_uncolored_independent_type():
    g = Graph.from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    inst = PrecolorInstance(g, {}, 2)
    reduced, _ = _reduced(inst)
    t = reduced.partition.type_of[0]
    assert reduced.effective[t] == (0,)
    assert reduced.collapsed[0] == (0, 1, 2, 3)
    assert t in reduced.active_types


def test_reduction_leaves_clique_types_alone():
    inst = PrecolorInstance(complete_graph(4), {0: 1, 1: 2}, 4)
    reduced, _ = _reduced(inst)
    assert reduced.precolor == {0: 1, 1: 2}
    assert not reduced.collapsed
    assert reduced.frozen_types == frozenset()
    assert reduced.effective[0] == (0, 1, 2, 3)


def test_materialize_round_trip_sizes():
    g = Graph.from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    inst = PrecolorInstance(g, {}, 2)
    reduced, _ = _reduced(inst)
    small, kept = reduced.materialize()
    assert small.graph.n == 2  # representative leaf + the hub
    assert len(kept) == 2


def test_categories_no_precoloring():
    inst = PrecolorInstance(complete_graph(3), {}, 4)
    reduced, _ = _reduced(inst)
    cats = compute_color_categories(reduced)
    assert len(cats) == 1
    assert cats[0].type_set == frozenset()
    assert cats[0].colors == (1, 2, 3, 4)


def test_categories_group_by_pinned_types():
    # colors 1 and 2 pinned inside the clique type; color 3 free
    inst = PrecolorInstance(complete_graph(4), {0: 1, 1: 2}, 3)
    reduced, _ = _reduced(inst)
    cats = compute_color_categories(reduced)
    assert [c.colors for c in cats] == [(3,), (1, 2)]
    assert cats[1].type_set == frozenset({0})


def test_categories_on_c4_with_pinned_diagonal():
    inst = PrecolorInstance(Graph.from_edges(4, C4_EDGES), {0: 1, 2: 2}, 2)
    reduced, _ = _reduced(inst)
    cats = compute_color_categories(reduced)
    assert [(set(c.type_set), c.color_count) for c in cats] == [
        (set(), 0),
        ({0}, 2),
    ]


def test_ilp_k3_one_pinned_is_feasible():
    inst = PrecolorInstance(complete_graph(3), {0: 1}, 3)
    reduced, h = _reduced(inst)
    cats = compute_color_categories(reduced)
    problem, subcats = build_precolor_ilp(reduced, cats, h)
    solution = solve_feasibility(problem)
    assert solution is not None
    # all three colors occupy the single clique type
    assert sum(solution.values) == 3


def test_ilp_c4_diagonal_two_colors_infeasible():
    inst = PrecolorInstance(Graph.from_edges(4, C4_EDGES), {0: 1, 2: 2}, 2)
    reduced, h = _reduced(inst)
    cats = compute_color_categories(reduced)
    problem, _ = build_precolor_ilp(reduced, cats, h)
    assert solve_feasibility(problem) is None


def test_ilp_c4_diagonal_three_colors_feasible():
    inst = PrecolorInstance(Graph.from_edges(4, C4_EDGES), {0: 1, 2: 2}, 3)
    report = solve_precolor(inst)
    assert report.answer
    assert report.witness.colors == (1, 3, 2, 3)  # forced: 3 on the other type


def test_bipartite_two_colors():
    assert solve_precolor(
        PrecolorInstance(Graph.from_edges(4, C4_EDGES), {}, 2)
    ).answer


def test_triangle_needs_three():
    assert not solve_precolor(PrecolorInstance(complete_graph(3), {}, 2)).answer
    assert solve_precolor(PrecolorInstance(complete_graph(3), {}, 3)).answer


def test_untouched_clique_gets_a_bijection():
    # budget equal to the clique size: any valid answer uses every color once
    inst = PrecolorInstance(complete_graph(4), {}, 4)
    report = solve_precolor(inst)
    assert report.answer
    assert sorted(report.witness.colors) == [1, 2, 3, 4]
    validate_coloring_witness(inst, report.witness.colors)


def test_fully_precolored_instance():
    inst = PrecolorInstance(complete_graph(3), {0: 1, 1: 2, 2: 3}, 3)
    report = solve_precolor(inst)
    assert report.answer
    assert report.witness.colors == (1, 2, 3)


def test_agrees_with_oracle_on_random_instances():
    rng = random.Random(990)
    yes = 0
    for _ in range(150):
        inst = small_sweep_instance("precolor", rng)
        report = solve_precolor(inst)
        answer, _ = oracle_precolor(inst)
        assert report.answer == answer
        if report.answer:
            yes += 1
            validate_coloring_witness(inst, report.witness.colors)
    assert 20 < yes < 150


def test_reduction_preserves_the_answer():
    rng = random.Random(1001)
    for _ in range(60):
        inst = small_sweep_instance("precolor", rng, max_n=10)
        partition = compute_type_partition(inst.graph)
        reduced = reduce_independent_types(inst, partition)
        small, _ = reduced.materialize()
        assert oracle_precolor(inst)[0] == oracle_precolor(small)[0]


def test_active_types_are_colored_rainbow():
    # on every active type of a yes-instance, the effective members carry
    # pairwise distinct colors and their count equals the effective size
    rng = random.Random(1234)
    seen_yes = 0
    while seen_yes < 40:
        inst = small_sweep_instance("precolor", rng)
        report = solve_precolor(inst)
        if not report.answer:
            continue
        seen_yes += 1
        partition = compute_type_partition(inst.graph)
        reduced = reduce_independent_types(inst, partition)
        for t in reduced.active_types:
            used = [report.witness.colors[v] for v in reduced.effective[t]]
            assert len(set(used)) == len(used) == reduced.effective_size(t)


def test_subcategory_type_sets_are_independent_in_h():
    rng = random.Random(1100)
    for _ in range(40):
        inst = small_sweep_instance("precolor", rng)
        reduced, h = _reduced(inst)
        cats = compute_color_categories(reduced)
        _, subcats = build_precolor_ilp(reduced, cats, h)
        for sc in subcats:
            types = sorted(sc.type_set)
            for i, a in enumerate(types):
                for b in types[i + 1 :]:
                    assert not h.has_edge(a, b)
            assert cats[sc.category_index].type_set <= sc.type_set
