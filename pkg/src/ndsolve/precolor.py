"""Exact precoloring extension via color categories and integer feasibility.

Independent-set types are reduced first: once any of their vertices is
precolored that color works for all of them (equal neighborhoods, no
internal edges), and a fully uncolored independent type may just as well
be a single vertex.  After the reduction every independent type is either
fully precolored ("frozen") or one uncolored vertex; all other types stay
"active".

Colors are then grouped by where the input pins them: a category collects
the colors precolored in the same set of types.  A finished coloring
refines each category into subcategories by the full set of types a color
ends up occupying.  On active types every color occupies at most one
vertex (cliques are rainbow, reduced independent types have one vertex),
so counting colors per subcategory captures the coloring exactly:

* per category, its subcategory counts sum to the category's color count;
* per active type, the subcategories containing it sum to the type size.

Admissible subcategories contain their category, avoid adjacent type
pairs (a color shared across a fully-joined pair would sit on an edge),
and never add frozen types, whose vertices are all taken.  Frozen types
are left out of the per-type equations because one color may legally
cover several of their vertices; their adjacency constraints still apply
through the categories.  A feasible count table converts directly into a
proper coloring.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .decomposition import (
    TypeGraph,
    TypePartition,
    build_type_graph,
    compute_type_partition,
)
from .graphs import Graph
from .ilp import IlpProblem, equal, solve_feasibility
from .instances import PrecolorInstance, SolveReport, validate_coloring_witness


@dataclass(frozen=True)
class ReducedInstance:
    """Instance after the independent-type reduction.

    ``effective`` lists, per type, the vertices that still matter (for a
    collapsed type just its representative); ``collapsed`` maps each
    representative to the original vertex set it stands for.  Expanding the
    collapsed vertices and keeping the extended precolors reproduces a
    coloring-equivalent original instance.
    """

    base: PrecolorInstance
    partition: TypePartition
    precolor: dict[int, int]
    collapsed: dict[int, tuple[int, ...]]
    effective: tuple[tuple[int, ...], ...]
    active_types: tuple[int, ...]
    frozen_types: frozenset[int]

    def effective_size(self, t: int) -> int:
        return len(self.effective[t])

    def materialize(self) -> tuple[PrecolorInstance, tuple[int, ...]]:
        """Standalone instance on the kept vertices, plus the kept-id map."""
        keep = sorted(v for members in self.effective for v in members)
        new_id = {v: i for i, v in enumerate(keep)}
        graph = self.base.graph
        edges = [
            (new_id[u], new_id[v])
            for u, v in graph.edges()
            if u in new_id and v in new_id
        ]
        precolor = {new_id[v]: c for v, c in self.precolor.items() if v in new_id}
        reduced_graph = Graph.from_edges(len(keep), edges)
        return (
            PrecolorInstance(reduced_graph, precolor, self.base.num_colors),
            tuple(keep),
        )


@dataclass(frozen=True)
class ColorCategory:
    """Colors precolored in exactly ``type_set``; fixed by the input."""

    type_set: frozenset[int]
    colors: tuple[int, ...]

    @property
    def color_count(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class ColorSubcategory:
    """Full type occupancy a category's colors may take; one count variable."""

    category_index: int
    type_set: frozenset[int]
    var_index: int


@dataclass(frozen=True)
class ColoringWitness:
    colors: tuple[int, ...]


def reduce_independent_types(
    instance: PrecolorInstance, partition: TypePartition
) -> ReducedInstance:
    """Freeze or collapse every independent type; cliques stay untouched."""
    precolor = dict(instance.precolor)
    collapsed: dict[int, tuple[int, ...]] = {}
    effective: list[tuple[int, ...]] = []
    frozen: set[int] = set()

    for t, members in enumerate(partition.classes):
        if partition.clique_flag[t]:
            effective.append(members)
            continue
        uncolored = [v for v in members if v not in precolor]
        if not uncolored:
            frozen.add(t)
            effective.append(members)
            continue
        pinned = sorted(precolor[v] for v in members if v in precolor)
        if pinned:
            # some color is already pinned here: it works for the whole type
            for v in uncolored:
                precolor[v] = pinned[0]
            frozen.add(t)
            effective.append(members)
        else:
            rep = members[0]
            if len(members) > 1:
                collapsed[rep] = members
            effective.append((rep,))

    active = tuple(t for t in range(partition.num_types) if t not in frozen)
    return ReducedInstance(
        base=instance,
        partition=partition,
        precolor=precolor,
        collapsed=collapsed,
        effective=tuple(effective),
        active_types=active,
        frozen_types=frozenset(frozen),
    )


def compute_color_categories(reduced: ReducedInstance) -> tuple[ColorCategory, ...]:
    """Group the colors 1..r by the set of types they are precolored in.

    The category with the empty type set collects the unprecolored colors
    and is always present, possibly with zero colors.
    """
    type_of = reduced.partition.type_of
    pinned_types: dict[int, set[int]] = {}
    seen_in_type: set[tuple[int, int]] = set()
    for v, c in reduced.precolor.items():
        t = type_of[v]
        if reduced.partition.clique_flag[t] and (t, c) in seen_in_type:
            raise ValueError(f"color {c} precolored twice inside clique type {t}")
        seen_in_type.add((t, c))
        pinned_types.setdefault(c, set()).add(t)

    groups: dict[frozenset[int], list[int]] = {frozenset(): []}
    for c in range(1, reduced.base.num_colors + 1):
        key = frozenset(pinned_types.get(c, ()))
        groups.setdefault(key, []).append(c)
    return tuple(
        ColorCategory(key, tuple(sorted(groups[key])))
        for key in sorted(groups, key=lambda s: sum(1 << t for t in s))
    )


def _independent_supersets(
    type_graph: TypeGraph,
    base: frozenset[int],
    addable: Sequence[int],
):
    """All supersets of ``base`` by types from ``addable``, pairwise
    non-adjacent in the type graph; backtracking over ascending type ids."""
    chosen: list[int] = []

    def rec(start: int):
        yield base.union(chosen)
        for i in range(start, len(addable)):
            t = addable[i]
            if all(not type_graph.has_edge(t, u) for u in chosen):
                chosen.append(t)
                yield from rec(i + 1)
                chosen.pop()

    yield from rec(0)


def build_precolor_ilp(
    reduced: ReducedInstance,
    categories: tuple[ColorCategory, ...],
    type_graph: TypeGraph,
) -> tuple[IlpProblem, tuple[ColorSubcategory, ...]]:
    """Subcategory count variables plus the category and type equations."""
    subcats: list[ColorSubcategory] = []
    for ci, category in enumerate(categories):
        if category.color_count == 0:
            continue
        base = category.type_set
        for a in base:
            for b in base:
                if a < b and type_graph.has_edge(a, b):
                    raise ValueError("category types are adjacent; input is corrupt")
        addable = [
            t
            for t in range(type_graph.num_types)
            if t not in base
            and t not in reduced.frozen_types
            and all(not type_graph.has_edge(t, u) for u in base)
        ]
        for type_set in _independent_supersets(type_graph, base, addable):
            for a in type_set:
                for b in type_set:
                    assert a == b or not type_graph.has_edge(a, b)
            subcats.append(ColorSubcategory(ci, type_set, len(subcats)))

    num_vars = len(subcats)
    upper = tuple(categories[sc.category_index].color_count for sc in subcats)
    constraints = []
    for ci, category in enumerate(categories):
        if category.color_count == 0:
            continue
        coeffs = tuple(1 if sc.category_index == ci else 0 for sc in subcats)
        constraints.append(equal(coeffs, category.color_count))
    for t in reduced.active_types:
        coeffs = tuple(1 if t in sc.type_set else 0 for sc in subcats)
        constraints.append(equal(coeffs, reduced.effective_size(t)))
    problem = IlpProblem(num_vars, (0,) * num_vars, upper, tuple(constraints))
    return problem, tuple(subcats)


def reconstruct_coloring(
    reduced: ReducedInstance,
    categories: tuple[ColorCategory, ...],
    subcats: tuple[ColorSubcategory, ...],
    counts: Sequence[int],
) -> ColoringWitness:
    """Turn feasible subcategory counts into a full proper coloring.

    Within each category, colors ascend into subcategories by ascending
    type-set mask; on each active type, the colors routed there and not
    already pinned to a precolored vertex land on the uncolored vertices in
    id order.  Collapsed vertices copy their representative.  The per-type
    equations make the counts work out exactly.
    """
    occupancy: dict[int, frozenset[int]] = {}
    for ci, category in enumerate(categories):
        mine = sorted(
            (sc for sc in subcats if sc.category_index == ci),
            key=lambda sc: sum(1 << t for t in sc.type_set),
        )
        queue = list(category.colors)
        for sc in mine:
            for _ in range(counts[sc.var_index]):
                assert queue, "subcategory counts exceed the category"
                occupancy[queue.pop(0)] = sc.type_set
        assert not queue, "subcategory counts do not cover the category"

    color_of = dict(reduced.precolor)
    for t in reduced.active_types:
        members = reduced.effective[t]
        pinned = {color_of[v] for v in members if v in color_of}
        routed = sorted(c for c, types in occupancy.items() if t in types)
        fresh = [c for c in routed if c not in pinned]
        open_slots = [v for v in members if v not in color_of]
        assert len(fresh) == len(open_slots), "type equation does not balance"
        for v, c in zip(open_slots, fresh):
            color_of[v] = c
    for rep, members in reduced.collapsed.items():
        for v in members:
            color_of[v] = color_of[rep]
    n = reduced.base.graph.n
    assert len(color_of) == n
    return ColoringWitness(tuple(color_of[v] for v in range(n)))


def solve_precolor(instance: PrecolorInstance) -> SolveReport:
    """Decide whether the precoloring extends; report a full coloring on yes."""
    start = time.perf_counter()
    partition = compute_type_partition(instance.graph)
    type_graph = build_type_graph(instance.graph, partition)
    reduced = reduce_independent_types(instance, partition)
    categories = compute_color_categories(reduced)
    problem, subcats = build_precolor_ilp(reduced, categories, type_graph)
    solution = solve_feasibility(problem)
    witness: ColoringWitness | None = None
    if solution is not None:
        witness = reconstruct_coloring(reduced, categories, subcats, solution.values)
        validate_coloring_witness(instance, witness.colors)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SolveReport(
        answer=witness is not None,
        nd=partition.num_types,
        elapsed_ms=elapsed,
        witness=witness,
        ilp_vars=problem.num_vars,
    )
