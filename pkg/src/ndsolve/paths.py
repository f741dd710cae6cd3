"""Exact vertex-disjoint paths via path categories and integer feasibility.

Every solvable instance has a solution in which each path visits at most
one non-endpoint vertex per type (:func:`simplify_path` turns any path
into such a form by shortcutting between repeated types).  A simple path
is described up to vertex choice by its category: the endpoint types plus
the set of types its internal vertices traverse.  Counting paths per
category turns the problem into a small integer system:

* per endpoint-type pair, the category counts must add up to the number of
  terminal pairs with those endpoint types;
* per type, the paths routed through it may not outnumber its vertices
  left over after the fixed terminals are set aside.

Within a type all vertices look alike, so a feasible count table converts
greedily back into concrete disjoint paths.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .decomposition import (
    TypeGraph,
    TypePartition,
    build_type_graph,
    compute_type_partition,
)
from .graphs import Graph
from .ilp import IlpProblem, at_most, equal, solve_feasibility
from .instances import PathsInstance, SolveReport, validate_paths_witness


@dataclass(frozen=True)
class PathCategory:
    """Endpoint types (normalized start <= end) plus the set of types the
    internal vertices pass through; one count variable each."""

    start_type: int
    end_type: int
    route: frozenset[int]
    var_index: int


@dataclass(frozen=True)
class PathsWitness:
    paths: tuple[tuple[int, ...], ...]


def order_route(
    type_graph: TypeGraph, route: frozenset[int] | set[int], s_type: int, t_type: int
) -> tuple[int, ...] | None:
    """Order the route's types into a usable chain, or None.

    The chain T1..Tr must satisfy: s_type links T1, consecutive types link,
    Tr links t_type, where two types link when they are adjacent in the
    type graph or are the same clique type.  An empty route is usable iff
    the endpoint types link directly.  Subset dynamic programming over the
    route, deterministic (lowest continuation first).
    """
    types = tuple(sorted(route))
    if not types:
        return () if type_graph.linked(s_type, t_type) else None
    r = len(types)
    # reached[(mask, last)] = predecessor local index, -1 for chain starts
    reached: dict[tuple[int, int], int] = {}
    for i, t in enumerate(types):
        if type_graph.linked(s_type, t):
            reached[(1 << i, i)] = -1
    for mask in range(1, 1 << r):
        for last in range(r):
            if not mask >> last & 1 or (mask, last) not in reached:
                continue
            for nxt in range(r):
                if mask >> nxt & 1:
                    continue
                if type_graph.linked(types[last], types[nxt]):
                    key = (mask | 1 << nxt, nxt)
                    if key not in reached:
                        reached[key] = last
    full = (1 << r) - 1
    for last in range(r):
        if (full, last) in reached and type_graph.linked(types[last], t_type):
            chain = []
            mask, at = full, last
            while at != -1:
                chain.append(types[at])
                prev = reached[(mask, at)]
                mask ^= 1 << at
                at = prev
            chain.reverse()
            return tuple(chain)
    return None


def route_is_valid(
    type_graph: TypeGraph, route: frozenset[int] | set[int], s_type: int, t_type: int
) -> bool:
    """Whether a path with these endpoint types can traverse exactly ``route``."""
    return order_route(type_graph, route, s_type, t_type) is not None


def simplify_path(
    graph: Graph, partition: TypePartition, path: Sequence[int]
) -> tuple[int, ...]:
    """Shrink a path until no type occurs twice among its internal vertices.

    While some type has two internal occurrences, shortcut from its first
    internal occurrence x straight to the successor z of its last internal
    occurrence y: z neighbors y, and same-type x and y have equal
    neighborhoods apart from each other, so z neighbors x too.  Endpoints,
    vertex subset and validity are preserved, and the path strictly
    shrinks, so this terminates.
    """
    verts = list(path)
    if len(set(verts)) != len(verts):
        raise ValueError("input path repeats a vertex")
    for u, v in zip(verts, verts[1:]):
        if not graph.has_edge(u, v):
            raise ValueError(f"input path uses the missing edge ({u}, {v})")
    type_of = partition.type_of
    while True:
        internal_count = Counter(type_of[v] for v in verts[1:-1])
        offender = next(
            (
                type_of[v]
                for v in verts[1:-1]
                if internal_count[type_of[v]] >= 2
            ),
            None,
        )
        if offender is None:
            return tuple(verts)
        hits = [
            i for i in range(1, len(verts) - 1) if type_of[verts[i]] == offender
        ]
        x, y = hits[0], hits[-1]
        z = y + 1
        assert x < y and graph.has_edge(verts[x], verts[z])
        verts = verts[: x + 1] + verts[z:]


def build_paths_ilp(
    instance: PathsInstance, partition: TypePartition, type_graph: TypeGraph
) -> tuple[IlpProblem, tuple[PathCategory, ...]]:
    """Category count variables plus the demand and capacity constraints.

    Demands: per normalized endpoint-type pair, category counts sum to the
    number of terminal pairs with those endpoint types.  Capacities: per
    type, the categories routed through it sum to at most the type size
    minus its terminal vertices (terminals are fixed, named vertices; they
    are excluded from every pool rather than double-counted).
    """
    k = partition.num_types
    type_of = partition.type_of
    demand: Counter = Counter()
    for s, t in instance.pairs:
        a, b = sorted((type_of[s], type_of[t]))
        demand[(a, b)] += 1
    terminals_in: Counter = Counter(type_of[v] for v in instance.terminals())

    categories: list[PathCategory] = []
    for a, b in sorted(demand):
        for mask in range(1 << k):
            route = frozenset(t for t in range(k) if mask >> t & 1)
            if route_is_valid(type_graph, route, a, b):
                categories.append(PathCategory(a, b, route, len(categories)))

    num_vars = len(categories)
    upper = tuple(demand[(cat.start_type, cat.end_type)] for cat in categories)
    constraints = []
    for (a, b), count in sorted(demand.items()):
        coeffs = tuple(
            1 if (cat.start_type, cat.end_type) == (a, b) else 0 for cat in categories
        )
        constraints.append(equal(coeffs, count))
    for t in range(k):
        coeffs = tuple(1 if t in cat.route else 0 for cat in categories)
        if any(coeffs):
            capacity = type_graph.size[t] - terminals_in[t]
            constraints.append(at_most(coeffs, capacity))
    problem = IlpProblem(num_vars, (0,) * num_vars, upper, tuple(constraints))
    return problem, tuple(categories)


def reconstruct_paths(
    instance: PathsInstance,
    partition: TypePartition,
    type_graph: TypeGraph,
    categories: tuple[PathCategory, ...],
    counts: Sequence[int],
) -> PathsWitness:
    """Turn feasible category counts into concrete disjoint paths.

    Pairs are processed in input order, categories are handed out by lowest
    route mask, and each route type contributes its lowest unused
    non-terminal vertex, so reconstruction is deterministic.  The capacity
    constraints guarantee the pools never run dry.
    """
    type_of = partition.type_of
    terminal_set = set(instance.terminals())
    pools = {
        t: iter(v for v in partition.classes[t] if v not in terminal_set)
        for t in range(partition.num_types)
    }

    def mask_of(route: frozenset[int]) -> int:
        return sum(1 << t for t in route)

    queues: dict[tuple[int, int], list[frozenset[int]]] = {}
    for cat, count in zip(categories, counts):
        key = (cat.start_type, cat.end_type)
        queues.setdefault(key, []).extend([cat.route] * count)
    for routes in queues.values():
        routes.sort(key=mask_of)

    paths: list[tuple[int, ...]] = []
    cursor: Counter = Counter()
    for s, t in instance.pairs:
        key = tuple(sorted((type_of[s], type_of[t])))
        routes = queues.get(key, [])
        assert cursor[key] < len(routes), "category counts do not cover the pairs"
        route = routes[cursor[key]]
        cursor[key] += 1
        chain = order_route(type_graph, route, type_of[s], type_of[t])
        assert chain is not None, "category route lost its ordering"
        verts = [s]
        for rt in chain:
            v = next(pools[rt], None)
            assert v is not None, "vertex pool exhausted despite capacity limits"
            verts.append(v)
        verts.append(t)
        for u, v in zip(verts, verts[1:]):
            assert instance.graph.has_edge(u, v), "reconstructed a non-path"
        paths.append(tuple(verts))
    return PathsWitness(tuple(paths))


def solve_paths(instance: PathsInstance) -> SolveReport:
    """Decide the disjoint-paths instance; reconstruct a witness on yes."""
    start = time.perf_counter()
    partition = compute_type_partition(instance.graph)
    type_graph = build_type_graph(instance.graph, partition)
    problem, categories = build_paths_ilp(instance, partition, type_graph)
    solution = solve_feasibility(problem)
    witness: PathsWitness | None = None
    if solution is not None:
        witness = reconstruct_paths(
            instance, partition, type_graph, categories, solution.values
        )
        validate_paths_witness(instance, witness.paths, type_of=partition.type_of)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SolveReport(
        answer=witness is not None,
        nd=partition.num_types,
        elapsed_ms=elapsed,
        witness=witness,
        ilp_vars=problem.num_vars,
    )
