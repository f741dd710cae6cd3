"""Exact graph-motif search driven by the type decomposition.

A solution occupying a set of type classes forces that set to induce a
connected piece of the type graph, and conversely any connected candidate
set supports a solution iff (a) the motif fits inside the candidate's
combined color pool and (b) a "skeleton" exists: one vertex per candidate
type, colors drawn from the motif.  Because classes are fully joined or
fully separated, a skeleton spanning a connected candidate is itself
connected, and every further vertex from a candidate type attaches to it;
missing colors can therefore be added greedily.  Skeleton existence is a
bipartite matching between motif color occurrences and candidate types.

The candidate sets are enumerated as increasing bitmasks over type ids,
so a yes answer always reports the witness of the lowest feasible mask.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass

from .decomposition import (
    TypeGraph,
    TypePartition,
    build_type_graph,
    compute_type_partition,
)
from .instances import (
    MotifInstance,
    SolveReport,
    induced_connected,
    validate_motif_witness,
)
from .matching import max_bipartite_matching


@dataclass(frozen=True)
class CandidateTypeSet:
    """A nonempty set of type ids, with its quotient-connectivity flag."""

    types: tuple[int, ...]
    connected: bool


@dataclass(frozen=True)
class Skeleton:
    """One chosen vertex per candidate type; colors form a sub-multiset of
    the motif and the chosen vertices induce a connected subgraph."""

    chosen: dict[int, int]


@dataclass(frozen=True)
class MotifWitness:
    vertices: tuple[int, ...]


def candidate_type_set(type_graph: TypeGraph, types: tuple[int, ...]) -> CandidateTypeSet:
    """Wrap a type subset, computing connectivity inside the type graph."""
    types = tuple(sorted(types))
    if not types:
        raise ValueError("candidate type set must be nonempty")
    index = {t: i for i, t in enumerate(types)}
    parent = list(range(len(types)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, t in enumerate(types):
        for u in type_graph.adj[t]:
            j = index.get(u)
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    connected = len({find(i) for i in range(len(types))}) == 1
    return CandidateTypeSet(types, connected)


def _color_tables(
    instance: MotifInstance, partition: TypePartition
) -> tuple[list[dict[int, list[int]]], list[Counter]]:
    """Per type: color -> member vertices (ascending), and a color Counter."""
    vertices_by_color: list[dict[int, list[int]]] = []
    counts: list[Counter] = []
    for members in partition.classes:
        table: dict[int, list[int]] = {}
        for v in members:
            table.setdefault(instance.vertex_color[v], []).append(v)
        vertices_by_color.append(table)
        counts.append(Counter({c: len(vs) for c, vs in table.items()}))
    return vertices_by_color, counts


def skeleton_exists(
    instance: MotifInstance,
    partition: TypePartition,
    candidate: CandidateTypeSet,
    _tables: list[dict[int, list[int]]] | None = None,
) -> Skeleton | None:
    """Find a skeleton of the candidate set, or None.

    Builds a bipartite graph with one node per occurrence of each motif
    color and one node per candidate type, an edge whenever the type
    contains the color; a skeleton exists iff a maximum matching leaves no
    type unmatched.  Matched types take their lowest vertex of the matched
    color, so distinct types always map to distinct concrete vertices.

    Callers must have checked candidate connectivity and that the motif is
    a sub-multiset of the candidate's color pool.
    """
    tables = _tables if _tables is not None else _color_tables(instance, partition)[0]
    types = candidate.types
    occurrences: list[int] = []
    for color, count in sorted(instance.motif_counts().items()):
        # a matching saturating the types never uses a color more often
        # than there are types, so extra occurrences cannot matter
        occurrences.extend([color] * min(count, len(types)))
    edges = [
        (i, j)
        for i, color in enumerate(occurrences)
        for j, t in enumerate(types)
        if color in tables[t]
    ]
    size, match_left = max_bipartite_matching(len(occurrences), len(types), edges)
    if size < len(types):
        return None
    chosen: dict[int, int] = {}
    for i, j in enumerate(match_left):
        if j >= 0:
            chosen[types[j]] = tables[types[j]][occurrences[i]][0]
    # fully-joined classes make any one-vertex-per-type pick across a
    # connected candidate connected
    assert not candidate.connected or induced_connected(
        instance.graph, chosen.values()
    )
    return Skeleton(chosen)


def extend_skeleton(
    instance: MotifInstance,
    partition: TypePartition,
    candidate: CandidateTypeSet,
    skeleton: Skeleton,
) -> MotifWitness:
    """Grow the skeleton with candidate-type vertices until the colors match.

    Types are scanned in id order and vertices in id order, so the witness
    is deterministic; the caller guarantees the candidate's color pool
    covers the motif, which makes exhaustion impossible.
    """
    need = instance.motif_counts()
    need.subtract(instance.vertex_color[v] for v in skeleton.chosen.values())
    picked = set(skeleton.chosen.values())
    for t in candidate.types:
        for v in partition.classes[t]:
            if v in picked:
                continue
            color = instance.vertex_color[v]
            if need.get(color, 0) > 0:
                need[color] -= 1
                picked.add(v)
    assert not +need, "candidate color pool cannot cover the motif"
    return MotifWitness(tuple(sorted(picked)))


def solve_motif(instance: MotifInstance) -> SolveReport:
    """Decide whether the graph contains the motif; report a witness on yes."""
    start = time.perf_counter()
    partition = compute_type_partition(instance.graph)
    type_graph = build_type_graph(instance.graph, partition)
    k = partition.num_types

    witness: MotifWitness | None = None
    if len(instance.motif) == 1:
        target = instance.motif[0]
        for v in range(instance.graph.n):
            if instance.vertex_color[v] == target:
                witness = MotifWitness((v,))
                break
    else:
        tables, type_counts = _color_tables(instance, partition)
        want = instance.motif_counts()
        for mask in range(1, 1 << k):
            types = tuple(t for t in range(k) if mask >> t & 1)
            if len(types) == 1 and not partition.clique_flag[types[0]]:
                # an independent class alone cannot connect two vertices
                continue
            candidate = candidate_type_set(type_graph, types)
            if not candidate.connected:
                continue
            pool: Counter = Counter()
            for t in types:
                pool.update(type_counts[t])
            if any(pool[c] < count for c, count in want.items()):
                continue
            skeleton = skeleton_exists(instance, partition, candidate, _tables=tables)
            if skeleton is None:
                continue
            witness = extend_skeleton(instance, partition, candidate, skeleton)
            break

    if witness is not None:
        validate_motif_witness(instance, witness.vertices)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SolveReport(
        answer=witness is not None, nd=k, elapsed_ms=elapsed, witness=witness
    )
