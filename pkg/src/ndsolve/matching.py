"""Maximum bipartite matching via Hopcroft-Karp layered augmentation."""

from __future__ import annotations

from collections import deque
from typing import Iterable

_INF = -1


def max_bipartite_matching(
    num_left: int, num_right: int, edges: Iterable[tuple[int, int]]
) -> tuple[int, list[int]]:
    """Return ``(size, match_left)`` for a maximum matching.

    ``match_left[i]`` is the right node matched to left node ``i`` or -1.
    BFS builds layers of shortest alternating paths from the free left
    nodes, DFS augments along them; the number of phases is O(sqrt(V)),
    giving the usual O(sqrt(V) * E) bound.  Deterministic: nodes are
    explored in input order.
    """
    adj: list[list[int]] = [[] for _ in range(num_left)]
    for u, v in edges:
        if not (0 <= u < num_left and 0 <= v < num_right):
            raise ValueError(f"edge ({u}, {v}) out of range")
        adj[u].append(v)

    match_left = [-1] * num_left
    match_right = [-1] * num_right
    dist = [0] * num_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(num_left):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_right[v]
                if w == -1:
                    reachable_free = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reachable_free

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_right[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = _INF
        return False

    size = 0
    while bfs():
        for u in range(num_left):
            if match_left[u] == -1 and dfs(u):
                size += 1
    return size, match_left
