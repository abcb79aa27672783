"""Minimum-cost token assignment and unconstrained token routing."""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graph import INF, Graph, bfs_distances


def optimal_assignment(dist, sources, targets) -> tuple[float, dict[int, int]]:
    """Cheapest bijection ``sources -> targets`` under ``dist[u][v]``.

    ``dist`` is any row-indexable distance table (e.g. from
    ``all_pairs_distances``). Returns ``(cost, mapping)``; cost is INF when
    every bijection has to cross between components.
    """
    xs, ts = sorted(sources), sorted(targets)
    if len(xs) != len(ts):
        raise ValueError("assignment needs equal-size sets")
    if not xs:
        return 0, {}
    big = (len(dist) + 1) ** 2
    cost = np.array([[dist[u][v] if dist[u][v] is not INF else big for v in ts] for u in xs],
                    dtype=np.int64)
    rows, cols = linear_sum_assignment(cost)
    total = int(cost[rows, cols].sum())
    mapping = {xs[i]: ts[j] for i, j in zip(rows, cols)}
    if any(dist[u][v] is INF for u, v in mapping.items()):
        return INF, mapping
    return total, mapping


def assignment_cost(dist, sources, targets):
    return optimal_assignment(dist, sources, targets)[0]


def route_free(g: Graph, dist, source, target) -> list[tuple[int, int]]:
    """Slide ``source`` onto ``target`` in exactly ``M*_TS`` moves, ignoring feasibility.

    Tokens are handled in non-increasing order of remaining distance. A token
    follows the lexicographically least shortest path to its target; when the
    path is blocked, the blocker closest to the target inherits that target and
    completes the trip instead. Both swaps keep the assignment optimal, so each
    slide lowers the remaining assignment cost by one.
    """
    cost, f = optimal_assignment(dist, source, target)
    if cost is INF:
        raise ValueError("target not reachable by sliding within components")
    occupied = set(source)
    moves: list[tuple[int, int]] = []
    to_target: dict[int, tuple] = {}

    def dist_to(t):
        if t not in to_target:
            to_target[t] = bfs_distances(g, t).dist
        return to_target[t]

    while True:
        pending = [p for p in f if f[p] != p]
        if not pending:
            return moves
        p = min(pending, key=lambda q: (-dist[q][f[q]], q))
        goal = f[p]
        if goal in occupied:
            f[p], f[goal] = f[goal], goal
            continue
        dt = dist_to(goal)
        path = [p]
        u = p
        while u != goal:
            u = next(w for w in g.adj[u] if dt[w] == dt[u] - 1)
            path.append(u)
        last = max(i for i, v in enumerate(path) if v in occupied)
        z = path[last]
        if z != p:
            f[p], f[z] = f[z], goal
        del f[z]
        for a, b in zip(path[last:], path[last + 1:]):
            moves.append((a, b))
        occupied.discard(z)
        occupied.add(goal)
        f[goal] = goal
