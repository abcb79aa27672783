"""Simple undirected graphs, BFS machinery, graph powers and class recognition."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

INF = math.inf


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Adjacency lists are sorted tuples; a per-vertex frozenset mirrors them for
    constant-time edge tests.
    """

    __slots__ = ("n", "adj", "m", "_nbrs")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency must have exactly n lists")
        lists = tuple(tuple(sorted(set(a))) for a in adj)
        total = 0
        for u, nb in enumerate(lists):
            for v in nb:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
            total += len(nb)
        nbrs = tuple(frozenset(nb) for nb in lists)
        for u, nb in enumerate(lists):
            for v in nb:
                if u not in nbrs[v]:
                    raise ValueError(f"adjacency not symmetric on {u}-{v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", lists)
        object.__setattr__(self, "m", total // 2)
        object.__setattr__(self, "_nbrs", nbrs)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range ids."""
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceTable:
    source: int
    dist: tuple  # int per vertex, or INF when unreachable

    def __getitem__(self, v: int):
        return self.dist[v]


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset
    independent: frozenset


@dataclass(frozen=True)
class ClassReport:
    connected: bool
    tree: bool
    split: SplitPartition | None
    bipartite: bool
    diameters: tuple  # one entry per component, components ordered by least vertex


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> DistanceTable:
    """Shortest-path distances from ``source``; vertices beyond ``limit`` stay INF."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    dist: list = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in g.adj[u]:
            if dist[w] is INF:
                dist[w] = du + 1
                queue.append(w)
    return DistanceTable(source, tuple(dist))


def all_pairs_distances(g: Graph) -> list[tuple]:
    return [bfs_distances(g, s).dist for s in range(g.n)]


def graph_power(g: Graph, s: int) -> Graph:
    """The ``s``-th power: ``uv`` is an edge iff ``0 < dist(u, v) <= s``."""
    if s < 1:
        raise ValueError("power must be >= 1")
    if s == 1:
        return g
    adj = []
    for u in range(g.n):
        d = bfs_distances(g, u, limit=s).dist
        adj.append([v for v in range(g.n) if v != u and d[v] <= s])
    return Graph(g.n, adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def component_index(g: Graph) -> list[int]:
    idx = [0] * g.n
    for i, comp in enumerate(components(g)):
        for v in comp:
            idx[v] = i
    return idx


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def component_diameters(g: Graph) -> tuple[int, ...]:
    out = []
    for comp in components(g):
        out.append(max(max(d for d in bfs_distances(g, s).dist if d is not INF) for s in comp))
    return tuple(out)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-colouring as a 0/1 list, or None if an odd cycle exists."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def check_split_partition(g: Graph, clique: Iterable[int]) -> SplitPartition:
    """Validate a user-supplied clique part; raise ValueError when it fails."""
    k = frozenset(clique)
    if any(not 0 <= v < g.n for v in k):
        raise ValueError("clique vertex out of range")
    s = frozenset(range(g.n)) - k
    kl = sorted(k)
    for i, u in enumerate(kl):
        for v in kl[i + 1:]:
            if not g.has_edge(u, v):
                raise ValueError(f"clique part is not complete: {u}-{v} missing")
    for u in s:
        for v in g.adj[u]:
            if v in s:
                raise ValueError(f"independent part has edge {u}-{v}")
    return SplitPartition(k, s)


def split_partition(g: Graph) -> SplitPartition | None:
    """Recognise split graphs from the degree sequence (Hammer-Simeone).

    With degrees sorted non-increasingly and ``w = max{i : d_i >= i - 1}``, the
    graph is split iff ``sum(d[:w]) == w(w-1) + sum(d[w:])``; when equality
    holds the ``w`` highest-degree vertices form a clique and the rest an
    independent set, whichever way degree ties are broken.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    w = max(i for i in range(1, g.n + 1) if degs[i - 1] >= i - 1)
    if sum(degs[:w]) != w * (w - 1) + sum(degs[w:]):
        return None
    return check_split_partition(g, order[:w])


def classify(g: Graph) -> ClassReport:
    return ClassReport(
        connected=is_connected(g),
        tree=is_tree(g),
        split=split_partition(g),
        bipartite=is_bipartite(g),
        diameters=component_diameters(g),
    )


def shortest_path(g: Graph, s: int, t: int, dist_to_t=None) -> list[int]:
    """Lexicographically least shortest ``s``-``t`` path (by next-hop id)."""
    if dist_to_t is None:
        dist_to_t = bfs_distances(g, t).dist
    if dist_to_t[s] is INF:
        raise ValueError(f"{t} unreachable from {s}")
    path = [s]
    u = s
    while u != t:
        u = next(w for w in g.adj[u] if dist_to_t[w] == dist_to_t[u] - 1)
        path.append(u)
    return path


def shortest_path_counts(g: Graph, source: int) -> tuple[tuple, tuple]:
    """BFS distances and exact numbers of shortest paths from ``source``."""
    dist: list = [INF] * g.n
    count = [0] * g.n
    dist[source] = 0
    count[source] = 1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] is INF:
                dist[w] = dist[u] + 1
                queue.append(w)
            if dist[w] == dist[u] + 1:
                count[w] += count[u]
    return tuple(dist), tuple(count)


def on_every_shortest_path(counts: list, s: int, t: int, x: int) -> bool:
    """True iff every shortest ``s``-``t`` path visits ``x``.

    ``counts[v]`` must be the ``shortest_path_counts`` result for source ``v``
    (indexed lazily by callers). ``x`` lies on every such path exactly when it
    lies on one and the paths through it account for all of them.
    """
    ds, cs = counts[s]
    dx, cx = counts[x]
    if ds[t] is INF or ds[x] + dx[t] != ds[t]:
        return False
    return cs[x] * cx[t] == cs[t]
