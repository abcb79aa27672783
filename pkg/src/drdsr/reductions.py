"""Instance generators: extremal split instances, hardness reductions, random graphs.

Every generator returns a :class:`ReductionOutput` whose ``provenance`` maps
each constructed vertex to a tuple naming where it came from, for example
``("vertex", 3)`` for a copy of base vertex 3 or ``("edge-path", 0, 1, 2)``
for the second inner vertex of the path replacing edge 0-1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .core import DrdsInstance, Rule, is_drds
from .errors import PreconditionError
from .graph import Graph, is_connected
from .oracle import is_vertex_cover, min_vertex_cover

BASE_GRAPHS = {
    "k2": (2, [(0, 1)]),
    "p3": (3, [(0, 1), (1, 2)]),
    "p4": (4, [(0, 1), (1, 2), (2, 3)]),
    "c4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "c5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    "k3": (3, [(0, 1), (1, 2), (0, 2)]),
}


@dataclass(frozen=True)
class ReductionOutput:
    instance: DrdsInstance
    provenance: tuple  # one role tuple per constructed vertex
    meta: dict = field(default_factory=dict, compare=False)

    def vertices_with(self, kind: str) -> list[int]:
        return [v for v, role in enumerate(self.provenance) if role[0] == kind]


def base_graph(name: str) -> Graph:
    try:
        n, edges = BASE_GRAPHS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown base graph {name!r}; choose from {sorted(BASE_GRAPHS)}") from None
    return Graph.from_edges(n, edges)


class _Builder:
    """Accumulates vertices with provenance and edges, then freezes to a Graph."""

    def __init__(self):
        self.roles: list[tuple] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, *role) -> int:
        self.roles.append(tuple(role))
        return len(self.roles) - 1

    def join(self, u: int, v: int):
        self.edges.append((u, v))

    def path_from(self, start: int, length: int, *role) -> list[int]:
        """Hang a path with ``length`` new vertices off ``start``; return them."""
        out = []
        prev = start
        for idx in range(1, length + 1):
            cur = self.add(*role, idx)
            self.join(prev, cur)
            out.append(cur)
            prev = cur
        return out

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.roles), self.edges)


def gen_extremal_ts_split(k: int, rule=Rule.TS) -> ReductionOutput:
    """Split graph where every TS-sequence needs ``M*_TS + 2`` slides.

    Ids: ``s_1 = t_1`` is 0, ``a`` is 1, ``s_2..s_k`` are ``2..k``,
    ``t_2..t_k`` are ``k+1..2k-1`` and ``b`` is ``2k``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    b = _Builder()
    s1 = b.add("s", 1)
    a = b.add("a")
    ss = [b.add("s", i) for i in range(2, k + 1)]
    ts = [b.add("t", i) for i in range(2, k + 1)]
    bb = b.add("b")
    b.join(s1, a)
    for v in ss + ts:
        b.join(s1, v)
    b.join(a, bb)
    inst = DrdsInstance(b.graph(), 2, rule, [s1] + ss, [s1] + ts, clique={s1, a})
    return ReductionOutput(inst, tuple(b.roles))


def gen_extremal_tj_split(k: int, rule=Rule.TJ) -> ReductionOutput:
    """Split graph where every TJ-sequence needs ``M*_TJ + 1`` jumps.

    For block ``i`` (0-based): ``v_i1, v_i2, v_i3`` are ``3i, 3i+1, 3i+2`` in
    the clique and ``u_i1, u_i2, w_i1`` are ``3k+3i, 3k+3i+1, 3k+3i+2``.
    ``w_i1`` sees ``v_i2`` and ``v_(i+1)3`` (cyclically), so a direct jump
    ``u_i1 -> w_i1`` strands ``u_i2`` and any other direct jump strands ``u_i1``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    b = _Builder()
    v = [[b.add("v", i + 1, j) for j in (1, 2, 3)] for i in range(k)]
    u1, u2, w1 = [], [], []
    for i in range(k):
        u1.append(b.add("u", i + 1, 1))
        u2.append(b.add("u", i + 1, 2))
        w1.append(b.add("w", i + 1, 1))
    clique = [x for block in v for x in block]
    for x, y in combinations(clique, 2):
        b.join(x, y)
    for i in range(k):
        b.join(u1[i], v[i][0])
        b.join(u1[i], v[i][1])
        b.join(u2[i], v[i][0])
        b.join(u2[i], v[i][2])
        b.join(w1[i], v[(i + 1) % k][2])
        # Without this edge neither endpoint set 2-dominates the graph.
        b.join(w1[i], v[i][1])
    inst = DrdsInstance(b.graph(), 2, rule, u1, w1, clique=clique)
    return ReductionOutput(inst, tuple(b.roles))


def _check_covers(g: Graph, covers, trust: bool, limit: int = 20):
    covers = [frozenset(c) for c in covers]
    for c in covers:
        if any(not 0 <= v < g.n for v in c) or not is_vertex_cover(g, c):
            raise PreconditionError(f"{sorted(c)} is not a vertex cover")
    if trust:
        if len({len(c) for c in covers}) > 1:
            raise PreconditionError("covers differ in size")
        return covers
    if g.n > limit:
        raise PreconditionError(f"cannot certify minimality for n={g.n} > {limit}; trust the covers")
    tau, _ = min_vertex_cover(g, limit)
    for c in covers:
        if len(c) != tau:
            raise PreconditionError(f"{sorted(c)} is not a minimum vertex cover (tau={tau})")
    return covers


def reduce_vc_planar(g: Graph, r: int, cs, ct, rule=Rule.TS, trust_covers=False) -> ReductionOutput:
    """Close every edge ``v_i v_j`` into a cycle of length ``2r + 1``."""
    cs, ct = _check_covers(g, (cs, ct), trust_covers)
    b = _Builder()
    for v in range(g.n):
        b.add("vertex", v)
    for i, j in g.edges():
        b.join(i, j)
        prev = i
        for p in range(1, 2 * r):
            cur = b.add("edge-path", i, j, p)
            b.join(prev, cur)
            prev = cur
        b.join(prev, j)
    inst = DrdsInstance(b.graph(), r, rule, cs, ct)
    return ReductionOutput(inst, tuple(b.roles))


def reduce_vc_chordal(g: Graph, r: int, cs, ct, rule=Rule.TS, trust_covers=False) -> ReductionOutput:
    """Make ``V(G)`` a clique; each edge gets two common neighbours with pendant paths."""
    cs, ct = _check_covers(g, (cs, ct), trust_covers)
    b = _Builder()
    for v in range(g.n):
        b.add("vertex", v)
    for i, j in combinations(range(g.n), 2):
        b.join(i, j)
    for i, j in g.edges():
        for p in (1, 2):
            x = b.add("edge-copy", i, j, p)
            b.join(x, i)
            b.join(x, j)
            b.path_from(x, r - 1, "pendant", i, j, p)
    inst = DrdsInstance(b.graph(), r, rule, cs, ct)
    return ReductionOutput(inst, tuple(b.roles))


def reduce_vc_bipartite(g: Graph, r: int, cs, ct, rule=Rule.TS, trust_covers=False) -> ReductionOutput:
    """Subdivide edges into paths of length ``2r``, add an apex with a tail of length ``r``."""
    cs, ct = _check_covers(g, (cs, ct), trust_covers)
    b = _Builder()
    for v in range(g.n):
        b.add("vertex", v)
    for i, j in g.edges():
        prev = i
        for p in range(1, 2 * r):
            cur = b.add("edge-path", i, j, p)
            b.join(prev, cur)
            prev = cur
        b.join(prev, j)
    x = b.add("apex")
    for v in range(g.n):
        b.join(x, v)
    b.path_from(x, r, "apex-path")
    inst = DrdsInstance(b.graph(), r, rule, cs | {x}, ct | {x})
    return ReductionOutput(inst, tuple(b.roles), {"apex": x})


# Seeded random graphs for tests and the ``gen random-*`` commands.


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_split(n: int, rng: random.Random, p: float = 0.4) -> tuple[Graph, frozenset]:
    """Connected split graph; every independent vertex keeps a clique neighbour."""
    if n < 2:
        raise ValueError("split generator needs n >= 2")
    order = list(range(n))
    rng.shuffle(order)
    size = rng.randint(1, n - 1)
    clique, indep = sorted(order[:size]), sorted(order[size:])
    edges = list(combinations(clique, 2))
    for s in indep:
        nbrs = [c for c in clique if rng.random() < p] or [rng.choice(clique)]
        edges.extend((min(s, c), max(s, c)) for c in nbrs)
    return Graph.from_edges(n, edges), frozenset(clique)


def random_graph(n: int, rng: random.Random, p: float = 0.3, connected: bool = False) -> Graph:
    while True:
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if not connected or is_connected(g):
            return g


def random_drds(g: Graph, r: int, k: int, rng: random.Random, tries: int = 200):
    """A random size-``k`` DrDS, or None if sampling finds none."""
    for _ in range(tries):
        d = rng.sample(range(g.n), k)
        if is_drds(g, r, d):
            return frozenset(d)
    return None


def random_instance(g: Graph, r: int, rule, rng: random.Random, clique=None) -> DrdsInstance | None:
    """Pair two random equal-size DrDSs on ``g``; None if none were found."""
    sizes = list(range(1, g.n + 1))
    rng.shuffle(sizes)
    for k in sizes:
        ds = random_drds(g, r, k, rng)
        dt = random_drds(g, r, k, rng)
        if ds is not None and dt is not None:
            return DrdsInstance(g, r, rule, ds, dt, clique)
    return None
