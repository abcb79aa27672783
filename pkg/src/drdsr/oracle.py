"""Exhaustive ground truth: reconfiguration-graph BFS, gamma_r, vertex covers.

Token sets are encoded as Python ints used as bitsets (bit ``v`` set iff a
token sits on ``v``), which works for any ``n``; comparisons between states
never depend on the encoding.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .core import DrdsInstance, Move, ReconfSequence, Rule
from .errors import LimitExceeded, PreconditionError
from .graph import Graph, bfs_distances

DEFAULT_MAX_STATES = 2_000_000


@dataclass(frozen=True)
class OracleResult:
    reachable: bool
    opt: float  # int when reachable, math.inf otherwise
    witness: ReconfSequence | None = None
    explored: int = 0


def state_key(members) -> int:
    key = 0
    for v in members:
        key |= 1 << v
    return key


def members_of(key: int) -> list[int]:
    out = []
    while key:
        low = key & -key
        out.append(low.bit_length() - 1)
        key ^= low
    return out


def ball_masks(g: Graph, r: int) -> list[int]:
    """Bitmask of the closed distance-``r`` ball around every vertex."""
    out = []
    for v in range(g.n):
        d = bfs_distances(g, v, limit=r).dist
        out.append(state_key(u for u in range(g.n) if d[u] <= r))
    return out


class _Space:
    """Legal moves between equal-size DrDSs, generated in (from, to) order."""

    def __init__(self, g: Graph, r: int, rule: Rule):
        self.g = g
        self.rule = rule
        self.ball = ball_masks(g, r)
        self.full = (1 << g.n) - 1

    def moves(self, key: int):
        toks = members_of(key)
        ball, full = self.ball, self.full
        k = len(toks)
        # cover of all tokens except toks[i], via prefix/suffix ORs
        prefix = [0] * (k + 1)
        for i, u in enumerate(toks):
            prefix[i + 1] = prefix[i] | ball[u]
        suffix = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            suffix[i] = suffix[i + 1] | ball[toks[i]]
        for i, u in enumerate(toks):
            missing = full & ~(prefix[i] | suffix[i + 1])
            if self.rule is Rule.TS:
                cands = self.g.adj[u]
            elif missing:
                low = missing & -missing
                cands = members_of(ball[low.bit_length() - 1])
            else:
                cands = range(self.g.n)
            base = key ^ (1 << u)
            for v in cands:
                bit = 1 << v
                if key & bit or ball[v] & missing != missing:
                    continue
                yield u, v, base | bit


def oracle_shortest(inst: DrdsInstance, max_states: int = DEFAULT_MAX_STATES,
                    max_k: int | None = None) -> OracleResult:
    """Exact ``opt`` with the lexicographically least shortest witness.

    BFS runs backwards from the target (moves are reversible) until the source
    is labelled; the witness then walks forward taking, at every step, the
    smallest ``(from, to)`` move that lowers the distance to the target.
    """
    src, tgt = state_key(inst.source), state_key(inst.target)
    k = len(inst.source)
    if max_k is not None and k > max_k:
        raise LimitExceeded(f"k={k} exceeds max_k={max_k}")
    if len(inst.source) != len(inst.target):
        return OracleResult(False, math.inf)
    space = _Space(inst.graph, inst.r, inst.rule)
    dist = {tgt: 0}
    queue = deque([tgt])
    while queue and src not in dist:
        cur = queue.popleft()
        nd = dist[cur] + 1
        for _, _, nxt in space.moves(cur):
            if nxt not in dist:
                dist[nxt] = nd
                if len(dist) > max_states:
                    raise LimitExceeded(f"more than {max_states} states explored")
                queue.append(nxt)
    if src not in dist:
        return OracleResult(False, math.inf, explored=len(dist))
    moves = []
    cur = src
    while cur != tgt:
        want = dist[cur] - 1
        u, v, cur = next(m for m in space.moves(cur) if dist.get(m[2]) == want)
        moves.append(Move(u, v))
    return OracleResult(True, len(moves), ReconfSequence(inst.source, tuple(moves)), len(dist))


def gamma_r(g: Graph, r: int, limit: int = 20) -> tuple[int, tuple[int, ...]]:
    """Minimum DrDS size and the lexicographically first witness."""
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds limit {limit}")
    if g.n == 0:
        return 0, ()
    ball = ball_masks(g, r)
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            cover = 0
            for v in combo:
                cover |= ball[v]
            if cover == full:
                return k, combo
    raise AssertionError("V(G) always dominates itself")


def is_vertex_cover(g: Graph, cover) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges())


def min_vertex_cover(g: Graph, limit: int = 20) -> tuple[int, list[frozenset]]:
    """``tau(G)`` and every minimum vertex cover, in lexicographic order."""
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds limit {limit}")
    edges = [(1 << u) | (1 << v) for u, v in g.edges()]
    for k in range(g.n + 1):
        found = []
        for combo in combinations(range(g.n), k):
            key = state_key(combo)
            if all(key & e for e in edges):
                found.append(frozenset(combo))
        if found:
            return k, found
    raise AssertionError("V(G) is always a vertex cover")


def min_vcr_reachable(g: Graph, cs, ct, rule, limit: int = 20) -> bool:
    """Reachability between minimum vertex covers under TS or TJ."""
    rule = Rule.parse(rule)
    tau, _ = min_vertex_cover(g, limit)
    cs, ct = frozenset(cs), frozenset(ct)
    for name, c in (("source", cs), ("target", ct)):
        if len(c) != tau or not is_vertex_cover(g, c):
            raise PreconditionError(f"{name} is not a minimum vertex cover")
    edges = [(1 << u) | (1 << v) for u, v in g.edges()]
    start, goal = state_key(cs), state_key(ct)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            return True
        for u in members_of(cur):
            cands = g.adj[u] if rule is Rule.TS else range(g.n)
            for v in cands:
                if cur >> v & 1:
                    continue
                nxt = cur ^ (1 << u) | (1 << v)
                if nxt not in seen and all(nxt & e for e in edges):
                    seen.add(nxt)
                    queue.append(nxt)
    return False
