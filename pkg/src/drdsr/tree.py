"""Minimum distance-r dominating sets on trees and TJ-reconfiguration on trees.

``min_drds_tree`` is the greedy bottom-up algorithm that repeatedly picks a
subtree of height exactly ``r`` and puts its root into ``D*``. The order in
which ``D*`` grows defines a canonical partition of the tree into subtrees,
each of which meets every DrDS; that makes TJ-reconfiguration between
equal-size DrDSs always possible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DrdsInstance, Move, ReconfSequence, Rule
from .errors import NotATree, PreconditionError
from .graph import Graph, is_tree

INF = math.inf


@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: tuple  # root is its own parent
    children: tuple  # per-vertex tuple of children, increasing ids
    order: tuple  # post-order

    @classmethod
    def build(cls, t: Graph, root: int = 0) -> "RootedTree":
        if not is_tree(t):
            raise NotATree("graph is not a tree")
        if not 0 <= root < t.n:
            raise ValueError(f"root {root} out of range")
        parent = [-1] * t.n
        parent[root] = root
        children: list[list[int]] = [[] for _ in range(t.n)]
        preorder = []
        stack = [root]
        while stack:
            v = stack.pop()
            preorder.append(v)
            for w in reversed(t.adj[v]):
                if parent[w] < 0:
                    parent[w] = v
                    children[v].append(w)
                    stack.append(w)
        for kids in children:
            kids.sort()
        return cls(root, tuple(parent), tuple(tuple(c) for c in children),
                   tuple(reversed(preorder)))

    def heights(self) -> list[int]:
        h = [0] * len(self.parent)
        for v in self.order:
            for w in self.children[v]:
                h[v] = max(h[v], h[w] + 1)
        return h


@dataclass(frozen=True)
class TreeDpState:
    h: tuple  # residual subtree heights, -1 once removed
    delta: tuple  # distance to D* as returned by the DFS, or INF


@dataclass(frozen=True)
class CanonicalPartition:
    canonical: tuple  # D* in order of addition
    cell: tuple  # per-vertex owner in D*

    def cells(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.canonical}
        for w, owner in enumerate(self.cell):
            out[owner].append(w)
        return out


def min_drds_tree(t: Graph, r: int, root: int = 0) -> tuple[list[int], TreeDpState]:
    """Minimum DrDS of a tree, listed in the order the DFS adds vertices.

    After the children of ``v`` are handled, three cases remain: the subtree
    is already dominated from below (``h + delta <= r``, drop it and report
    ``delta``), it has height exactly ``r`` (take ``v``), or it still needs a
    dominator from above (report INF).
    """
    if r < 1:
        raise ValueError("radius must be >= 1")
    rt = RootedTree.build(t, root)
    h = rt.heights()
    delta: list = [INF] * t.n
    chosen: list[int] = []
    nxt = [0] * t.n
    stack = [root]
    entered = [False] * t.n
    while stack:
        v = stack[-1]
        if not entered[v]:
            entered[v] = True
            if h[v] == r:
                chosen.append(v)
                h[v], delta[v] = -1, 0
                stack.pop()
                _report(stack, delta, 0)
                continue
        kids = rt.children[v]
        i = nxt[v]
        while i < len(kids) and h[kids[i]] < r:
            i += 1
        if i < len(kids):
            nxt[v] = i + 1
            stack.append(kids[i])
            continue
        h[v] = max((h[w] + 1 for w in kids), default=0)
        if h[v] + delta[v] <= r:
            h[v] = -1
        elif h[v] == r:
            chosen.append(v)
            h[v], delta[v] = -1, 0
        else:
            delta[v] = INF
        stack.pop()
        _report(stack, delta, delta[v])
    if delta[root] == INF:
        chosen.append(root)
    return chosen, TreeDpState(tuple(h), tuple(delta))


def _report(stack, delta, value):
    if stack:
        p = stack[-1]
        delta[p] = min(delta[p], value + 1)


def build_partition(t: Graph, canonical, root: int = 0) -> CanonicalPartition:
    """Cut the rooted tree into one subtree per member of ``D*``.

    Members are processed in addition order; each takes whatever remains of
    its rooted subtree. Vertices left over once every member is processed
    (only possible when the root is not in ``D*``) join the last cell, which
    hangs directly below them.
    """
    rt = RootedTree.build(t, root)
    canonical = tuple(canonical)
    if not canonical or len(set(canonical)) != len(canonical):
        raise PreconditionError("D* must be a non-empty duplicate-free sequence")
    cell = [-1] * t.n
    for v in canonical:
        if cell[v] >= 0:
            raise PreconditionError(f"{v} already lies in the cell of {cell[v]}")
        stack = [v]
        while stack:
            w = stack.pop()
            cell[w] = v
            stack.extend(c for c in rt.children[w] if cell[c] < 0)
    last = canonical[-1]
    cell = [last if c < 0 else c for c in cell]
    return CanonicalPartition(canonical, tuple(cell))


def canonical_partition(t: Graph, r: int, root: int = 0) -> CanonicalPartition:
    chosen, _ = min_drds_tree(t, r, root)
    return build_partition(t, chosen, root)


def _to_canonical(part: CanonicalPartition, d) -> tuple[list[Move], frozenset]:
    # In D* order, jump the smallest token of each cell onto the cell's owner.
    per_cell: dict[int, list[int]] = {}
    for x in sorted(d):
        per_cell.setdefault(part.cell[x], []).append(x)
    cur = set(d)
    moves = []
    for v in part.canonical:
        if v in cur:
            continue
        toks = per_cell.get(v)
        if not toks:
            raise PreconditionError(f"token set misses the cell of {v}; not a DrDS")
        x = toks[0]
        moves.append(Move(x, v))
        cur.discard(x)
        cur.add(v)
    return moves, frozenset(cur)


def tj_sequence_tree(inst: DrdsInstance, root: int = 0) -> ReconfSequence | None:
    """A TJ-sequence between equal-size DrDSs of a tree, None on a size mismatch."""
    if inst.rule is not Rule.TJ:
        raise PreconditionError("tree solver handles TJ only")
    if not is_tree(inst.graph):
        raise NotATree("graph is not a tree")
    if len(inst.source) != len(inst.target):
        return None
    if inst.source == inst.target:
        return ReconfSequence(inst.source)
    part = canonical_partition(inst.graph, inst.r, root)
    head, ds = _to_canonical(part, inst.source)
    tail, dt = _to_canonical(part, inst.target)
    middle = [Move(x, y) for x, y in zip(sorted(ds - dt), sorted(dt - ds))]
    back = [Move(b, a) for a, b in reversed(tail)]
    return ReconfSequence(inst.source, tuple(head + middle + back))
