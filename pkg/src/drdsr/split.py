"""Reconfiguration of distance-2 dominating sets on split graphs.

In a connected split graph ``G = (K + S, E)`` any token set meeting ``K``
2-dominates the graph, so the only move that can ever break domination is
one that takes the last token out of ``K``. Both solvers below revolve
around keeping an "anchor" token in ``K`` while everything else moves freely.

Lower bounds: ``M*_TS`` is the cheapest assignment of source to target tokens
under graph distance, ``M*_TJ = |D_s ^ D_t| / 2``. The TS solver stays within
``M*_TS + 2`` slides and the TJ solver within ``M*_TJ + 1`` jumps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DrdsInstance, Move, ReconfSequence, Rule, is_drds, solve_bounded_diameter
from .errors import NotSplit, PreconditionError
from .graph import all_pairs_distances, check_split_partition, component_diameters, split_partition
from .routing import assignment_cost, optimal_assignment


@dataclass(frozen=True)
class TargetAssignment:
    pairs: dict
    cost: float


@dataclass(frozen=True)
class MstarValue:
    rule: Rule
    value: float
    assignment: TargetAssignment | None = None


def mstar_tj(source, target) -> int:
    source, target = frozenset(source), frozenset(target)
    if len(source) != len(target):
        raise PreconditionError("M* needs equal-size token sets")
    return len(source ^ target) // 2


def mstar_ts(g, source, target, dist=None) -> TargetAssignment:
    if len(source) != len(target):
        raise PreconditionError("M* needs equal-size token sets")
    cost, pairs = optimal_assignment(dist or all_pairs_distances(g), source, target)
    return TargetAssignment(pairs, cost)


def mstar(inst: DrdsInstance) -> MstarValue:
    if inst.rule is Rule.TJ:
        return MstarValue(Rule.TJ, mstar_tj(inst.source, inst.target))
    a = mstar_ts(inst.graph, inst.source, inst.target)
    return MstarValue(Rule.TS, a.cost, a)


def _clique_of(inst: DrdsInstance) -> frozenset:
    if inst.clique is not None:
        try:
            return check_split_partition(inst.graph, inst.clique).clique
        except ValueError as exc:
            raise NotSplit(str(exc)) from None
    part = split_partition(inst.graph)
    if part is None:
        raise NotSplit("graph is not split")
    return part.clique


def _check(inst: DrdsInstance, rule: Rule) -> frozenset:
    if inst.rule is not rule:
        raise PreconditionError(f"expected a {rule.value} instance")
    if inst.r != 2:
        raise PreconditionError("this construction is for r = 2")
    clique = _clique_of(inst)
    if len(component_diameters(inst.graph)) > 1:
        raise PreconditionError("split solver needs a connected graph")
    if len(inst.source) != len(inst.target):
        raise PreconditionError("token sets differ in size")
    return clique


def ts_sequence_split(inst: DrdsInstance, slack: int = 2) -> ReconfSequence:
    """A TS-sequence of length at most ``M*_TS + slack``.

    Diameter at most 2 is free movement and routes in exactly ``M*_TS``.
    Otherwise a depth-first search runs over legal slides, charging each
    slide ``1 + delta`` where ``delta`` is the change of the optimal
    assignment cost, and never exceeding ``slack`` in total. Slides that cost
    nothing extra are tried first: clique-ward slides, then slides inside the
    clique, then slides that leave a spare token behind in the clique. When
    none is legal, the search spends the budget on a detour, typically parking
    the anchor on a free clique vertex and bringing it back at the end.
    """
    clique = _check(inst, Rule.TS)
    g = inst.graph
    src, tgt = inst.source, inst.target
    if src == tgt:
        return ReconfSequence(src)
    if max(component_diameters(g)) <= 2:
        return solve_bounded_diameter(inst)
    dist = all_pairs_distances(g)
    costs: dict[frozenset, int] = {}

    def cost(state):
        if state not in costs:
            costs[state] = assignment_cost(dist, state, tgt)
        return costs[state]

    def legal(state):
        return bool(state & clique) or is_drds(g, 2, state)

    def candidates(state, budget):
        base = cost(state)
        in_k = len(state & clique)
        out = []
        for u in sorted(state):
            for v in g.adj[u]:
                if v in state:
                    continue
                new = (state - {u}) | {v}
                extra = 1 + cost(new) - base
                if extra > budget or not legal(new):
                    continue
                if v in clique:
                    kind = 0 if u not in clique else 1
                else:
                    kind = 2 if in_k >= 2 else 3
                out.append((extra, kind, u, v, new))
        out.sort(key=lambda c: c[:4])
        return iter(out)

    failed: dict[frozenset, int] = {}
    moves: list[Move] = []
    on_path = {src}
    stack = [(src, slack, candidates(src, slack))]
    while stack:
        state, budget, it = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            failed[state] = max(failed.get(state, -1), budget)
            stack.pop()
            on_path.discard(state)
            if moves:
                moves.pop()
            continue
        extra, _, u, v, new = nxt
        left = budget - extra
        if new == tgt:
            moves.append(Move(u, v))
            return ReconfSequence(src, tuple(moves))
        if new in on_path or failed.get(new, -1) >= left:
            continue
        moves.append(Move(u, v))
        on_path.add(new)
        stack.append((new, left, candidates(new, left)))
    raise RuntimeError(f"no TS-sequence within M* + {slack} slides")


def tj_sequence_split(inst: DrdsInstance) -> ReconfSequence:
    """A TJ-sequence of length ``M*_TJ`` or ``M*_TJ + 1``.

    Source tokens leaving and target vertices to fill are paired in sorted
    order. With a token available in the clique, it anchors domination and
    its own jump (if any) is done last. Without one, a greedy direct pass is
    attempted; if it gets stuck, the first leaving token jumps into the
    clique, the others jump straight to their targets, and the anchor
    finally takes its partner's target, for one extra jump.
    """
    clique = _check(inst, Rule.TJ)
    g = inst.graph
    src, tgt = inst.source, inst.target
    leaving, arriving = sorted(src - tgt), sorted(tgt - src)
    pairs = list(zip(leaving, arriving))
    if not pairs:
        return ReconfSequence(src)
    in_k = sorted(src & clique)
    if in_k:
        fixed = [v for v in in_k if v in tgt]
        if not fixed:
            anchor = in_k[0]
            pairs.sort(key=lambda p: p[0] == anchor)
        return ReconfSequence(src, tuple(Move(x, y) for x, y in pairs))
    tgt_k = sorted(tgt & clique)
    if tgt_k:
        y0 = tgt_k[0]
        pairs.sort(key=lambda p: p[1] != y0)
        return ReconfSequence(src, tuple(Move(x, y) for x, y in pairs))
    direct = _greedy_jumps(g, src, leaving, arriving)
    if direct is not None:
        return ReconfSequence(src, tuple(direct))
    x0, y0 = pairs[0]
    c = min(clique)
    moves = [Move(x0, c)]
    moves += [Move(x, y) for x, y in pairs[1:]]
    moves.append(Move(c, y0))
    return ReconfSequence(src, tuple(moves))


def _greedy_jumps(g, src, leaving, arriving):
    # Repeatedly take the smallest legal (from, to) jump between what is left.
    cur = set(src)
    leaving, arriving = list(leaving), list(arriving)
    moves = []
    while leaving:
        for x in leaving:
            y = next((y for y in arriving if is_drds(g, 2, (cur - {x}) | {y})), None)
            if y is not None:
                break
        else:
            return None
        moves.append(Move(x, y))
        cur.discard(x)
        cur.add(y)
        leaving.remove(x)
        arriving.remove(y)
    return moves


def solve_split(inst: DrdsInstance) -> ReconfSequence | None:
    """Dispatch on ``r``; None only when the token sets differ in size."""
    if inst.r < 2:
        raise PreconditionError("split solver needs r >= 2")
    _clique_of(inst)
    if len(inst.source) != len(inst.target):
        return None
    if inst.r >= 3 or max(component_diameters(inst.graph), default=0) <= 2:
        return solve_bounded_diameter(inst)
    if inst.rule is Rule.TS:
        return ts_sequence_split(inst)
    return tj_sequence_split(inst)
