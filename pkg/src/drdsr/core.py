"""Distance-r domination, token moves, sequence verification.

Also hosts the bounded-diameter solver: once every component has diameter at
most ``r``, any single vertex of a component dominates that component, so the
only constraint left is that no component runs out of tokens.
"""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    BreaksDomination,
    InvalidInstance,
    InvalidVertex,
    MoveError,
    NotAdjacent,
    NotApplicable,
    NotAToken,
    Occupied,
)
from .graph import Graph, all_pairs_distances, component_diameters, component_index, components
from .routing import route_free


class Rule(str, enum.Enum):
    TS = "TS"
    TJ = "TJ"

    @classmethod
    def parse(cls, text) -> "Rule":
        if isinstance(text, Rule):
            return text
        try:
            return cls(str(text).upper())
        except ValueError:
            raise ValueError(f"unknown rule {text!r}; expected TS or TJ") from None


class Move(NamedTuple):
    src: int
    dst: int

    def __str__(self):
        return f"mv {self.src} {self.dst}"


def token_set(members: Iterable[int]) -> frozenset:
    members = list(members)
    out = frozenset(members)
    if len(out) != len(members):
        raise ValueError("token set has duplicates")
    return out


@dataclass(frozen=True)
class ReconfSequence:
    initial: frozenset
    moves: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "moves", tuple(Move(*mv) for mv in self.moves))

    def __len__(self):
        return len(self.moves)

    def states(self):
        """Yield every token set along the sequence, initial one included."""
        cur = set(self.initial)
        yield frozenset(cur)
        for mv in self.moves:
            cur.discard(mv.src)
            cur.add(mv.dst)
            yield frozenset(cur)

    def final(self) -> frozenset:
        for state in self.states():
            pass
        return state

    def reversed(self) -> "ReconfSequence":
        return ReconfSequence(self.final(), tuple(Move(b, a) for a, b in reversed(self.moves)))

    def then(self, other: "ReconfSequence") -> "ReconfSequence":
        return ReconfSequence(self.initial, self.moves + other.moves)


@dataclass(frozen=True)
class DrdsInstance:
    """``(G, D_s, D_t)`` under a rule; both endpoints are checked on construction."""

    graph: Graph
    r: int
    rule: Rule
    source: frozenset
    target: frozenset
    clique: frozenset | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rule", Rule.parse(self.rule))
        object.__setattr__(self, "source", token_set(self.source))
        object.__setattr__(self, "target", token_set(self.target))
        if self.clique is not None:
            object.__setattr__(self, "clique", frozenset(self.clique))
        if self.r < 1:
            raise InvalidInstance("radius must be >= 1")
        for name, d in (("source", self.source), ("target", self.target)):
            if any(not 0 <= v < self.graph.n for v in d):
                raise InvalidInstance(f"{name} contains a vertex outside the graph")
            if not is_drds(self.graph, self.r, d):
                raise InvalidInstance(f"{name} is not a distance-{self.r} dominating set")

    def with_rule(self, rule) -> "DrdsInstance":
        return DrdsInstance(self.graph, self.r, rule, self.source, self.target, self.clique)

    def swapped(self) -> "DrdsInstance":
        return DrdsInstance(self.graph, self.r, self.rule, self.target, self.source, self.clique)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    length: int
    index: int | None = None
    reason: str | None = None

    def __str__(self):
        if self.valid:
            return f"VALID {self.length}"
        return f"INVALID {self.index} {self.reason}"


def undominated(g: Graph, r: int, d: Iterable[int]) -> list[int]:
    """Vertices farther than ``r`` from every member of ``d`` (multi-source BFS)."""
    dist = [-1] * g.n
    queue = deque()
    for v in d:
        if dist[v] < 0:
            dist[v] = 0
            queue.append(v)
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return [v for v in range(g.n) if dist[v] < 0]


def is_drds(g: Graph, r: int, d: Iterable[int]) -> bool:
    if r < 1:
        raise ValueError("radius must be >= 1")
    return not undominated(g, r, d)


def apply_move(g: Graph, r: int, rule, d, mv) -> frozenset:
    """Return ``d - src + dst`` or raise the specific :class:`MoveError`."""
    rule = Rule.parse(rule)
    src, dst = mv
    for v in (src, dst):
        if not 0 <= v < g.n:
            raise InvalidVertex(f"vertex {v} not in graph")
    if src not in d:
        raise NotAToken(f"no token on {src}")
    if dst in d:
        raise Occupied(f"vertex {dst} already holds a token")
    if rule is Rule.TS and not g.has_edge(src, dst):
        raise NotAdjacent(f"{src} and {dst} are not adjacent")
    out = (frozenset(d) - {src}) | {dst}
    missed = undominated(g, r, out)
    if missed:
        raise BreaksDomination(f"vertex {missed[0]} left undominated")
    return out


def verify_sequence(inst: DrdsInstance, seq: ReconfSequence) -> Verdict:
    if seq.initial != inst.source:
        raise ValueError("sequence does not start from the instance source")
    cur = inst.source
    for i, mv in enumerate(seq.moves):
        try:
            cur = apply_move(inst.graph, inst.r, inst.rule, cur, mv)
        except MoveError as exc:
            return Verdict(False, len(seq), i, exc.reason)
    if cur != inst.target:
        return Verdict(False, len(seq), len(seq), "TargetMismatch")
    return Verdict(True, len(seq))


def solve_bounded_diameter(inst: DrdsInstance) -> ReconfSequence | None:
    """Solve instances whose components all have diameter ``<= r``.

    Raises :class:`NotApplicable` otherwise. Returns None for no-instances:
    a size mismatch, or under TS a component whose token count differs
    between source and target. Sequences have length ``M*`` of the rule.
    """
    g, r = inst.graph, inst.r
    if any(d > r for d in component_diameters(g)):
        raise NotApplicable("some component has diameter larger than r")
    src, tgt = inst.source, inst.target
    if len(src) != len(tgt):
        return None
    if src == tgt:
        return ReconfSequence(src)
    comp = component_index(g)
    if inst.rule is Rule.TJ:
        return ReconfSequence(src, tuple(_balanced_jumps(comp, src, tgt)))
    if Counter(comp[v] for v in src) != Counter(comp[v] for v in tgt):
        return None
    dist = all_pairs_distances(g)
    moves: list[tuple[int, int]] = []
    for vertices in components(g):
        vs = set(vertices)
        moves.extend(route_free(g, dist, src & vs, tgt & vs))
    return ReconfSequence(src, tuple(moves))


def _balanced_jumps(comp, src, tgt) -> list[Move]:
    # Same-component pairs first; then surplus components feed deficit ones,
    # so every component keeps at least min(|D_s ∩ C|, |D_t ∩ C|) >= 1 tokens.
    leaving = sorted(src - tgt)
    arriving = sorted(tgt - src)
    moves = []
    for x in list(leaving):
        y = next((y for y in arriving if comp[y] == comp[x]), None)
        if y is not None:
            moves.append(Move(x, y))
            leaving.remove(x)
            arriving.remove(y)
    moves.extend(Move(x, y) for x, y in zip(leaving, arriving))
    return moves
