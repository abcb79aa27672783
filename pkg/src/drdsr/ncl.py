"""Nondeterministic Constraint Logic graphs and their DrDS gadget encoding.

Gadget layout (``P(r-1)`` is a path with ``r - 1`` new vertices):

* AND main part: a bull, triangle ``x y z`` with pendants ``p`` on ``x`` and
  ``q`` on ``y``. Its ports are ``z`` (the weight-2 edge) and ``p``, ``q``
  (the two weight-1 edges, in edge-id order).
* OR main part: a claw whose three leaves are the ports, in edge-id order.
* Each port continues along ``P(r-1)`` to the endpoint of a link.
* Each NCL edge ``uv`` becomes one link: an edge between the endpoints on the
  ``u`` side and the ``v`` side, each endpoint also carrying a pendant
  ``P(r-1)``. For ``r = 1`` the ports themselves are the endpoints.

The standard token placement puts one token per link, on the endpoint of the
side the NCL edge points into.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import DrdsInstance, Rule
from .errors import InvalidInstance, ParseError
from .reductions import ReductionOutput, _Builder


@dataclass(frozen=True)
class NclEdge:
    id: int
    u: int
    v: int
    weight: int


@dataclass(frozen=True)
class NclGraph:
    kinds: tuple  # "AND" or "OR" per vertex
    edges: tuple  # NclEdge, ordered by id

    def __post_init__(self):
        n = len(self.kinds)
        incident: list[list[int]] = [[] for _ in range(n)]
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise InvalidInstance("edge ids must be 0..m-1 in order")
            if e.u == e.v or not (0 <= e.u < n and 0 <= e.v < n):
                raise InvalidInstance(f"edge {e.id} has a bad endpoint")
            if e.weight not in (1, 2):
                raise InvalidInstance(f"edge {e.id} weight must be 1 or 2")
            incident[e.u].append(e.weight)
            incident[e.v].append(e.weight)
        for v, kind in enumerate(self.kinds):
            want = [1, 1, 2] if kind == "AND" else [2, 2, 2]
            if kind not in ("AND", "OR"):
                raise InvalidInstance(f"vertex {v} has unknown type {kind!r}")
            if sorted(incident[v]) != want:
                raise InvalidInstance(f"{kind} vertex {v} needs incident weights {want}")

    @property
    def n(self) -> int:
        return len(self.kinds)

    def incident(self, v: int) -> list[NclEdge]:
        return [e for e in self.edges if v in (e.u, e.v)]


@dataclass(frozen=True)
class NclConfig:
    heads: tuple  # per edge, the vertex it points into


def is_valid_config(ncl: NclGraph, cfg: NclConfig) -> bool:
    inflow = [0] * ncl.n
    for e, head in zip(ncl.edges, cfg.heads):
        if head not in (e.u, e.v):
            return False
        inflow[head] += e.weight
    return len(cfg.heads) == len(ncl.edges) and all(w >= 2 for w in inflow)


def reverse_edge(ncl: NclGraph, cfg: NclConfig, eid: int) -> NclConfig:
    e = ncl.edges[eid]
    heads = list(cfg.heads)
    heads[eid] = e.u if heads[eid] == e.v else e.v
    return NclConfig(tuple(heads))


def config_reachable(ncl: NclGraph, start: NclConfig, goal: NclConfig) -> bool:
    """Single-edge-reversal BFS over valid orientations."""
    for c in (start, goal):
        if not is_valid_config(ncl, c):
            raise InvalidInstance("configuration violates an in-weight constraint")
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            return True
        for eid in range(len(ncl.edges)):
            nxt = reverse_edge(ncl, cur, eid)
            if nxt not in seen and is_valid_config(ncl, nxt):
                seen.add(nxt)
                queue.append(nxt)
    return False


def valid_configs(ncl: NclGraph) -> list[NclConfig]:
    out = []
    for mask in range(1 << len(ncl.edges)):
        heads = tuple(e.v if mask >> e.id & 1 else e.u for e in ncl.edges)
        cfg = NclConfig(heads)
        if is_valid_config(ncl, cfg):
            out.append(cfg)
    return out


def parse_ncl(text) -> tuple[NclGraph, NclConfig]:
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    kinds: dict[int, str] = {}
    edges: dict[int, tuple] = {}
    for no, raw in enumerate(text.splitlines(), 1):
        parts = raw.split("#", 1)[0].split()
        if not parts:
            continue
        try:
            if header is None:
                if parts[0] != "ncl" or len(parts) != 3:
                    raise ParseError(no, "expected header 'ncl <n> <m>'")
                header = (int(parts[1]), int(parts[2]))
            elif parts[0] == "v" and len(parts) == 3:
                vid, kind = int(parts[1]), parts[2].upper()
                if vid in kinds or kind not in ("AND", "OR"):
                    raise ParseError(no, "duplicate vertex or unknown type")
                kinds[vid] = kind
            elif parts[0] == "e" and len(parts) == 6:
                eid, u, v, w = (int(x) for x in parts[1:5])
                if eid in edges or parts[5] not in ("uv", "vu"):
                    raise ParseError(no, "duplicate edge id or direction not uv|vu")
                edges[eid] = (u, v, w, v if parts[5] == "uv" else u)
            else:
                raise ParseError(no, f"unrecognised line {raw.strip()!r}")
        except ValueError:
            raise ParseError(no, "expected integers") from None
    if header is None:
        raise ParseError(1, "missing header 'ncl <n> <m>'")
    n, m = header
    if sorted(kinds) != list(range(n)) or sorted(edges) != list(range(m)):
        raise ParseError(1, "vertex and edge ids must be exactly 0..n-1 and 0..m-1")
    try:
        ncl = NclGraph(tuple(kinds[v] for v in range(n)),
                       tuple(NclEdge(i, *edges[i][:3]) for i in range(m)))
    except InvalidInstance as exc:
        raise ParseError(1, str(exc)) from None
    return ncl, NclConfig(tuple(edges[i][3] for i in range(m)))


def format_ncl(ncl: NclGraph, cfg: NclConfig) -> str:
    lines = [f"ncl {ncl.n} {len(ncl.edges)}"]
    lines += [f"v {v} {kind}" for v, kind in enumerate(ncl.kinds)]
    for e, head in zip(ncl.edges, cfg.heads):
        lines.append(f"e {e.id} {e.u} {e.v} {e.weight} {'uv' if head == e.v else 'vu'}")
    return "\n".join(lines) + "\n"


def _ports(ncl: NclGraph, v: int) -> dict[int, str]:
    """Slot name (a, b, c) per incident edge id."""
    inc = sorted(ncl.incident(v), key=lambda e: e.id)
    if ncl.kinds[v] == "AND":
        inc.sort(key=lambda e: e.weight != 2)
    return {e.id: slot for e, slot in zip(inc, "abc")}


def ncl_graph_to_drds(ncl: NclGraph, r: int) -> tuple:
    """Build the gadget graph; return (builder, endpoint map ``(edge, vertex) -> id``)."""
    if r < 1:
        raise ValueError("radius must be >= 1")
    b = _Builder()
    port_vertex: dict[tuple[int, str], int] = {}
    for v, kind in enumerate(ncl.kinds):
        if kind == "AND":
            x, y, z = b.add("and", v, "x"), b.add("and", v, "y"), b.add("and", v, "z")
            p, q = b.add("and", v, "p"), b.add("and", v, "q")
            for s, t in ((x, y), (y, z), (x, z), (x, p), (y, q)):
                b.join(s, t)
            port_vertex.update({(v, "a"): z, (v, "b"): p, (v, "c"): q})
        else:
            center = b.add("or", v, "center")
            for slot in "abc":
                leaf = b.add("or", v, slot)
                b.join(center, leaf)
                port_vertex[(v, slot)] = leaf
    endpoint: dict[tuple[int, int], int] = {}
    for v in range(ncl.n):
        for eid, slot in sorted(_ports(ncl, v).items()):
            port = port_vertex[(v, slot)]
            path = b.path_from(port, r - 1, "port-path", v, slot)
            endpoint[(eid, v)] = path[-1] if path else port
    for e in ncl.edges:
        eu, ev = endpoint[(e.id, e.u)], endpoint[(e.id, e.v)]
        b.join(eu, ev)
        b.roles[eu] = b.roles[eu] + ("link", e.id)
        b.roles[ev] = b.roles[ev] + ("link", e.id)
        b.path_from(eu, r - 1, "pendant", e.id, e.u)
        b.path_from(ev, r - 1, "pendant", e.id, e.v)
    return b, endpoint


def standard_placement(endpoint: dict, ncl: NclGraph, cfg: NclConfig) -> frozenset:
    if not is_valid_config(ncl, cfg):
        raise InvalidInstance("configuration violates an in-weight constraint")
    return frozenset(endpoint[(e.id, head)] for e, head in zip(ncl.edges, cfg.heads))


def ncl_to_drdsr(ncl: NclGraph, cfg: NclConfig, r: int, rule=Rule.TS,
                 target: NclConfig | None = None) -> ReductionOutput:
    """Gadget graph with the standard placements of ``cfg`` (and ``target``)."""
    b, endpoint = ncl_graph_to_drds(ncl, r)
    g = b.graph()
    src = standard_placement(endpoint, ncl, cfg)
    tgt = standard_placement(endpoint, ncl, target or cfg)
    inst = DrdsInstance(g, r, rule, src, tgt)
    return ReductionOutput(inst, tuple(b.roles), {"endpoint": endpoint})
