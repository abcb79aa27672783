"""Line-oriented instance and sequence text formats.

Instance files::

    # comment
    p <n> <m>
    <u> <v>            (m edge lines, 0-indexed)
    K <k> <ids...>     optional clique part of a split graph
    r <radius>
    rule TS|TJ
    S <k> <ids...>     source token set
    T <k> <ids...>     target token set

Sequence files hold one ``mv <from> <to>`` per line; a leading ``YES <len>``
line (as printed by ``drdsr solve``) is accepted and checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DrdsInstance, Move, ReconfSequence, Rule
from .errors import InvalidInstance, ParseError
from .graph import Graph, check_split_partition


@dataclass(frozen=True)
class InstanceFile:
    graph: Graph
    clique: frozenset | None = None
    r: int | None = None
    rule: Rule | None = None
    source: frozenset | None = None
    target: frozenset | None = None

    def to_instance(self, r=None, rule=None) -> DrdsInstance:
        """Build a validated instance; explicit arguments override the file."""
        r = r if r is not None else self.r
        rule = rule if rule is not None else self.rule
        missing = [name for name, v in (("r", r), ("rule", rule), ("S", self.source),
                                        ("T", self.target)) if v is None]
        if missing:
            raise InvalidInstance(f"instance lacks {', '.join(missing)}")
        return DrdsInstance(self.graph, r, rule, self.source, self.target, self.clique)


def _lines(text):
    if isinstance(text, bytes):
        text = text.decode()
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(no, tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(no, f"expected integers, got {' '.join(tokens)!r}") from None


def _id_list(no, parts, n):
    vals = _ints(no, parts[1:])
    if not vals or vals[0] != len(vals) - 1:
        raise ParseError(no, f"'{parts[0]}' count does not match the number of ids")
    ids = vals[1:]
    for v in ids:
        if not 0 <= v < n:
            raise ParseError(no, f"vertex id {v} out of range [0, {n})")
    if len(set(ids)) != len(ids):
        raise ParseError(no, f"duplicate vertex id in '{parts[0]}' line")
    return frozenset(ids)


def parse_instance(text) -> InstanceFile:
    n = None
    m = 0
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    fields: dict = {}
    for no, parts in _lines(text):
        head = parts[0]
        if n is None:
            if head != "p" or len(parts) != 3:
                raise ParseError(no, "expected header 'p <n> <m>'")
            n, m = _ints(no, parts[1:])
            if n < 0 or m < 0:
                raise ParseError(no, "negative size in header")
            header_line = no
            continue
        if head == "p":
            raise ParseError(no, "duplicate header")
        if head in ("K", "S", "T"):
            if head in fields:
                raise ParseError(no, f"duplicate '{head}' line")
            fields[head] = _id_list(no, parts, n)
        elif head == "r":
            if len(parts) != 2:
                raise ParseError(no, "expected 'r <radius>'")
            (radius,) = _ints(no, parts[1:])
            if radius < 1:
                raise ParseError(no, "radius must be >= 1")
            fields["r"] = radius
        elif head == "rule":
            if len(parts) != 2 or parts[1].upper() not in ("TS", "TJ"):
                raise ParseError(no, "expected 'rule TS|TJ'")
            fields["rule"] = Rule(parts[1].upper())
        else:
            if len(parts) != 2:
                raise ParseError(no, f"unrecognised line {' '.join(parts)!r}")
            u, v = _ints(no, parts)
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(no, f"vertex id {x} out of range [0, {n})")
            if u == v:
                raise ParseError(no, f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(no, f"duplicate edge {u}-{v}")
            seen.add(key)
            edges.append(key)
    if n is None:
        raise ParseError(1, "missing header 'p <n> <m>'")
    if len(edges) != m:
        raise ParseError(header_line, f"header declares {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    clique = fields.get("K")
    if clique is not None:
        try:
            check_split_partition(g, clique)
        except ValueError as exc:
            raise ParseError(header_line, f"K line is not a split partition: {exc}") from None
    return InstanceFile(g, clique, fields.get("r"), fields.get("rule"),
                        fields.get("S"), fields.get("T"))


def parse_graph(text) -> Graph:
    return parse_instance(text).graph


def _ids(tag, members):
    ids = sorted(members)
    return " ".join([tag, str(len(ids))] + [str(v) for v in ids])


def format_instance(g: Graph, r=None, rule=None, source=None, target=None, clique=None,
                    comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    if clique is not None:
        lines.append(_ids("K", clique))
    if r is not None:
        lines.append(f"r {r}")
    if rule is not None:
        lines.append(f"rule {Rule.parse(rule).value}")
    if source is not None:
        lines.append(_ids("S", source))
    if target is not None:
        lines.append(_ids("T", target))
    return "\n".join(lines) + "\n"


def format_drds_instance(inst: DrdsInstance, comments=()) -> str:
    return format_instance(inst.graph, inst.r, inst.rule, inst.source, inst.target,
                           inst.clique, comments)


def parse_moves(text) -> list[Move]:
    moves = []
    declared = None
    for no, parts in _lines(text):
        if parts[0] == "YES" and not moves and declared is None:
            if len(parts) != 2:
                raise ParseError(no, "expected 'YES <len>'")
            (declared,) = _ints(no, parts[1:])
            continue
        if parts[0] != "mv" or len(parts) != 3:
            raise ParseError(no, "expected 'mv <from> <to>'")
        a, b = _ints(no, parts[1:])
        if a == b:
            raise ParseError(no, "a move must change the vertex")
        moves.append(Move(a, b))
    if declared is not None and declared != len(moves):
        raise ParseError(1, f"YES line declares {declared} moves, found {len(moves)}")
    return moves


def format_moves(seq: ReconfSequence) -> str:
    return "".join(f"{mv}\n" for mv in seq.moves)
