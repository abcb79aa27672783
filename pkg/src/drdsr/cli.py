"""Command-line front end: ``drdsr {verify,solve,oracle,mstar,gen,classify}``.

Exit codes: 0 yes/valid, 1 no/invalid, 2 malformed input, 3 unsupported or
over a search limit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .core import DrdsInstance, ReconfSequence, Rule, solve_bounded_diameter, verify_sequence
from .errors import (
    DrdsError,
    InvalidInstance,
    LimitExceeded,
    NotApplicable,
    ParseError,
    PreconditionError,
)
from .formats import format_drds_instance, format_moves, parse_instance, parse_moves
from .graph import classify, graph_power, is_tree, split_partition
from .ncl import ncl_to_drdsr, parse_ncl
from .oracle import DEFAULT_MAX_STATES, min_vertex_cover, oracle_shortest
from .reductions import (
    base_graph,
    gen_extremal_tj_split,
    gen_extremal_ts_split,
    random_graph,
    random_instance,
    random_split,
    random_tree,
    reduce_vc_bipartite,
    reduce_vc_chordal,
    reduce_vc_planar,
)
from .split import mstar_tj, mstar_ts, solve_split
from .tree import tj_sequence_tree

EXIT_YES, EXIT_NO, EXIT_PARSE, EXIT_UNSUPPORTED = 0, 1, 2, 3

GENERATORS = ("extremal-ts", "extremal-tj", "planar", "chordal", "bipartite", "ncl",
              "random-tree", "random-split", "random-graph")


class Unsupported(DrdsError):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(args):
    text = _read(args.instance)
    return parse_instance(text).to_instance(r=args.r, rule=args.rule)


def _print_sequence(seq: ReconfSequence, head: str):
    print(f"{head} {len(seq)}")
    sys.stdout.write(format_moves(seq))


def cmd_verify(args) -> int:
    inst = _load(args)
    moves = parse_moves(_read(args.sequence))
    verdict = verify_sequence(inst, ReconfSequence(inst.source, tuple(moves)))
    print(verdict)
    return EXIT_YES if verdict.valid else EXIT_NO


def solve(inst, use_oracle=False, via_power=False, max_states=DEFAULT_MAX_STATES, root=0):
    """Run the first applicable solver; raise :class:`Unsupported` if none is."""
    try:
        return solve_bounded_diameter(inst)
    except NotApplicable:
        pass
    g = inst.graph
    if inst.rule is Rule.TJ and is_tree(g):
        return tj_sequence_tree(inst, root)
    if inst.r >= 2 and (inst.clique is not None or split_partition(g) is not None):
        try:
            return solve_split(inst)
        except PreconditionError:
            pass
    if via_power and inst.rule is Rule.TJ:
        # A jump only cares about domination, which G^r at radius 1 preserves.
        powered = DrdsInstance(graph_power(g, inst.r), 1, Rule.TJ, inst.source, inst.target)
        res = oracle_shortest(powered, max_states=max_states)
        return res.witness if res.reachable else None
    if use_oracle:
        res = oracle_shortest(inst, max_states=max_states)
        return res.witness if res.reachable else None
    raise Unsupported("no polynomial-time solver applies; try --oracle")


def cmd_solve(args) -> int:
    inst = _load(args)
    try:
        seq = solve(inst, args.oracle, args.via_power, args.max_states, args.root)
    except Unsupported:
        print("UNSUPPORTED")
        return EXIT_UNSUPPORTED
    if seq is None:
        print("NO")
        return EXIT_NO
    _print_sequence(seq, "YES")
    return EXIT_YES


def cmd_oracle(args) -> int:
    inst = _load(args)
    if inst.graph.n > args.max_n:
        raise LimitExceeded(f"n={inst.graph.n} exceeds --max-n {args.max_n}")
    res = oracle_shortest(inst, max_states=args.max_states)
    if not res.reachable:
        print("UNREACHABLE")
        return EXIT_NO
    _print_sequence(res.witness, "OPT")
    return EXIT_YES


def cmd_mstar(args) -> int:
    inst = _load(args)
    if len(inst.source) != len(inst.target):
        print("NO token sets differ in size")
        return EXIT_NO
    ts = mstar_ts(inst.graph, inst.source, inst.target).cost
    print(f"MSTAR_TS {ts}")
    print(f"MSTAR_TJ {mstar_tj(inst.source, inst.target)}")
    return EXIT_YES


def cmd_classify(args) -> int:
    inst = parse_instance(_read(args.instance))
    rep = classify(inst.graph)
    split = rep.split
    if inst.clique is not None:
        split_line = "yes K " + " ".join(map(str, sorted(inst.clique)))
    elif split is not None:
        split_line = "yes K " + " ".join(map(str, sorted(split.clique)))
    else:
        split_line = "no"
    yn = {True: "yes", False: "no"}
    print(f"connected {yn[rep.connected]}")
    print(f"tree {yn[rep.tree]}")
    print(f"split {split_line}".rstrip())
    print(f"bipartite {yn[rep.bipartite]}")
    print("diameters " + " ".join(map(str, rep.diameters)))
    return EXIT_YES


def _cover_arg(text):
    if text is None:
        return None
    return frozenset(int(x) for x in text.split(",") if x.strip())


def _generate(args):
    """Return (instance, provenance or None, comments)."""
    name = args.name
    rule = args.rule
    if name == "extremal-ts":
        out = gen_extremal_ts_split(args.k, rule or Rule.TS)
        return out.instance, out.provenance, [f"extremal TS split instance, k={args.k}"]
    if name == "extremal-tj":
        out = gen_extremal_tj_split(args.k, rule or Rule.TJ)
        return out.instance, out.provenance, [f"extremal TJ split instance, k={args.k}"]
    if name in ("planar", "chordal", "bipartite"):
        g = base_graph(args.base)
        cs, ct = _cover_arg(args.cs), _cover_arg(args.ct)
        if cs is None or ct is None:
            if args.trust_covers:
                raise PreconditionError("--trust-covers needs explicit --cs and --ct")
            _, covers = min_vertex_cover(g)
            cs = covers[0] if cs is None else cs
            ct = covers[-1] if ct is None else ct
        red = {"planar": reduce_vc_planar, "chordal": reduce_vc_chordal,
               "bipartite": reduce_vc_bipartite}[name]
        out = red(g, args.r or 2, cs, ct, rule or Rule.TS, trust_covers=args.trust_covers)
        note = f"{name} reduction of {args.base}, covers {sorted(cs)} -> {sorted(ct)}"
        return out.instance, out.provenance, [note]
    if name == "ncl":
        if not args.ncl:
            raise PreconditionError("gen ncl needs --ncl FILE")
        ncl, cfg = parse_ncl(_read(args.ncl))
        goal = parse_ncl(_read(args.ncl_target))[1] if args.ncl_target else None
        out = ncl_to_drdsr(ncl, cfg, args.r or 1, rule or Rule.TS, goal)
        return out.instance, out.provenance, ["NCL gadget graph, standard token placements"]
    rng = random.Random(args.seed)
    r = args.r or 2
    rule = rule or Rule.TJ
    clique = None
    if name == "random-tree":
        g = random_tree(args.n, rng)
    elif name == "random-split":
        g, clique = random_split(args.n, rng, args.p)
    else:
        g = random_graph(args.n, rng, args.p, connected=True)
    inst = random_instance(g, r, rule, rng, clique)
    return inst, None, [f"{name} n={args.n} seed={args.seed}"]


def cmd_gen(args) -> int:
    inst, provenance, comments = _generate(args)
    sys.stdout.write(format_drds_instance(inst, comments))
    if args.provenance:
        if provenance is None:
            raise PreconditionError(f"generator {args.name} has no provenance")
        with open(args.provenance, "w") as fh:
            json.dump({"vertices": [list(role) for role in provenance]}, fh, sort_keys=True)
            fh.write("\n")
    return EXIT_YES


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drdsr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_cmd(name, helptext):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("instance", help="instance file, or - for stdin")
        p.add_argument("--rule", type=Rule.parse, help="override the file's rule")
        p.add_argument("--r", type=_positive, help="override the file's radius")
        return p

    p = instance_cmd("verify", "check a move sequence against an instance")
    p.add_argument("sequence", help="file with one 'mv a b' per line")
    p.set_defaults(func=cmd_verify)

    p = instance_cmd("solve", "find a reconfiguration sequence")
    p.add_argument("--oracle", action="store_true", help="fall back to exhaustive search")
    p.add_argument("--via-power", action="store_true",
                   help="TJ: search on the r-th power graph at radius 1")
    p.add_argument("--max-states", type=_positive, default=DEFAULT_MAX_STATES)
    p.add_argument("--threads", type=_positive, default=1, help="accepted; search is sequential")
    p.add_argument("--root", type=int, default=0, help="root vertex for the tree solver")
    p.set_defaults(func=cmd_solve)

    p = instance_cmd("oracle", "shortest sequence by exhaustive search")
    p.add_argument("--max-states", type=_positive, default=DEFAULT_MAX_STATES)
    p.add_argument("--max-n", type=_positive, default=64)
    p.add_argument("--threads", type=_positive, default=1, help="accepted; search is sequential")
    p.set_defaults(func=cmd_oracle)

    p = instance_cmd("mstar", "print both lower bounds")
    p.set_defaults(func=cmd_mstar)

    p = sub.add_parser("classify", help="report graph classes and diameters")
    p.add_argument("instance")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="emit a generated instance")
    p.add_argument("name", choices=GENERATORS)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--r", type=_positive)
    p.add_argument("--rule", type=Rule.parse)
    p.add_argument("--base", default="k2", help="base graph for VC reductions")
    p.add_argument("--cs", help="source cover, comma separated")
    p.add_argument("--ct", help="target cover, comma separated")
    p.add_argument("--trust-covers", action="store_true")
    p.add_argument("--ncl", help="NCL graph file (gen ncl)")
    p.add_argument("--ncl-target", help="NCL file whose orientation gives the target")
    p.add_argument("--n", type=_positive, default=8)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--provenance", help="write a JSON provenance sidecar here")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInstance, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (LimitExceeded, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
