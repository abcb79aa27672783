import itertools

import pytest

from drdsr.core import is_drds
from drdsr.errors import InvalidInstance, ParseError
from drdsr.ncl import (
    NclEdge,
    NclGraph,
    config_reachable,
    format_ncl,
    is_valid_config,
    ncl_to_drdsr,
    parse_ncl,
    reverse_edge,
    valid_configs,
)
from drdsr.oracle import oracle_shortest

OR_OR = """ncl 2 3
v 0 OR
v 1 OR
e 0 0 1 2 uv
e 1 0 1 2 vu
e 2 0 1 2 vu
"""


def and_and():
    edges = (NclEdge(0, 0, 1, 2), NclEdge(1, 0, 1, 1), NclEdge(2, 0, 1, 1))
    return NclGraph(("AND", "AND"), edges)


def mixed():
    edges = (NclEdge(0, 0, 1, 1), NclEdge(1, 0, 1, 1), NclEdge(2, 0, 2, 2),
             NclEdge(3, 1, 3, 2), NclEdge(4, 2, 3, 2), NclEdge(5, 2, 3, 2))
    return NclGraph(("AND", "AND", "OR", "OR"), edges)


def test_parse_and_format_round_trip():
    ncl, cfg = parse_ncl(OR_OR)
    assert ncl.kinds == ("OR", "OR")
    assert cfg.heads == (1, 0, 0)
    assert format_ncl(ncl, cfg) == OR_OR


@pytest.mark.parametrize("text", [
    "ncl 2 1\nv 0 OR\nv 1 OR\ne 0 0 1 2 uv",
    "ncl 1 0\nv 0 XOR",
    "v 0 OR",
    OR_OR.replace("e 2 0 1 2 vu", "e 2 0 1 2 up"),
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ncl(text)


def test_weights_are_checked():
    with pytest.raises(InvalidInstance):
        NclGraph(("AND", "AND"), (NclEdge(0, 0, 1, 2), NclEdge(1, 0, 1, 2), NclEdge(2, 0, 1, 1)))


def test_reverse_edge_and_validity():
    ncl, cfg = parse_ncl(OR_OR)
    assert is_valid_config(ncl, cfg)
    flipped = reverse_edge(ncl, cfg, 0)
    assert flipped.heads == (0, 0, 0)
    assert not is_valid_config(ncl, flipped)


def test_or_or_configurations():
    ncl, _ = parse_ncl(OR_OR)
    configs = valid_configs(ncl)
    assert len(configs) == 6
    for a, b in itertools.product(configs, repeat=2):
        assert config_reachable(ncl, a, b)


def test_and_and_is_frozen():
    ncl = and_and()
    configs = valid_configs(ncl)
    assert sorted(c.heads for c in configs) == [(0, 1, 1), (1, 0, 0)]
    assert not config_reachable(ncl, *configs)


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("build", [lambda: parse_ncl(OR_OR)[0], and_and, mixed])
def test_gadget_structure(build, r):
    ncl = build()
    for cfg in valid_configs(ncl):
        inst = ncl_to_drdsr(ncl, cfg, r).instance
        assert inst.graph.max_degree() <= 3
        assert is_drds(inst.graph, r, inst.source)


@pytest.mark.parametrize("r", [1, 2])
def test_mixed_graph_equivalence(r):
    ncl = mixed()
    configs = valid_configs(ncl)
    for a, b in itertools.product(configs, repeat=2):
        inst = ncl_to_drdsr(ncl, a, r, "TS", b).instance
        assert oracle_shortest(inst).reachable == config_reachable(ncl, a, b)
