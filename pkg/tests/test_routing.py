import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import path
from drdsr.core import DrdsInstance, Rule
from drdsr.graph import INF, Graph, all_pairs_distances, component_diameters
from drdsr.oracle import oracle_shortest
from drdsr.reductions import random_graph
from drdsr.routing import optimal_assignment, route_free
from test_graph import graphs


def brute_force(dist, xs, ts):
    best = INF
    for perm in itertools.permutations(sorted(ts)):
        costs = [dist[u][v] for u, v in zip(sorted(xs), perm)]
        if INF not in costs:
            best = min(best, sum(costs)) if best is not INF else sum(costs)
    return best


@given(graphs(max_n=9), st.data())
def test_assignment_matches_brute_force(g, data):
    k = data.draw(st.integers(0, min(6, g.n)))
    xs = data.draw(st.permutations(range(g.n)))[:k]
    ts = data.draw(st.permutations(range(g.n)))[:k]
    dist = all_pairs_distances(g)
    cost, mapping = optimal_assignment(dist, xs, ts)
    assert cost == brute_force(dist, xs, ts)
    assert sorted(mapping) == sorted(xs) and sorted(mapping.values()) == sorted(ts)


def test_assignment_on_path():
    dist = all_pairs_distances(path(6))
    assert optimal_assignment(dist, {0, 1}, {4, 5})[0] == 8


def test_assignment_across_components_is_infinite():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert optimal_assignment(all_pairs_distances(g), {0, 1}, {2, 1})[0] is INF


def replay(source, moves, g):
    cur = set(source)
    for a, b in moves:
        assert a in cur and b not in cur and g.has_edge(a, b)
        cur.remove(a)
        cur.add(b)
    return cur


@settings(max_examples=100)
@given(graphs(max_n=10), st.data())
def test_route_free_length_is_assignment_cost(g, data):
    k = data.draw(st.integers(1, g.n))
    xs = frozenset(data.draw(st.permutations(range(g.n)))[:k])
    ts = frozenset(data.draw(st.permutations(range(g.n)))[:k])
    dist = all_pairs_distances(g)
    cost, _ = optimal_assignment(dist, xs, ts)
    if cost is INF:
        return
    moves = route_free(g, dist, xs, ts)
    assert len(moves) == cost
    assert replay(xs, moves, g) == ts


def test_route_free_matches_oracle_on_free_instances():
    # Diameter <= r makes every token set dominating, so sliding is unconstrained.
    rng = random.Random(5)
    seen = 0
    while seen < 80:
        g = random_graph(rng.randint(2, 10), rng, 0.5, connected=True)
        r = max(component_diameters(g))
        k = rng.randint(1, g.n)
        xs, ts = frozenset(rng.sample(range(g.n), k)), frozenset(rng.sample(range(g.n), k))
        dist = all_pairs_distances(g)
        moves = route_free(g, dist, xs, ts)
        res = oracle_shortest(DrdsInstance(g, max(r, 1), Rule.TS, xs, ts))
        assert res.reachable and res.opt == len(moves)
        seen += 1
