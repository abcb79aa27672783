"""Acceptance suite: one test per criterion, summarised at the end of the run."""

import itertools
import os
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from corpus import (
    all_drds,
    connected_small_graphs,
    mandatory_bases,
    split_corpus,
    split_instance,
    tree_corpus,
)
from drdsr.core import DrdsInstance, Rule, apply_move, is_drds, verify_sequence
from drdsr.errors import MoveError
from drdsr.graph import graph_power, is_bipartite
from drdsr.ncl import config_reachable, ncl_to_drdsr, parse_ncl, valid_configs
from drdsr.oracle import gamma_r, min_vcr_reachable, min_vertex_cover, oracle_shortest
from drdsr.reductions import (
    gen_extremal_tj_split,
    gen_extremal_ts_split,
    random_drds,
    random_graph,
    reduce_vc_bipartite,
    reduce_vc_chordal,
    reduce_vc_planar,
)
from drdsr.split import mstar, solve_split
from drdsr.tree import canonical_partition, min_drds_tree, tj_sequence_tree

TESTS = Path(__file__).parent
OR_OR = "ncl 2 3\nv 0 OR\nv 1 OR\ne 0 0 1 2 uv\ne 1 0 1 2 vu\ne 2 0 1 2 vu\n"


@pytest.mark.criterion(1, "tree minimality equals gamma_r")
def test_tree_minimality():
    start = time.perf_counter()
    corpus = tree_corpus(240, seed=2024, max_n=12)
    bad = [(t, r) for t, r, root in corpus
           if len(min_drds_tree(t, r, root)[0]) != gamma_r(t, r)[0]]
    assert not bad
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(2, "every DrDS meets every canonical cell")
def test_partition_cells_meet_every_drds():
    corpus = tree_corpus(80, seed=31, max_n=10)
    violations = 0
    for t, _, root in corpus:
        cells = [set(c) for c in canonical_partition(t, 2, root).cells().values()]
        for d in all_drds(t, 2):
            violations += sum(1 for c in cells if not d & c)
    assert violations == 0


@pytest.mark.criterion(3, "tree TJ solver sequences verify and agree with the oracle")
def test_tree_solver():
    rng = random.Random(99)
    corpus = tree_corpus(240, seed=2024, max_n=12)
    for t, r, root in corpus:
        sets = all_drds(t, r) if t.n <= 10 else None
        for _ in range(3):
            if sets is not None:
                ds = rng.choice(sets)
                dt = rng.choice([d for d in sets if len(d) == len(ds)])
            else:
                k = len(min_drds_tree(t, r, root)[0]) + rng.randint(0, 2)
                ds, dt = random_drds(t, r, k, rng), random_drds(t, r, k, rng)
                if ds is None or dt is None:
                    continue
            inst = DrdsInstance(t, r, Rule.TJ, ds, dt)
            seq = tj_sequence_tree(inst, root)
            assert seq is not None and verify_sequence(inst, seq).valid
            if t.n <= 10:
                assert oracle_shortest(inst).reachable
        chosen, _ = min_drds_tree(t, r, root)
        if len(chosen) < t.n:
            mismatch = DrdsInstance(t, r, Rule.TJ, frozenset(chosen), frozenset(range(t.n)))
            assert tj_sequence_tree(mismatch, root) is None
            assert not oracle_shortest(mismatch).reachable


@pytest.mark.criterion(4, "split sandwich bounds for TS and TJ")
def test_split_sandwich():
    start = time.perf_counter()
    violations = []
    for item in split_corpus(120, seed=77, max_n=12):
        for rule, slack in ((Rule.TS, 2), (Rule.TJ, 1)):
            inst = split_instance(item, rule)
            seq = solve_split(inst)
            lower = mstar(inst).value
            opt = oracle_shortest(inst).opt
            ok = verify_sequence(inst, seq).valid and lower <= opt <= len(seq) <= lower + slack
            if not ok:
                violations.append((item, rule))
    assert not violations
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(5, "extremal split instances attain the bounds exactly")
def test_tightness():
    for k in (2, 3):
        inst = gen_extremal_ts_split(k).instance
        assert oracle_shortest(inst).opt == 2 * k - 2 + 2
    inst = gen_extremal_tj_split(2).instance
    assert oracle_shortest(inst).opt == 3 == mstar(inst).value + 1


@pytest.mark.criterion(6, "distance-r domination equals domination in the r-th power")
def test_power_equivalence():
    rng = random.Random(6)
    mismatches = 0
    for _ in range(120):
        g = random_graph(rng.randint(1, 10), rng, rng.choice([0.15, 0.3, 0.5]))
        for r in (2, 3):
            p = graph_power(g, r)
            for _ in range(50):
                d = [v for v in range(g.n) if rng.random() < 0.3]
                mismatches += is_drds(g, r, d) != is_drds(p, 1, d)
    assert mismatches == 0


@pytest.mark.criterion(7, "VC reductions preserve reachability")
def test_reduction_soundness():
    start = time.perf_counter()
    bases = list(mandatory_bases().values()) + connected_small_graphs(5)
    mismatches = 0
    for g in bases:
        _, covers = min_vertex_cover(g)
        for cs, ct in itertools.product(covers, repeat=2):
            for rule in (Rule.TS, Rule.TJ):
                want = min_vcr_reachable(g, cs, ct, rule)
                for reduce in (reduce_vc_planar, reduce_vc_chordal, reduce_vc_bipartite):
                    got = oracle_shortest(reduce(g, 2, cs, ct, rule).instance).reachable
                    mismatches += got != want
    assert mismatches == 0
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(8, "reduction outputs have the expected structure")
def test_reduction_structure():
    for name, g in mandatory_bases().items():
        tau, covers = min_vertex_cover(g)
        out = reduce_vc_bipartite(g, 2, covers[0], covers[-1])
        assert is_bipartite(out.instance.graph), name
        assert gamma_r(out.instance.graph, 2, limit=40)[0] == tau + 1, name
    ncl, _ = parse_ncl(OR_OR)
    for r in (1, 2, 3):
        for cfg in valid_configs(ncl):
            inst = ncl_to_drdsr(ncl, cfg, r).instance
            assert inst.graph.max_degree() <= 3
            assert is_drds(inst.graph, r, inst.source)
    # On the K2 reduction, a token on the apex never moves while the rest is a minimum cover.
    base = mandatory_bases()["k2"]
    _, covers = min_vertex_cover(base)
    out = reduce_vc_bipartite(base, 2, covers[0], covers[-1])
    g, apex = out.instance.graph, out.meta["apex"]
    for c in covers:
        d = c | {apex}
        assert is_drds(g, 2, d)
        for rule, v in itertools.product((Rule.TS, Rule.TJ), range(g.n)):
            if v in d:
                continue
            with pytest.raises(MoveError):
                apply_move(g, 2, rule, d, (apex, v))


@pytest.mark.criterion(9, "NCL reachability matches DrDS reachability")
def test_ncl_equivalence():
    ncl, _ = parse_ncl(OR_OR)
    configs = valid_configs(ncl)
    for r in (1, 2):
        for a, b in itertools.product(configs, repeat=2):
            for rule in (Rule.TS, Rule.TJ):
                inst = ncl_to_drdsr(ncl, a, r, rule, b).instance
                assert oracle_shortest(inst).reachable == config_reachable(ncl, a, b)


@pytest.mark.criterion(10, "CLI output is byte-identical across runs")
def test_determinism():
    outputs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        proc = subprocess.run([sys.executable, str(TESTS / "cli_driver.py")], env=env,
                              capture_output=True, check=True)
        outputs.append(proc.stdout)
    assert outputs[0] and outputs[0] == outputs[1]
