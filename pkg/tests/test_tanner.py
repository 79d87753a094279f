import itertools
import math
import random

import pytest

from etskit.errors import AlistParseError, BindingError, GraphConstraintError
from etskit.normal import from_normal, NormalGraph
from etskit.tanner import (
    TannerGraph,
    VarSet,
    classify,
    compute_girth,
    gamma_split,
    parse_alist,
)
from helpers import brute_gamma, random_tanner, to_alist


def test_parse_accepts_5_4_structure(ets54):
    text = to_alist(ets54)
    g = parse_alist(text)
    assert g.num_var == 5
    assert g.num_chk == 12
    assert g.d_l == 4
    assert g.girth == 6
    degs = sorted(len(c) for c in g.chk_adj)
    assert degs.count(1) == 4 and degs.count(2) == 8


def test_parse_rejects_single_six_cycle():
    # 3 variables, 3 checks, every variable degree 2
    text = "3 3\n2 2\n2 2 2\n2 2 2\n1 2\n2 3\n1 3\n1 3\n1 2\n2 3\n"
    with pytest.raises(AlistParseError, match="left degree 2"):
        parse_alist(text)


def test_parse_rejects_parallel_edge():
    text = "2 3\n3 2\n3 3\n2 2 2\n1 2 2\n1 2 3\n1 2\n1 2\n2\n"
    with pytest.raises(AlistParseError, match="parallel edge") as err:
        parse_alist(text)
    assert err.value.line == 5


def test_parse_rejects_mismatched_degree():
    text = "2 3\n3 2\n3 3\n2 2 2\n1 2 0\n1 2 3\n1 2\n1 2\n2\n"
    with pytest.raises(AlistParseError, match="degree list says 3"):
        parse_alist(text)


def test_parse_rejects_inconsistent_check_lists(ets54):
    lines = to_alist(ets54).splitlines()
    # swap two check neighbor lines so they disagree with the columns
    lines[4 + 5 + 0], lines[4 + 5 + 1] = lines[4 + 5 + 1], lines[4 + 5 + 0]
    with pytest.raises(AlistParseError, match="disagrees"):
        parse_alist("\n".join(lines) + "\n")


def test_parse_rejects_girth_four():
    # two variables sharing two checks
    rows = [(0, 1, 2), (0, 1, 3), (2, 4, 5), (3, 4, 5)]
    with pytest.raises(GraphConstraintError, match="girth 4"):
        TannerGraph.from_var_adj(rows, 6)


def test_parse_malformed_header():
    with pytest.raises(AlistParseError) as err:
        parse_alist("3\n")
    assert err.value.line == 1


def test_girth_of_acyclic_graph_is_infinite():
    # star: three variables meeting at one check, leaves elsewhere
    rows = [(0, 1, 2), (0, 3, 4), (0, 5, 6)]
    g = TannerGraph.from_var_adj(rows, 7)
    assert g.girth == math.inf
    assert compute_girth(g) == math.inf


def test_girth_of_k33_expansion_is_8(k33):
    assert from_normal(k33, 3).girth == 8


def test_girth_matches_normal_cycles_on_random_graphs():
    for seed in range(20):
        g = random_tanner(12, 3, 18, seed=seed)
        assert compute_girth(g) == g.girth
        assert g.girth >= 6


def test_gamma_split_full_set(ets54):
    split = gamma_split(ets54, range(5))
    assert len(split.odd) == 4
    assert len(split.even) == 8


def test_gamma_split_single_variable(ets54):
    split = gamma_split(ets54, [0])
    assert len(split.odd) == ets54.d_l
    assert not split.even


def test_gamma_split_six_cycle_in_cubic_graph(prism):
    g = from_normal(prism, 3)
    split = gamma_split(g, [0, 1, 2])
    assert len(split.odd) == 3
    assert len(split.even) == 3


def test_gamma_split_brute_force_all_subsets():
    g = random_tanner(12, 3, 16, seed=5)
    for size in range(1, 13):
        for combo in itertools.combinations(range(12), size):
            split = gamma_split(g, combo)
            odd, even = brute_gamma(g, combo)
            assert set(split.odd) == odd
            assert set(split.even) == even
        if size >= 4:  # 2^12 subsets is overkill; spot the rest randomly
            break
    rng = random.Random(0)
    for _ in range(500):
        combo = rng.sample(range(12), rng.randrange(1, 13))
        split = gamma_split(g, combo)
        odd, even = brute_gamma(g, combo)
        assert set(split.odd) == odd and set(split.even) == even


def test_classify_full_record(ets54):
    rec = classify(ets54, range(5))
    assert (rec.a, rec.b) == (5, 4)
    assert rec.elementary and rec.in_t and rec.absorbing


def test_classify_is_pure(ets54):
    assert classify(ets54, [4, 0, 2, 1, 3]) == classify(ets54, range(5))


def test_classify_nonabsorbing_with_degree2_node(nonabsorbing66):
    g = from_normal(nonabsorbing66, 4)
    rec = classify(g, range(6))
    assert (rec.a, rec.b) == (6, 6)
    assert rec.elementary and rec.in_t
    assert not rec.absorbing


def test_classify_d3_pool_implies_absorbing():
    from etskit.lss import enumerate_tanner_cycles, expand_to_k

    rng = random.Random(2)
    checked = 0
    for seed in range(12):
        g = random_tanner(14, 3, 20, seed=100 + seed)
        # random subsets rarely land in the pool; cycle expansions always do
        if g.girth <= 10:
            cycles = enumerate_tanner_cycles(g, int(g.girth) + 2)
            seeds = [
                s for sets in cycles.values() for s in sets
                if (r := classify(g, s)).elementary and r.in_t
            ]
            frontier = expand_to_k(g, seeds, k=7)
            for members in frontier.all_sets():
                rec = classify(g, members)
                assert rec.in_t
                assert rec.absorbing
                checked += 1
        for _ in range(50):
            combo = rng.sample(range(14), rng.randrange(2, 8))
            rec = classify(g, combo)
            if rec.in_t:
                checked += 1
                assert rec.absorbing
    assert checked > 50


def test_edge_count_identity():
    rng = random.Random(3)
    g = random_tanner(15, 4, 30, seed=9)
    for _ in range(200):
        combo = rng.sample(range(15), rng.randrange(1, 9))
        split = gamma_split(g, combo)
        degs = {}
        for v in combo:
            for c in g.var_adj[v]:
                degs[c] = degs.get(c, 0) + 1
        assert sum(degs.values()) == len(combo) * g.d_l
        rec = classify(g, combo)
        if rec.elementary:
            assert len(split.odd) + 2 * len(split.even) == len(combo) * g.d_l


def test_varset_binding(ets54, prism):
    s = VarSet.of(ets54, [0, 1, 2])
    other = from_normal(prism, 3)
    with pytest.raises(BindingError):
        gamma_split(other, s)
    with pytest.raises(BindingError):
        gamma_split(ets54, [0, 99])
    with pytest.raises(BindingError):
        VarSet.of(ets54, [-1])


def test_disconnected_set_not_in_pool(prism):
    g = from_normal(prism, 3)
    # two vertices on opposite triangles sharing no check
    rec = classify(g, [0, 4])
    assert not rec.in_t
