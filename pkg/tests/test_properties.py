"""
Property suites over seeded generated instances.

hypothesis drives the seeds for the quick runs; the full fixed-seed
corpora and the timing comparison are marked ``slow``.
"""

import time
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongchordal.extraction import (
    build_overshadow_digraph,
    deepest_root_vertex,
    extract_strong_elimination_order,
    verify_cycle_certificate,
)
from strongchordal.generators import (
    SplitMix64,
    generate_random_chordal_representation,
    generate_random_graph,
    generate_rdv_representation,
    generate_sun,
)
from strongchordal.graph_core import induced_subgraph, is_simple_vertex, make_graph, same_graph
from strongchordal.host_tree import overshadows, roots_meet
from strongchordal.models import SubdivisionPolicy, VertexOrder
from strongchordal.orders import (
    is_perfect_elimination_order,
    is_strong_elimination_order,
    peo_to_representation,
    seo_to_representation,
)
from strongchordal.recognition import (
    brute_force_seo,
    definitional_strongly_chordal,
    greedy_simple_elimination,
    greedy_simplicial_elimination,
)
from strongchordal.representation import (
    bottom_up_order,
    has_distinct_roots,
    intersection_graph,
    is_compatible_representation,
    is_rdv,
    restrict_representation,
    subdivide_unit_weights,
)

seeds = st.integers(min_value=0, max_value=2 ** 64 - 1)


def check_compatible_representation(r):
    g = intersection_graph(r)
    host = r.host
    assert is_compatible_representation(r).compatible

    result = extract_strong_elimination_order(r)
    assert result.succeeded
    assert is_strong_elimination_order(g, result.order).valid
    depths = [r.root_depth(v) for v in result.order]
    assert depths == sorted(depths, reverse=True)
    position = result.order.index
    for v, w in g.edges:
        earlier, later = (v, w) if position[v] < position[w] else (w, v)
        assert overshadows(host, r.subtree(later), r.subtree(earlier)).holds
    if len(r):
        assert is_simple_vertex(g, deepest_root_vertex(r, check=False)).holds

    for v, w in g.edges:
        tv, tw = r.subtree(v), r.subtree(w)
        assert roots_meet(host, tv, tw)
        for a, b, ta, tb in ((v, w, tv, tw), (w, v, tw, tv)):
            if overshadows(host, ta, tb).holds:
                assert r.root_depth(a) <= r.root_depth(b)
                assert tb.root in ta
    return g


def check_oracles_agree(g):
    greedy = greedy_simple_elimination(g).succeeded
    assert brute_force_seo(g).found == greedy
    assert definitional_strongly_chordal(g).strongly_chordal == greedy


############## RDV representations ##############

def check_rdv(num_nodes, num_vertices, max_weight, seed):
    r = generate_rdv_representation(num_nodes, num_vertices, max_weight, seed)
    assert is_rdv(r)
    g = check_compatible_representation(r)
    assert is_strong_elimination_order(g, bottom_up_order(r)).valid


@settings(max_examples=60, deadline=None)
@given(
    num_nodes=st.integers(min_value=1, max_value=60),
    num_vertices=st.integers(min_value=0, max_value=40),
    max_weight=st.integers(min_value=1, max_value=5),
    seed=seeds,
)
def test_rdv_representations(num_nodes, num_vertices, max_weight, seed):
    check_rdv(num_nodes, num_vertices, max_weight, seed)


@pytest.mark.slow
def test_rdv_corpus():
    rng = SplitMix64(2024)
    for seed in range(500):
        check_rdv(1 + rng.below(60), rng.below(41), 1 + rng.below(5), seed)


############## Order -> representation round trips ##############

@settings(max_examples=40, deadline=None)
@given(num_nodes=st.integers(min_value=1, max_value=30), num_vertices=st.integers(min_value=1, max_value=25), seed=seeds)
def test_strong_order_round_trip(num_nodes, num_vertices, seed):
    rdv = generate_rdv_representation(num_nodes, num_vertices, 3, seed)
    g = intersection_graph(rdv)
    o = extract_strong_elimination_order(rdv).order
    n = len(o)

    r = seo_to_representation(g, o)
    assert len(r.host) == n
    for j, v in enumerate(o.sequence, start=1):
        assert r.host.depth[v] == n - j
    assert same_graph(intersection_graph(r), g)
    assert has_distinct_roots(r)
    assert is_strong_elimination_order(g, bottom_up_order(r)).valid
    check_compatible_representation(r)

    assert is_perfect_elimination_order(g, o).valid
    unit = peo_to_representation(g, o)
    assert set(unit.host.weight.values()) <= {1}
    assert same_graph(intersection_graph(unit), g)


@settings(max_examples=40, deadline=None)
@given(num_nodes=st.integers(min_value=1, max_value=40), num_vertices=st.integers(min_value=1, max_value=20), seed=seeds)
def test_compatibility_is_hereditary(num_nodes, num_vertices, seed):
    r = generate_rdv_representation(num_nodes, num_vertices, 4, seed)
    g = intersection_graph(r)
    rng = SplitMix64(seed)
    keep = {v for v in r.vertices if rng.coin()}
    sub = restrict_representation(r, keep)
    h = induced_subgraph(g, keep)
    assert same_graph(intersection_graph(sub), h)
    assert is_compatible_representation(sub).compatible
    assert greedy_simple_elimination(h).succeeded


############## Random chordal representations ##############

@settings(max_examples=60, deadline=None)
@given(num_nodes=st.integers(min_value=1, max_value=30), num_vertices=st.integers(min_value=0, max_value=15), seed=seeds)
def test_random_chordal_representations(num_nodes, num_vertices, seed):
    r = generate_random_chordal_representation(num_nodes, num_vertices, seed)
    g = intersection_graph(r)
    assert greedy_simplicial_elimination(g).succeeded

    result = extract_strong_elimination_order(r)
    if is_compatible_representation(r).compatible:
        assert result.succeeded
    if result.succeeded:
        assert is_strong_elimination_order(g, result.order).valid
        assert greedy_simple_elimination(g).succeeded
    else:
        u, v = verify_cycle_certificate(r, result.cycle)
        assert (u, v) in build_overshadow_digraph(r).arcs


@settings(max_examples=30, deadline=None)
@given(num_nodes=st.integers(min_value=1, max_value=25), num_vertices=st.integers(min_value=0, max_value=15), seed=seeds)
def test_subdivision_preserves_intersection_graph(num_nodes, num_vertices, seed):
    r = generate_rdv_representation(num_nodes, num_vertices, 4, seed)
    for policy in SubdivisionPolicy:
        report = subdivide_unit_weights(r, policy)
        assert report.intersection_preserved
        assert set(report.representation.host.weight.values()) <= {1}
        for v in r.vertices:
            assert r.subtree(v).members <= report.representation.subtree(v).members
        assert report.compatibility.compatible == (not report.incompatible_pairs)


############## Oracle agreement ##############

def oracle_graph(seed):
    return generate_random_graph(1 + seed % 7, seed, density_permille=300 + (seed * 37) % 600)


@pytest.mark.parametrize('seed', range(150))
def test_oracles_agree_on_random_graphs(seed):
    check_oracles_agree(oracle_graph(seed))


@pytest.mark.slow
def test_oracles_agree_on_full_corpus():
    for seed in range(1000):
        check_oracles_agree(oracle_graph(seed))
    for seed in range(20):
        check_oracles_agree(intersection_graph(generate_rdv_representation(6, 8, 2, seed)))
        check_oracles_agree(intersection_graph(generate_random_chordal_representation(6, 8, seed)))
    for k in (3, 4):
        check_oracles_agree(generate_sun(k))


def has_perfect_elimination_order(g):
    return any(
        is_perfect_elimination_order(g, VertexOrder.from_sequence(p)).valid
        for p in permutations(g.nodes)
    )


@pytest.mark.parametrize('seed', range(60))
def test_greedy_simplicial_matches_exhaustive_search(seed):
    g = oracle_graph(seed)
    assert greedy_simplicial_elimination(g).succeeded == has_perfect_elimination_order(g)


def check_hereditary(g):
    vertices = list(g.nodes)
    for size in range(len(vertices) + 1):
        for subset in combinations(vertices, size):
            assert greedy_simple_elimination(induced_subgraph(g, subset)).succeeded


@pytest.mark.parametrize('seed', range(40))
def test_greedy_simple_success_is_hereditary(seed):
    g = oracle_graph(seed)
    if greedy_simple_elimination(g).succeeded:
        check_hereditary(g)
    rdv_graph = intersection_graph(generate_rdv_representation(5, 7, 3, seed))
    assert greedy_simple_elimination(rdv_graph).succeeded
    check_hereditary(rdv_graph)


############## Perfect order -> unit-weight representation ##############

@settings(max_examples=40, deadline=None)
@given(num_nodes=st.integers(min_value=1, max_value=25), num_vertices=st.integers(min_value=1, max_value=15), seed=seeds)
def test_unit_weight_host_follows_the_order(num_nodes, num_vertices, seed):
    g = intersection_graph(generate_random_chordal_representation(num_nodes, num_vertices, seed))
    o = VertexOrder.from_sequence(greedy_simplicial_elimination(g).sequence)
    r = peo_to_representation(g, o)
    host = r.host
    assert host.root == o.at(len(o))
    for x in host.nodes:
        # positions strictly increase on the way up to the root
        up = host.parent[x]
        while up is not None:
            assert o.position(up) > o.position(x)
            x, up = up, host.parent[up]
    assert same_graph(intersection_graph(r), g)


############## Linear time ##############

def proper_interval_graph(n, seed):
    """
    Vertex i is adjacent to i+1..reach[i] with reach non-decreasing, which
    makes 1..n a strong elimination order; about 4n edges.
    """
    rng = SplitMix64(seed)
    labels = [f'{i:06d}' for i in range(1, n + 1)]
    edges = []
    reach = 0
    for i in range(n):
        reach = min(n - 1, max(reach, i + rng.below(8)))
        edges.extend((labels[i], labels[j]) for j in range(i + 1, reach + 1))
    return make_graph(labels, edges), VertexOrder.from_sequence(labels)


def test_proper_interval_order_round_trip():
    g, o = proper_interval_graph(300, 7)
    assert 3 * 300 <= g.number_of_edges() <= 6 * 300
    assert is_strong_elimination_order(g, o).valid
    r = seo_to_representation(g, o)
    assert extract_strong_elimination_order(r, g).order == o


def timed_extraction(n):
    g, o = proper_interval_graph(n, n)
    r = seo_to_representation(g, o, validate=False)
    started = time.perf_counter()
    result = extract_strong_elimination_order(r)
    elapsed = time.perf_counter() - started
    assert result.succeeded
    assert result.order == o
    return elapsed


@pytest.mark.slow
def test_extraction_scales_linearly():
    small = min(timed_extraction(10 ** 4) for _ in range(3))
    large = timed_extraction(10 ** 5)
    assert large < 2.0
    assert large / small <= 15
