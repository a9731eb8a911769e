import os

import pytest

from strongchordal.errors import GeneratorParameterError
from strongchordal.generators import (
    SplitMix64,
    generate_corpus,
    generate_random_chordal_representation,
    generate_random_graph,
    generate_rdv_representation,
    generate_sun,
)
from strongchordal.graph_core import sorted_edges
from strongchordal.recognition import greedy_simplicial_elimination
from strongchordal.representation import (
    intersection_graph,
    is_compatible_representation,
    is_rdv,
    serialize_representation,
)


def test_splitmix64_reference_values():
    rng = SplitMix64(1234567)
    assert rng.next_u64() == 6457827717110365317
    assert rng.next_u64() == 3203168211198807973


def test_splitmix64_below_and_coin():
    rng = SplitMix64(7)
    draws = [rng.below(10) for _ in range(200)]
    assert all(0 <= d < 10 for d in draws)
    assert len(set(draws)) > 1
    coins = {SplitMix64(s).coin() for s in range(20)}
    assert coins == {True, False}


def test_rdv_trivial():
    r = generate_rdv_representation(1, 1, 1, 99)
    assert len(r.host) == 1
    assert r.subtree('v1').members == frozenset({'1'})


def test_rdv_empty_assignment():
    r = generate_rdv_representation(5, 0, 1, 3)
    assert len(r) == 0
    assert intersection_graph(r).number_of_nodes() == 0


def test_rdv_is_compatible():
    r = generate_rdv_representation(20, 10, 3, 42)
    assert is_rdv(r)
    assert is_compatible_representation(r).compatible
    assert all(1 <= w <= 3 for w in r.host.weight.values())


def test_generators_are_deterministic():
    a = serialize_representation(generate_rdv_representation(15, 9, 4, 5))
    b = serialize_representation(generate_rdv_representation(15, 9, 4, 5))
    assert a == b
    c = serialize_representation(generate_random_chordal_representation(15, 9, 5))
    d = serialize_representation(generate_random_chordal_representation(15, 9, 5))
    assert c == d
    assert sorted_edges(generate_random_graph(7, 11)) == sorted_edges(generate_random_graph(7, 11))


def test_random_chordal_single_node_gives_clique():
    g = intersection_graph(generate_random_chordal_representation(1, 4, 8))
    assert g.number_of_edges() == 6


@pytest.mark.parametrize('seed', [0, 7, 123])
def test_random_chordal_is_chordal(seed):
    r = generate_random_chordal_representation(30, 15, seed)
    assert set(r.host.weight.values()) <= {1}
    assert greedy_simplicial_elimination(intersection_graph(r)).succeeded


def test_random_graph_density_extremes():
    assert generate_random_graph(6, 1, density_permille=0).number_of_edges() == 0
    assert generate_random_graph(6, 1, density_permille=1000).number_of_edges() == 15


def test_sun():
    g = generate_sun(3)
    assert g.number_of_nodes() == 6
    assert g.number_of_edges() == 9
    assert sorted(g.adj['w3']) == ['u1', 'u3']


@pytest.mark.parametrize('call', [
    lambda: generate_rdv_representation(0, 1, 1, 1),
    lambda: generate_rdv_representation(3, -1, 1, 1),
    lambda: generate_rdv_representation(3, 1, 0, 1),
    lambda: generate_random_chordal_representation(0, 1, 1),
    lambda: generate_sun(2),
    lambda: generate_random_graph(3, 1, density_permille=1001),
])
def test_invalid_parameters(call):
    with pytest.raises(GeneratorParameterError):
        call()


def test_generate_corpus(tmp_path):
    entries = generate_corpus(str(tmp_path), 2, 100)
    assert len(entries) == 6
    lines = (tmp_path / 'manifest.tsv').read_text().splitlines()
    assert lines[0] == 'kind\tparams\tseed\tfile\tcompatible\tstrongly_chordal'
    assert len(lines) == 7
    for entry in entries:
        assert os.path.exists(tmp_path / entry.file)
    rdv_rows = [e for e in entries if e.kind == 'rdv']
    assert all(e.compatible and e.strongly_chordal for e in rdv_rows)
    assert lines[-1] == 'sun\t4\t0\tsun-4.gr\t-\tno'
