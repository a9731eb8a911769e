import pytest

from strongchordal.errors import RefusalError
from strongchordal.generators import generate_sun
from strongchordal.graph_core import make_graph
from strongchordal.orders import is_strong_elimination_order
from strongchordal.recognition import (
    brute_force_seo,
    definitional_strongly_chordal,
    greedy_simple_elimination,
    greedy_simplicial_elimination,
    has_odd_chord,
    normalize_cycle,
)


def path_graph(n):
    labels = [str(i) for i in range(1, n + 1)]
    return make_graph(labels, list(zip(labels, labels[1:])))


def test_greedy_simplicial(fans, sun3, c4):
    assert greedy_simplicial_elimination(fans).succeeded
    assert greedy_simplicial_elimination(sun3).succeeded
    stuck = greedy_simplicial_elimination(c4)
    assert not stuck.succeeded
    assert stuck.residual == frozenset('abcd')


def test_greedy_simple(fans, sun3):
    result = greedy_simple_elimination(fans)
    assert result.succeeded
    assert sorted(result.sequence) == sorted(fans.nodes)
    stuck = greedy_simple_elimination(sun3)
    assert not stuck.succeeded
    assert stuck.sequence == ()
    assert len(stuck.residual) == 6


def test_brute_force_finds_order(fans):
    result = brute_force_seo(fans)
    assert result.found
    assert is_strong_elimination_order(fans, result.order).valid


def test_brute_force_exhausts_sun3(sun3):
    result = brute_force_seo(sun3)
    assert not result.found
    assert result.tried == 720


@pytest.mark.slow
def test_brute_force_exhausts_sun4():
    result = brute_force_seo(generate_sun(4))
    assert not result.found
    assert result.tried == 40320


def test_brute_force_refuses_large_graphs():
    with pytest.raises(RefusalError) as info:
        brute_force_seo(path_graph(9))
    assert info.value.limit == 8
    assert brute_force_seo(path_graph(9), limit=9).found


def test_normalize_cycle():
    assert normalize_cycle(['c', 'd', 'a', 'b']) == ('a', 'b', 'c', 'd')
    assert normalize_cycle(['c', 'b', 'a', 'd']) == ('a', 'b', 'c', 'd')
    assert normalize_cycle(['u2', 'w1', 'u1', 'w3', 'u3', 'w2']) == ('u1', 'w1', 'u2', 'w2', 'u3', 'w3')


def test_has_odd_chord():
    hexagon = ['1', '2', '3', '4', '5', '6']
    ring = list(zip(hexagon, hexagon[1:] + hexagon[:1]))
    assert not has_odd_chord(make_graph(hexagon, ring), hexagon)
    assert not has_odd_chord(make_graph(hexagon, ring + [('1', '3')]), hexagon)
    assert has_odd_chord(make_graph(hexagon, ring + [('1', '4')]), hexagon)


def test_definition_sun3(sun3):
    result = definitional_strongly_chordal(sun3)
    assert not result.strongly_chordal
    assert result.reason == 'even-cycle'
    assert result.cycle == ('u1', 'w1', 'u2', 'w2', 'u3', 'w3')


def test_definition_sun4():
    result = definitional_strongly_chordal(generate_sun(4))
    assert not result.strongly_chordal
    assert result.cycle == ('u1', 'w1', 'u2', 'w2', 'u3', 'w3', 'u4', 'w4')


def test_definition_not_chordal(c4):
    result = definitional_strongly_chordal(c4)
    assert not result.strongly_chordal
    assert result.reason == 'chordless'
    assert result.cycle == ('a', 'b', 'c', 'd')


def test_definition_positive(fans):
    result = definitional_strongly_chordal(fans)
    assert result.strongly_chordal
    assert result.cycle is None


def test_definition_refuses_large_graphs():
    with pytest.raises(RefusalError):
        definitional_strongly_chordal(path_graph(13))
    assert definitional_strongly_chordal(path_graph(13), limit=13).strongly_chordal


def test_three_predicates_agree_on_fixtures(fans, sun3, c4):
    for g in (fans, sun3, c4, generate_sun(4), path_graph(5)):
        greedy = greedy_simple_elimination(g).succeeded
        assert definitional_strongly_chordal(g).strongly_chordal == greedy
        if g.number_of_nodes() <= 7:
            assert brute_force_seo(g).found == greedy
