"""
Deterministic seeded generators for the test corpora.

Every generator draws from SplitMix64 in a fixed, documented order, so a
(parameters, seed) pair always produces the same serialized output, in
any implementation that follows the same draw order.
"""

from __future__ import annotations

import logging
import os
from typing import List

from .errors import GeneratorParameterError
from .graph_core import Graph, make_graph, serialize_graph
from .host_tree import build_host_tree
from .models import CorpusEntry, Subtree, TreeRepresentation
from .recognition import greedy_simple_elimination
from .representation import intersection_graph, is_compatible_representation, serialize_representation

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1


class SplitMix64(object):
    """
    SplitMix64 pseudo random generator.

    below(n) is next_u64() mod n (the tiny modulo bias is accepted for the
    sake of a draw order that is trivial to reproduce); coin() is below(2) == 1.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def coin(self) -> bool:
        return self.below(2) == 1


def _random_host(rng: SplitMix64, num_nodes: int, max_weight: int):
    """
    Nodes "1".."num_nodes" rooted at "1". Draws: all parents first (node i
    picks below(i - 1) + 1), then all weights (1 + below(max_weight)).
    """
    parents = [None] + [rng.below(i - 1) + 1 for i in range(2, num_nodes + 1)]
    weights = [0] + [1 + rng.below(max_weight) for _ in range(2, num_nodes + 1)]
    arcs = [('1', None, 0)]
    for i in range(2, num_nodes + 1):
        arcs.append((str(i), str(parents[i - 1]), weights[i - 1]))
    return build_host_tree(arcs)


def generate_rdv_representation(num_nodes: int, num_vertices: int, max_weight: int, seed: int) -> TreeRepresentation:
    """
    A random representation in which every subtree is a downward path.

    Draw order: host parents, host weights, then per vertex v1, v2, ...:
    the start node (1 + below(num_nodes)), then while coin() is heads and
    the current node has children, a child (below(#children), children in
    creation order).
    """
    if num_nodes < 1 or num_vertices < 0 or max_weight < 1:
        raise GeneratorParameterError(
            f'invalid parameters nodes={num_nodes} vertices={num_vertices} max_weight={max_weight}'
        )
    rng = SplitMix64(seed)
    host = _random_host(rng, num_nodes, max_weight)
    assignment = {}
    for index in range(1, num_vertices + 1):
        start = str(1 + rng.below(num_nodes))
        path = [start]
        current = start
        while rng.coin() and host.children[current]:
            kids = host.children[current]
            current = kids[rng.below(len(kids))]
            path.append(current)
        assignment[f'v{index}'] = Subtree(start, frozenset(path))
    return TreeRepresentation(host, assignment)


def generate_random_chordal_representation(num_nodes: int, num_vertices: int, seed: int) -> TreeRepresentation:
    """
    Random subtrees of a random unit-weight host tree.

    Draw order: host parents, then per vertex: start node, target size
    (1 + below(num_nodes)), then one below(#frontier) per added node. The
    frontier lists tree neighbours (parent first, then children) of the
    nodes taken so far, in discovery order. The intersection graph is
    chordal, not necessarily strongly chordal.
    """
    if num_nodes < 1 or num_vertices < 0:
        raise GeneratorParameterError(f'invalid parameters nodes={num_nodes} vertices={num_vertices}')
    rng = SplitMix64(seed)
    host = _random_host(rng, num_nodes, 1)

    def neighbours(x):
        up = host.parent[x]
        return ([up] if up is not None else []) + list(host.children[x])

    assignment = {}
    for index in range(1, num_vertices + 1):
        start = str(1 + rng.below(num_nodes))
        size = 1 + rng.below(num_nodes)
        taken = {start}
        frontier = [x for x in neighbours(start)]
        while len(taken) < size and frontier:
            x = frontier.pop(rng.below(len(frontier)))
            taken.add(x)
            frontier.extend(y for y in neighbours(x) if y not in taken and y not in frontier)
        root = min(taken, key=lambda x: host.depth[x])
        assignment[f'v{index}'] = Subtree(root, frozenset(taken))
    return TreeRepresentation(host, assignment)


def generate_sun(k: int) -> Graph:
    """
    The k-sun: inner clique u1..uk, rim w1..wk with wi adjacent to ui and
    u(i mod k)+1.
    """
    if k < 3:
        raise GeneratorParameterError(f'a sun needs k >= 3, got {k}')
    inner = [f'u{i}' for i in range(1, k + 1)]
    rim = [f'w{i}' for i in range(1, k + 1)]
    edges = [(inner[a], inner[b]) for a in range(k) for b in range(a + 1, k)]
    for i in range(k):
        edges.append((rim[i], inner[i]))
        edges.append((rim[i], inner[(i + 1) % k]))
    return make_graph(inner + rim, edges)


def generate_random_graph(num_vertices: int, seed: int, density_permille: int = 500) -> Graph:
    """
    G(n, p) on labels "1".."n": one below(1000) draw per pair (i < j, in
    numeric order), edge iff the draw is below density_permille.
    """
    if num_vertices < 0 or not 0 <= density_permille <= 1000:
        raise GeneratorParameterError(
            f'invalid parameters vertices={num_vertices} density_permille={density_permille}'
        )
    rng = SplitMix64(seed)
    labels = [str(i) for i in range(1, num_vertices + 1)]
    edges = []
    for a in range(num_vertices):
        for b in range(a + 1, num_vertices):
            if rng.below(1000) < density_permille:
                edges.append((labels[a], labels[b]))
    return make_graph(labels, edges)


############## Corpus ##############

def _write(directory, name, text):
    with open(os.path.join(directory, name), 'w') as handle:
        handle.write(text)


def generate_corpus(directory: str, count: int, seed: int) -> List[CorpusEntry]:
    """
    Write ``count`` instances of each representation kind plus the 3- and
    4-suns into ``directory``, together with manifest.tsv. Instance i uses
    seed + i.
    """
    os.makedirs(directory, exist_ok=True)
    entries = []
    for i in range(count):
        s = seed + i
        rdv = generate_rdv_representation(12, 8, 3, s)
        chordal = generate_random_chordal_representation(10, 7, s)
        for kind, params, r in (('rdv', '12,8,3', rdv), ('chordal', '10,7', chordal)):
            name = f'{kind}-{s}.rep'
            _write(directory, name, serialize_representation(r))
            entries.append(CorpusEntry(
                kind, params, s, name,
                compatible=is_compatible_representation(r).compatible,
                strongly_chordal=greedy_simple_elimination(intersection_graph(r)).succeeded,
            ))
    for k in (3, 4):
        name = f'sun-{k}.gr'
        g = generate_sun(k)
        _write(directory, name, serialize_graph(g))
        entries.append(CorpusEntry('sun', str(k), 0, name, None, greedy_simple_elimination(g).succeeded))

    header = '\t'.join(['kind', 'params', 'seed', 'file', 'compatible', 'strongly_chordal'])
    _write(directory, 'manifest.tsv', '\n'.join([header] + [e.to_row() for e in entries]) + '\n')
    logger.info('wrote %d corpus entries to %s', len(entries), directory)
    return entries
