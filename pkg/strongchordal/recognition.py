"""
Recognition procedures and brute-force oracles.

These tie the characterizations together at desk scale: greedy
simplicial elimination (chordality), greedy simple-vertex elimination
(strong chordality), exhaustive search for a strong elimination order,
and the definitional check on even cycles.
"""

from __future__ import annotations

import logging
from itertools import permutations
from typing import Optional, Tuple

import networkx as nx

from .config import Config
from .errors import RefusalError
from .graph_core import Graph, closed_neighborhoods, is_simple_vertex, is_simplicial_vertex
from .models import BruteForceResult, DefinitionResult, EliminationResult, VertexOrder
from .orders import _first_strong_violation, is_perfect_elimination_order

logger = logging.getLogger(__name__)


def _greedy_elimination(g: Graph, predicate) -> EliminationResult:
    working = nx.Graph(g)
    sequence = []
    while working.number_of_nodes():
        pick = next((v for v in sorted(working.nodes) if predicate(working, v).holds), None)
        if pick is None:
            return EliminationResult(False, tuple(sequence), frozenset(working.nodes))
        sequence.append(pick)
        working.remove_node(pick)
    return EliminationResult(True, tuple(sequence))


def greedy_simplicial_elimination(g: Graph) -> EliminationResult:
    """
    Repeatedly remove the smallest-label simplicial vertex. Success gives a
    perfect elimination order; getting stuck leaves a residual vertex set
    without simplicial vertices, so g is not chordal.
    """
    result = _greedy_elimination(g, is_simplicial_vertex)
    if result.succeeded:
        # removal order of simplicial vertices is a PEO by construction
        assert is_perfect_elimination_order(g, VertexOrder.from_sequence(result.sequence)).valid
    return result


def greedy_simple_elimination(g: Graph) -> EliminationResult:
    """
    Repeatedly remove the smallest-label simple vertex. Succeeds iff g is
    strongly chordal.

    NOTE; the removal sequence only certifies existence. It is not claimed
    to be a strong elimination order (in general it is not).
    """
    return _greedy_elimination(g, is_simple_vertex)


def brute_force_seo(g: Graph, limit: Optional[int] = None) -> BruteForceResult:
    """
    Try every permutation of the vertices (labels sorted, lexicographic
    permutation order) and return the first strong elimination order.
    ``tried`` counts the permutations examined; n! means all failed.
    """
    limit = Config.BRUTE_FORCE_LIMIT if limit is None else limit
    n = g.number_of_nodes()
    if n > limit:
        raise RefusalError(n, limit, 'brute_force_seo')

    closed = closed_neighborhoods(g)
    tried = 0
    for candidate in permutations(sorted(g.nodes)):
        tried += 1
        order = VertexOrder.from_sequence(candidate)
        if _first_strong_violation(closed, order, first_only=True) is None:
            return BruteForceResult(order, tried)
    logger.debug('all %d permutations fail', tried)
    return BruteForceResult(None, tried)


def normalize_cycle(cycle) -> Tuple[str, ...]:
    """Rotate to start at the smallest label; walk towards its smaller neighbour."""
    cycle = list(cycle)
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def has_odd_chord(g: Graph, cycle) -> bool:
    """
    True iff some chord joins two cycle vertices at odd distance along the
    cycle. For an even cycle the two arcs between positions p < q have the
    same parity, so q - p decides it.
    """
    length = len(cycle)
    for p in range(length):
        adj = g.adj[cycle[p]]
        for q in range(p + 3, length, 2):
            if (p, q) == (0, length - 1):
                continue
            if cycle[q] in adj:
                return True
    return False


def definitional_strongly_chordal(g: Graph, limit: Optional[int] = None) -> DefinitionResult:
    """
    Strong chordality straight from the definition: chordal, and every even
    cycle of length at least 6 has a chord between vertices at odd
    distance along the cycle. Exponential; refuses graphs above ``limit``.
    """
    limit = Config.DEFINITION_LIMIT if limit is None else limit
    n = g.number_of_nodes()
    if n > limit:
        raise RefusalError(n, limit, 'definitional_strongly_chordal')

    if not greedy_simplicial_elimination(g).succeeded:
        hole = next(c for c in nx.chordless_cycles(g) if len(c) >= 4)
        return DefinitionResult(False, normalize_cycle(hole), 'chordless')

    for cycle in nx.simple_cycles(g):
        if len(cycle) < 6 or len(cycle) % 2:
            continue
        if not has_odd_chord(g, cycle):
            return DefinitionResult(False, normalize_cycle(cycle), 'even-cycle')
    return DefinitionResult(True)
