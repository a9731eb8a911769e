"""
Reading a strong elimination order straight off a compatible tree
representation.

For every edge (v, w) of the intersection graph both overshadow
directions are evaluated once; v -> w goes into the auxiliary digraph H
when T(v) does not overshadow T(w), i.e. v has to come first. A directed
cycle in H proves the representation incompatible. Otherwise any
topological order of H is a strong elimination order; we pick the one
that always takes the deepest-rooted available vertex (ties by label),
which is also a bottom-up enumeration order.

When the roots of two intersecting subtrees differ, the one rooted
deeper never overshadows the other, so in a compatible representation
every arc of H points from a deeper root to a shallower or equal one.
Sorting by root depth then satisfies all arcs except those between
subtrees sharing a root, and only those go through the topological sort.

Cost: O(n + m + sum |T(v)|), plus sorting by depth. For representations
built by seo_to_representation |T(v)| <= deg(v) + 1. For an arbitrary
host tree the subtree-size term is real; pass precomputed verdicts to
avoid it.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from .config import Config
from .errors import RepresentationMismatchError, StrongChordalError
from .graph_core import Graph
from .host_tree import compatible_pair, overshadow_holds, overshadows
from .models import ExtractionResult, OvershadowDigraph, TreeRepresentation, VertexOrder
from .representation import intersecting_pairs, is_compatible_representation

logger = logging.getLogger(__name__)


def _check_graph(g: Graph, r: TreeRepresentation, pairs: List[Tuple[str, str]]):
    if (
        g.number_of_nodes() != len(r.assignment)
        or g.number_of_edges() != len(pairs)
        or any(v not in g for v in r.assignment)
        or not all(g.has_edge(v, u) for v, u in pairs)
    ):
        raise RepresentationMismatchError('graph is not the intersection graph of the representation')


def build_overshadow_digraph(
    r: TreeRepresentation,
    g: Optional[Graph] = None,
    verdicts: Optional[Mapping[Tuple[str, str], bool]] = None,
) -> OvershadowDigraph:
    """
    Build H for representation r.

    ``g``, when given, must be the intersection graph of r; it is checked
    against the intersecting pairs, not recomputed. ``verdicts`` may supply
    precomputed answers: verdicts[(v, w)] is True iff T(v) overshadows
    T(w); missing entries are evaluated here.
    """
    pairs = intersecting_pairs(r)
    if g is not None:
        _check_graph(g, r, pairs)

    host = r.host
    assignment = r.assignment
    arcs = []
    if verdicts is None:
        for v, u in pairs:
            tv, tu = assignment[v], assignment[u]
            if not overshadow_holds(host, tv, tu):
                arcs.append((v, u))
            # the root of T(v) lies strictly above T(u) and witnesses the failure
            if tu.root != tv.root or not overshadow_holds(host, tu, tv):
                arcs.append((u, v))
    else:
        for v, u in pairs:
            tv, tu = assignment[v], assignment[u]
            forward = verdicts.get((v, u))
            if forward is None:
                forward = overshadow_holds(host, tv, tu)
            backward = verdicts.get((u, v))
            if backward is None:
                backward = overshadow_holds(host, tu, tv)
            if not forward:
                arcs.append((v, u))
            if not backward:
                arcs.append((u, v))
    return OvershadowDigraph(tuple(assignment), frozenset(arcs))


def _to_networkx(vertices: Iterable[str], arcs: Iterable[Tuple[str, str]]) -> nx.DiGraph:
    d = nx.DiGraph(arcs)
    d.add_nodes_from(vertices)
    return d


def _sort_or_cycle(d: nx.DiGraph, key) -> Tuple[Optional[List[str]], Optional[Tuple[str, ...]]]:
    try:
        return list(nx.lexicographical_topological_sort(d, key=key)), None
    except nx.NetworkXUnfeasible:
        return None, tuple(u for u, _ in nx.find_cycle(d))


def extract_strong_elimination_order(
    r: TreeRepresentation,
    g: Optional[Graph] = None,
    verdicts: Optional[Mapping[Tuple[str, str], bool]] = None,
) -> ExtractionResult:
    """
    A strong elimination order of the intersection graph, or a directed
    cycle of H when the representation is not compatible.
    """
    h = build_overshadow_digraph(r, g, verdicts)
    depth = r.host.depth
    root_depth: Dict[str, int] = {v: depth[s.root] for v, s in r.assignment.items()}
    key = {v: (-root_depth[v], v) for v in h.vertices}

    level_arcs = []
    upward = False
    for u, w in h.arcs:
        du, dw = root_depth[u], root_depth[w]
        if du < dw:
            upward = True
            break
        if du == dw:
            level_arcs.append((u, w))

    if upward:
        sequence, cycle = _sort_or_cycle(_to_networkx(h.vertices, h.arcs), key.__getitem__)
    else:
        sequence = sorted(h.vertices, key=key.__getitem__)
        cycle = None
        if level_arcs:
            levels = {root_depth[u] for u, _ in level_arcs}
            tied = [v for v in sequence if root_depth[v] in levels]
            refined, cycle = _sort_or_cycle(_to_networkx(tied, level_arcs), key.__getitem__)
            if refined is not None:
                # refined keeps the depth blocks of tied, reordered inside each block
                slots = iter(refined)
                sequence = [next(slots) if root_depth[v] in levels else v for v in sequence]

    if cycle is not None:
        logger.info('overshadow digraph has a cycle of length %d', len(cycle))
        return ExtractionResult(cycle=cycle)

    logger.debug('extracted order over %d vertices from %d arcs', len(sequence), len(h.arcs))
    return ExtractionResult(order=VertexOrder.from_sequence(sequence))

def verify_cycle_certificate(r: TreeRepresentation, cycle) -> Tuple[str, str]:
    """
    Re-check a cycle certificate: return a consecutive pair of the cycle
    whose subtrees are incompatible. One always exists when every arc of
    the cycle is a genuine "does not overshadow".
    """
    cycle = tuple(cycle)
    host = r.host
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if overshadows(host, r.assignment[v], r.assignment[w]).holds:
            raise StrongChordalError(f'{v} -> {w} is not an arc of the overshadow digraph')
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if not compatible_pair(host, r.assignment[v], r.assignment[w]).compatible:
            return (v, w)
    raise StrongChordalError('cycle certificate has no incompatible consecutive pair')


def deepest_root_vertex(r: TreeRepresentation, check: Optional[bool] = None) -> str:
    """
    The vertex whose subtree root is deepest (ties by label). For a
    compatible representation this vertex is simple in the intersection
    graph. ``check`` (default Config.CHECK_COMPATIBILITY) verifies that
    hypothesis first.
    """
    if not r.assignment:
        raise StrongChordalError('empty representation has no vertices')
    if check is None:
        check = Config.CHECK_COMPATIBILITY
    if check:
        verdict = is_compatible_representation(r)
        if not verdict.compatible:
            raise StrongChordalError(f'representation is not compatible: pair {verdict.pair}')
    return min(r.assignment, key=lambda v: (-r.root_depth(v), v))
