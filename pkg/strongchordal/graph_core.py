"""
Undirected simple graphs and the vertex-local predicates every other
module builds on.

A graph here is a frozen ``networkx.Graph`` whose node insertion order is
the canonical vertex order. Vertex labels are opaque strings; wherever a
deterministic choice is needed, labels are compared as strings.
"""

from __future__ import annotations

import logging
from typing import FrozenSet, Iterable, Set, Tuple

import networkx as nx

from .errors import GraphFormatError, UnknownVertexError
from .models import SimplicialVerdict, SimpleVerdict

logger = logging.getLogger(__name__)

Graph = nx.Graph


def make_graph(vertices: Iterable[str], edges: Iterable[Tuple[str, str]]) -> Graph:
    """
    Build a frozen graph from a vertex list and an edge list.

    Raises ValueError on self-loops, repeated edges or undeclared
    endpoints; parse_graph turns those into line-numbered format errors.
    """
    g = nx.Graph()
    for v in vertices:
        if v in g:
            raise ValueError(f'duplicate vertex {v!r}')
        g.add_node(v)
    for u, v in edges:
        if u == v:
            raise ValueError(f'self-loop on {u!r}')
        if u not in g or v not in g:
            raise ValueError(f'edge ({u}, {v}) has an undeclared endpoint')
        if g.has_edge(u, v):
            raise ValueError(f'duplicate edge ({u}, {v})')
        g.add_edge(u, v)
    return freeze(g)


def freeze(g: nx.Graph) -> Graph:
    return nx.freeze(g)


############## Graph file format ##############

def parse_graph(text: str) -> Graph:
    """
    Parse the line-oriented graph file format.

    c <comment>
    p edge <n> <m>
    v <label>            (optional, n lines; labels default to "1".."n")
    e <label1> <label2>  (exactly m lines)
    """
    header = None
    declared = []
    edges = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        tag = tokens[0]
        if tag == 'p':
            if header is not None:
                raise GraphFormatError('second header', lineno)
            if len(tokens) != 4 or tokens[1] != 'edge':
                raise GraphFormatError('malformed header', lineno)
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise GraphFormatError('malformed header', lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise GraphFormatError('malformed header', lineno)
            continue
        if header is None:
            raise GraphFormatError('missing header', lineno)
        if tag == 'v':
            if len(tokens) != 2:
                raise GraphFormatError('malformed vertex line', lineno)
            if edges:
                raise GraphFormatError('vertex declared after edges', lineno)
            if tokens[1] in declared:
                raise GraphFormatError(f'duplicate vertex {tokens[1]}', lineno)
            declared.append(tokens[1])
        elif tag == 'e':
            if len(tokens) != 3:
                raise GraphFormatError('malformed edge line', lineno)
            u, v = tokens[1], tokens[2]
            if u == v:
                raise GraphFormatError('self-loop', lineno)
            key = frozenset((u, v))
            if key in seen:
                raise GraphFormatError('duplicate edge', lineno)
            seen.add(key)
            edges.append((u, v, lineno))
        else:
            raise GraphFormatError(f'unknown line type {tag!r}', lineno)

    if header is None:
        raise GraphFormatError('missing header')
    n, m = header
    if declared and len(declared) != n:
        raise GraphFormatError(f'header declares {n} vertices, found {len(declared)}')
    vertices = declared or [str(i) for i in range(1, n + 1)]
    known = set(vertices)
    for u, v, lineno in edges:
        if u not in known or v not in known:
            raise GraphFormatError('undeclared endpoint', lineno)
    if len(edges) != m:
        raise GraphFormatError(f'header declares {m} edges, found {len(edges)}')

    g = make_graph(vertices, ((u, v) for u, v, _ in edges))
    logger.debug('parsed graph with %d vertices and %d edges', n, m)
    return g


def serialize_graph(g: Graph) -> str:
    """Vertices in canonical order, edges sorted by (min label, max label)."""
    lines = [f'p edge {g.number_of_nodes()} {g.number_of_edges()}']
    lines.extend(f'v {v}' for v in g.nodes)
    lines.extend(f'e {u} {v}' for u, v in sorted_edges(g))
    return '\n'.join(lines) + '\n'


############## Neighbourhoods and equality ##############

def _require(g: Graph, v: str):
    if v not in g:
        raise UnknownVertexError(v)


def closed_neighborhood(g: Graph, v: str) -> Set[str]:
    _require(g, v)
    closed = set(g.adj[v])
    closed.add(v)
    return closed


def closed_neighborhoods(g: Graph):
    """N[v] for every vertex, as a dict of sets."""
    result = {}
    for v, nbrs in g.adjacency():
        closed = set(nbrs)
        closed.add(v)
        result[v] = closed
    return result


def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    """A frozen copy of g restricted to s; vertex order follows g."""
    s = set(s)
    for v in s:
        _require(g, v)
    return freeze(g.subgraph(v for v in g.nodes if v in s).copy())


def sorted_edges(g: Graph):
    return sorted(tuple(sorted(e)) for e in g.edges)


def edge_set(g: Graph) -> FrozenSet[FrozenSet[str]]:
    return frozenset(frozenset(e) for e in g.edges)


def same_graph(g: Graph, h: Graph) -> bool:
    """Value equality: same vertex set and same edge set (order is ignored)."""
    return set(g.nodes) == set(h.nodes) and edge_set(g) == edge_set(h)


############## Vertex predicates ##############

def is_simplicial_vertex(g: Graph, v: str) -> SimplicialVerdict:
    """
    True iff N[v] is a clique. On failure, returns the lexicographically
    least non-adjacent pair inside N[v].
    """
    members = sorted(closed_neighborhood(g, v))
    for a_pos, a in enumerate(members):
        adj_a = g.adj[a]
        for b in members[a_pos + 1:]:
            if b not in adj_a:
                return SimplicialVerdict(False, (a, b))
    return SimplicialVerdict(True)


def is_simple_vertex(g: Graph, v: str) -> SimpleVerdict:
    """
    True iff the closed neighbourhoods of the members of N[v] form a chain
    under inclusion.

    Members are sorted by neighbourhood size (ties by label); the chain
    holds iff every consecutive pair is included. A failing consecutive
    pair is incomparable: with |N[a]| <= |N[b]|, N[b] inside N[a] would
    force equality and hence N[a] inside N[b].
    """
    closed = {u: closed_neighborhood(g, u) for u in closed_neighborhood(g, v)}
    chain = sorted(closed, key=lambda u: (len(closed[u]), u))
    for a, b in zip(chain, chain[1:]):
        if not closed[a] <= closed[b]:
            return SimpleVerdict(False, pair=(a, b))
    return SimpleVerdict(True, chain=tuple(chain))
