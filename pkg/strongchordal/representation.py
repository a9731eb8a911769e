"""
Tree representations: a host tree plus one subtree per graph vertex.

Covers the intersection graph, whole-representation compatibility, the
RDV test, bottom-up enumeration orders, the unit-weight subdivision
experiment and the representation file format.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Set, Tuple

import networkx as nx

from .errors import (
    HostTreeError,
    InvalidSubtreeError,
    RepresentationFormatError,
    UnknownVertexError,
)
from .graph_core import Graph, freeze, same_graph
from .host_tree import build_host_tree, compatible_pair, make_subtree
from .models import (
    CompatibilityVerdict,
    HostTree,
    SubdivisionPolicy,
    SubdivisionReport,
    Subtree,
    TreeRepresentation,
    VertexOrder,
)

logger = logging.getLogger(__name__)


def build_representation(host: HostTree, members: Mapping[str, Iterable[str]]) -> TreeRepresentation:
    """Validate every member set against the host tree and assemble a representation."""
    assignment = {}
    for v, nodes in members.items():
        try:
            assignment[v] = make_subtree(host, nodes)
        except InvalidSubtreeError as e:
            raise InvalidSubtreeError(f'T({v}): {e}') from None
    return TreeRepresentation(host, assignment)


def vertices_at(r: TreeRepresentation) -> Dict[str, List[str]]:
    """For every host node, the vertices whose subtree contains it."""
    occupants = defaultdict(list)
    for v, s in r.assignment.items():
        for x in s.members:
            occupants[x].append(v)
    return dict(occupants)


def intersecting_pairs(r: TreeRepresentation) -> List[Tuple[str, str]]:
    """
    Every pair of intersecting subtrees, once, as (v, u) with the root of
    T(u) inside T(v).

    Two subtrees meet iff the deeper root lies in the other one, so it is
    enough to look, for each T(v), at the vertices rooted at its members:
    O(n + m + sum |T(v)|). Subtrees sharing a root are reported with the
    smaller label first.
    """
    rooted_at = defaultdict(list)
    for v, s in r.assignment.items():
        rooted_at[s.root].append(v)

    pairs = []
    for v, s in r.assignment.items():
        for x in s.members:
            occupants = rooted_at.get(x)
            if occupants is None:
                continue
            if x != s.root:
                pairs.extend((v, u) for u in occupants)
            else:
                pairs.extend((v, u) for u in occupants if v < u)
    return pairs


def intersection_graph(r: TreeRepresentation) -> Graph:
    """The graph with an edge (u, v) iff T(u) and T(v) share a node."""
    g = nx.Graph()
    g.add_nodes_from(r.assignment)
    g.add_edges_from(intersecting_pairs(r))
    return freeze(g)


############## Compatibility ##############

def incompatible_pairs(r: TreeRepresentation) -> List[Tuple[str, str]]:
    """All incompatible vertex pairs (u < v), in lexicographic order."""
    host = r.host
    pairs = []
    for u, v in sorted(tuple(sorted(e)) for e in intersection_graph(r).edges):
        if not compatible_pair(host, r.assignment[u], r.assignment[v]).compatible:
            pairs.append((u, v))
    return pairs


def is_compatible_representation(r: TreeRepresentation) -> CompatibilityVerdict:
    """
    True iff every pair of subtrees is compatible; otherwise reports the
    lexicographically least incompatible pair.

    NOTE; disjoint subtrees always overshadow each other, so only pairs
    that are edges of the intersection graph are examined.
    """
    host = r.host
    for u, v in sorted(tuple(sorted(e)) for e in intersection_graph(r).edges):
        if not compatible_pair(host, r.assignment[u], r.assignment[v]).compatible:
            logger.debug('incompatible pair (%s, %s)', u, v)
            return CompatibilityVerdict(False, (u, v))
    return CompatibilityVerdict(True)


def is_rdv(r: TreeRepresentation) -> bool:
    """True iff every subtree is a downward path (no member has two children inside it)."""
    children = r.host.children
    for s in r.assignment.values():
        for x in s.members:
            if sum(1 for c in children[x] if c in s.members) > 1:
                return False
    return True


def bottom_up_order(r: TreeRepresentation) -> VertexOrder:
    """Vertices by decreasing root depth, ties by label."""
    return VertexOrder.from_sequence(sorted(r.assignment, key=lambda v: (-r.root_depth(v), v)))


def has_distinct_roots(r: TreeRepresentation) -> bool:
    """
    True iff no two subtrees share a root node. In that case every
    bottom-up enumeration order is a strong elimination order (ties only
    need breaking between subtrees rooted at the same node).
    """
    roots = [s.root for s in r.assignment.values()]
    return len(roots) == len(set(roots))


def restrict_representation(r: TreeRepresentation, vertices: Iterable[str]) -> TreeRepresentation:
    """
    The representation of the induced subgraph on ``vertices``: same host,
    only the chosen subtrees. Compatibility carries over.
    """
    keep = set(vertices)
    for v in keep:
        if v not in r.assignment:
            raise UnknownVertexError(v)
    return TreeRepresentation(r.host, {v: s for v, s in r.assignment.items() if v in keep})


############## Unit-weight subdivision ##############

def subdivide_unit_weights(r: TreeRepresentation, policy: SubdivisionPolicy) -> SubdivisionReport:
    """
    Replace every arc of weight k > 1 by k unit arcs through k - 1 fresh
    nodes named "<upper>-<lower>-<i>" (i counted from the upper end).

    Each fresh node joins every subtree holding both ends of its arc; with
    EXTEND_ALL it also joins every subtree holding the upper end. The
    result is re-checked: intersection graph and compatibility.
    """
    host = r.host
    occupants = vertices_at(r)
    arcs = []
    extra: Dict[str, Set[str]] = defaultdict(set)
    existing = set(host.nodes)
    for x in host.nodes:
        up = host.parent[x]
        if up is None:
            arcs.append((x, None, 0))
            continue
        w = host.weight[x]
        above = up
        if w > 1:
            upper_set = set(occupants.get(up, ()))
            both = upper_set & set(occupants.get(x, ()))
            joiners = upper_set if policy is SubdivisionPolicy.EXTEND_ALL else both
            for i in range(1, w):
                fresh = f'{up}-{x}-{i}'
                if fresh in existing:
                    raise HostTreeError(f'subdivision node id {fresh!r} clashes with an existing node')
                existing.add(fresh)
                arcs.append((fresh, above, 1))
                for v in joiners:
                    extra[v].add(fresh)
                above = fresh
        arcs.append((x, above, 1 if w > 1 else w))

    new_host = build_host_tree(arcs)
    assignment = {}
    for v, s in r.assignment.items():
        assignment[v] = Subtree(s.root, s.members | frozenset(extra.get(v, ())))
    result = TreeRepresentation(new_host, assignment)

    preserved = same_graph(intersection_graph(result), intersection_graph(r))
    pairs = tuple(incompatible_pairs(result))
    verdict = CompatibilityVerdict(not pairs, pairs[0] if pairs else None)
    logger.info(
        'subdivided %d arcs (%s): %d fresh nodes, %d incompatible pairs',
        sum(1 for x in host.nodes if host.weight.get(x, 1) > 1), policy.value,
        len(new_host) - len(host), len(pairs),
    )
    return SubdivisionReport(result, preserved, verdict, pairs)


############## Representation file format ##############

def parse_representation(text: str) -> TreeRepresentation:
    """
    Parse the line-oriented representation format.

    t <num_nodes> <num_vertices>
    node <id> <parent-id|-> <weight>     (parents before children; root: "-" 0)
    sub <vertex> <root-id> [<node-id> ...]
    """
    header = None
    node_lines = []
    sub_lines = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        tag = tokens[0]
        if tag == 't':
            if header is not None:
                raise RepresentationFormatError('second header', lineno)
            try:
                header = (int(tokens[1]), int(tokens[2]))
            except (IndexError, ValueError):
                raise RepresentationFormatError('malformed header', lineno) from None
            if len(tokens) != 3:
                raise RepresentationFormatError('malformed header', lineno)
        elif header is None:
            raise RepresentationFormatError('missing header', lineno)
        elif tag == 'node':
            if len(tokens) != 4:
                raise RepresentationFormatError('malformed node line', lineno)
            if sub_lines:
                raise RepresentationFormatError('node declared after subtrees', lineno)
            try:
                w = int(tokens[3])
            except ValueError:
                raise RepresentationFormatError('malformed weight', lineno) from None
            node_lines.append((tokens[1], None if tokens[2] == '-' else tokens[2], w, lineno))
        elif tag == 'sub':
            if len(tokens) < 3:
                raise RepresentationFormatError('malformed sub line', lineno)
            sub_lines.append((tokens[1], tokens[2], tokens[3:], lineno))
        else:
            raise RepresentationFormatError(f'unknown line type {tag!r}', lineno)
    if header is None:
        raise RepresentationFormatError('missing header')

    all_ids = {node for node, _, _, _ in node_lines}
    declared = set()
    arcs = []
    for node, up, w, lineno in node_lines:
        if node in declared:
            raise RepresentationFormatError(f'duplicate node {node}', lineno)
        if up is None:
            if w != 0:
                raise RepresentationFormatError('root weight must be 0', lineno)
        else:
            if up not in all_ids:
                raise RepresentationFormatError(f'orphan node {node}', lineno)
            if up not in declared:
                raise RepresentationFormatError(f'parent {up} declared after child', lineno)
            if w < 1:
                raise RepresentationFormatError('nonpositive weight', lineno)
        declared.add(node)
        arcs.append((node, up, w))
    if len(arcs) != header[0]:
        raise RepresentationFormatError(f'header declares {header[0]} nodes, found {len(arcs)}')
    try:
        host = build_host_tree(arcs)
    except HostTreeError as e:
        raise RepresentationFormatError(str(e)) from None

    assignment = {}
    for v, root, rest, lineno in sub_lines:
        if v in assignment:
            raise RepresentationFormatError(f'duplicate subtree for {v}', lineno)
        members = [root] + rest
        for x in members:
            if x not in host:
                raise RepresentationFormatError(f'unknown node {x}', lineno)
        if len(set(members)) != len(members):
            raise RepresentationFormatError('repeated node in subtree', lineno)
        try:
            assignment[v] = make_subtree(host, members, root=root)
        except InvalidSubtreeError as e:
            raise RepresentationFormatError(str(e), lineno) from None
    if len(assignment) != header[1]:
        raise RepresentationFormatError(f'header declares {header[1]} vertices, found {len(assignment)}')

    logger.debug('parsed representation: %d nodes, %d subtrees', len(host), len(assignment))
    return TreeRepresentation(host, assignment)


def serialize_representation(r: TreeRepresentation) -> str:
    host = r.host
    lines = [f't {len(host)} {len(r)}']
    for x in host.nodes:
        up = host.parent[x]
        if up is None:
            lines.append(f'node {x} - 0')
        else:
            lines.append(f'node {x} {up} {host.weight[x]}')
    for v, s in r.assignment.items():
        lines.append(f'sub {v} ' + ' '.join(s.sorted_members()))
    return '\n'.join(lines) + '\n'
