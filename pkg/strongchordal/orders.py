"""
Perfect and strong elimination orders: checkers with violation
certificates, and the two order-to-representation constructions.

Positions are 1-based throughout so certificates read like the
quadruple condition: for i < j and k < l with v_k, v_l in N[v_i] and
v_k in N[v_j], also v_l in N[v_j].
"""

from __future__ import annotations

import logging
from typing import Dict, Optional, Set, Tuple

from .errors import EmptyGraphError, InvalidOrderError, OrderMismatchError
from .graph_core import Graph, closed_neighborhoods
from .host_tree import build_host_tree
from .models import OrderKind, OrderVerdict, Subtree, TreeRepresentation, VertexOrder

logger = logging.getLogger(__name__)


def parse_order(text: str, g: Optional[Graph] = None) -> VertexOrder:
    """Comma-separated labels, e.g. "a,b,c". Checked against g when given."""
    labels = [token.strip() for token in text.split(',')] if text.strip() else []
    if any(not label for label in labels):
        raise OrderMismatchError(f'empty label in order {text!r}')
    try:
        order = VertexOrder.from_sequence(labels)
    except ValueError as e:
        raise OrderMismatchError(str(e)) from None
    if g is not None:
        check_permutation(g, order)
    return order


def check_permutation(g: Graph, o: VertexOrder):
    if len(o) != g.number_of_nodes() or any(v not in g for v in o.sequence):
        missing = sorted(set(g.nodes) - set(o.sequence))
        extra = sorted(v for v in o.sequence if v not in g)
        raise OrderMismatchError(
            f'order is not a permutation of the vertex set (missing {missing}, unknown {extra})'
        )


def _first_strong_violation(closed: Dict[str, Set[str]], o: VertexOrder, first_only: bool = False):
    """
    The lexicographically least violating (i, j, k, l), or None.

    Only k, l in N[v_i] and j in N[v_k] can take part in a violation, so
    the scan is O(sum_i deg(v_i)^2 * max degree) rather than O(n^4).
    With ``first_only`` any violation is returned (used by the brute force).
    """
    seq = o.sequence
    pos = o.index
    for i, vi in enumerate(seq, start=1):
        ni = sorted(pos[u] for u in closed[vi])
        best = None
        for k in ni:
            vk = seq[k - 1]
            for j in sorted(pos[u] for u in closed[vk]):
                if j <= i or (best is not None and (j, k) >= best[:2]):
                    continue
                nj = closed[seq[j - 1]]
                for l in ni:
                    if l > k and seq[l - 1] not in nj:
                        best = (j, k, l)
                        break
                if best is not None and first_only:
                    return (i,) + best
        if best is not None:
            return (i,) + best
    return None


def is_strong_elimination_order(g: Graph, o: VertexOrder) -> OrderVerdict:
    check_permutation(g, o)
    violation = _first_strong_violation(closed_neighborhoods(g), o)
    if violation is None:
        return OrderVerdict(True, OrderKind.STRONG)
    return OrderVerdict(
        False, OrderKind.STRONG,
        violation=violation,
        vertices=tuple(o.at(p) for p in violation),
    )


def is_perfect_elimination_order(g: Graph, o: VertexOrder) -> OrderVerdict:
    """
    Each v_i must be simplicial among its successors. The certificate is
    the first failing position and its least non-adjacent pair of later
    neighbours (by position).
    """
    check_permutation(g, o)
    pos = o.index
    for i, vi in enumerate(o.sequence, start=1):
        later = sorted((pos[u], u) for u in g.adj[vi] if pos[u] > i)
        for a_at, (_, a) in enumerate(later):
            adj_a = g.adj[a]
            for _, b in later[a_at + 1:]:
                if b not in adj_a:
                    return OrderVerdict(
                        False, OrderKind.PERFECT,
                        violation=(i,), vertices=(vi,), pair=(a, b),
                    )
    return OrderVerdict(True, OrderKind.PERFECT)


############## Order -> representation ##############

def _representation_from_order(g: Graph, o: VertexOrder, unit_weights: bool) -> TreeRepresentation:
    """
    Shared construction: v_n is the root; v_j hangs under its first strict
    successor v_k (k := n when v_j has no later neighbour) with weight
    k - j (or 1); T(v_k) holds the nodes of v_k's predecessors in N[v_k].
    """
    seq = o.sequence
    pos = o.index
    n = len(seq)
    if n == 0:
        raise EmptyGraphError('the empty graph has no tree representation')

    arcs = [(seq[-1], None, 0)]
    for j in range(n - 1, 0, -1):
        vj = seq[j - 1]
        k = min((pos[u] for u in g.adj[vj] if pos[u] > j), default=n)
        arcs.append((vj, seq[k - 1], 1 if unit_weights else k - j))
    host = build_host_tree(arcs)

    assignment = {}
    for v in g.nodes:
        k = pos[v]
        members = [u for u in g.adj[v] if pos[u] < k]
        members.append(v)
        assignment[v] = Subtree(v, frozenset(members))
    return TreeRepresentation(host, assignment)


def seo_to_representation(g: Graph, o: VertexOrder, validate: bool = True) -> TreeRepresentation:
    """
    Compatible tree representation from a strong elimination order.

    The host tree has one node per vertex and node v_j sits at depth n - j;
    T(v_l) overshadows T(v_k) whenever l > k. Runs in O(n + m) once the
    order is known to be valid; ``validate=False`` skips the (slower) check
    for callers that already verified the order.
    """
    check_permutation(g, o)
    if validate:
        verdict = is_strong_elimination_order(g, o)
        if not verdict.valid:
            raise InvalidOrderError(verdict, 'strong')
    r = _representation_from_order(g, o, unit_weights=False)
    logger.debug('built weighted representation on %d nodes', len(r.host))
    return r


def peo_to_representation(g: Graph, o: VertexOrder, validate: bool = True) -> TreeRepresentation:
    """
    Unit-weight tree representation from a perfect elimination order.

    NOTE; disconnected graphs need no special case: the last vertex of every
    component other than v_n's has no later neighbour, so it hangs under v_n
    directly, which joins the per-component trees at the root.
    """
    check_permutation(g, o)
    if validate:
        verdict = is_perfect_elimination_order(g, o)
        if not verdict.valid:
            raise InvalidOrderError(verdict, 'perfect')
    return _representation_from_order(g, o, unit_weights=True)
