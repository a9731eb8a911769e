"""
Rooted arc-weighted host trees, their subtrees, and the overshadow
relation.

T1 overshadows T2 when every node of T2 - T1 lies strictly deeper than
every node of T2 & T1. The deepest common node gives the cutoff value;
a node of T2 - T1 at or above the cutoff is a witness that the relation
fails. Depths are weighted (sum of arc weights up to the root) and are
computed once when the tree is built.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Tuple

from .errors import HostTreeError, InvalidSubtreeError, UnknownVertexError
from .models import HostTree, OvershadowVerdict, PairVerdict, Subtree

logger = logging.getLogger(__name__)


def build_host_tree(arcs: Iterable[Tuple[str, Optional[str], int]]) -> HostTree:
    """
    Build a HostTree from (node, parent, weight) triples, parents first.

    The root is the single triple whose parent is None (its weight is
    ignored). Every other weight must be a positive integer.
    """
    nodes = []
    parent = {}
    weight = {}
    depth = {}
    children = {}
    root = None
    for node, up, w in arcs:
        if node in depth:
            raise HostTreeError(f'duplicate node {node!r}')
        if up is None:
            if root is not None:
                raise HostTreeError(f'second root {node!r} (root is {root!r})')
            root = node
            depth[node] = 0
        else:
            if up not in depth:
                raise HostTreeError(f'parent {up!r} of {node!r} is not declared before it')
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise HostTreeError(f'arc {up!r}->{node!r} has non-positive weight {w!r}')
            weight[node] = w
            depth[node] = depth[up] + w
            children[up].append(node)
        nodes.append(node)
        parent[node] = up
        children[node] = []
    if root is None:
        raise HostTreeError('host tree has no root')
    return HostTree(
        nodes=tuple(nodes),
        root=root,
        parent=parent,
        weight=weight,
        depth=depth,
        children={x: tuple(c) for x, c in children.items()},
    )


def node_depth(t: HostTree, x: str) -> int:
    if x not in t:
        raise UnknownVertexError(x, 'node')
    return t.depth[x]


def is_valid_subtree(t: HostTree, s: Iterable[str]) -> Tuple[bool, Optional[str]]:
    """
    True iff s is a nonempty connected node set; also returns its root.

    A node set of a rooted tree is connected exactly when one member has
    its parent outside the set (or is the tree root); that member is the
    minimum-depth member.
    """
    s = set(s)
    for x in s:
        if x not in t:
            raise UnknownVertexError(x, 'node')
    tops = [x for x in s if t.parent[x] not in s]
    if len(tops) != 1:
        return False, None
    return True, tops[0]


def make_subtree(t: HostTree, members: Iterable[str], root: Optional[str] = None) -> Subtree:
    """Validated Subtree constructor; if ``root`` is given it must be the actual root."""
    members = frozenset(members)
    ok, found = is_valid_subtree(t, members)
    if not ok:
        raise InvalidSubtreeError('subtree not connected' if members else 'subtree is empty')
    if root is not None and root != found:
        raise InvalidSubtreeError(f'declared root {root!r} is not the subtree root {found!r}')
    return Subtree(found, members)


def overshadows(t: HostTree, t1: Subtree, t2: Subtree) -> OvershadowVerdict:
    """
    Does t1 overshadow t2?

    Runs in O(|t1| + |t2|). On failure the witness is the node of t2 - t1
    with minimum depth (ties by node id), which is then at or above the
    cutoff.
    """
    small, large = (t1.members, t2.members) if len(t1) <= len(t2) else (t2.members, t1.members)
    common = [x for x in small if x in large]
    if not common:
        return OvershadowVerdict(holds=True, disjoint=True)

    depth = t.depth
    cutoff = max(depth[x] for x in common)
    members1 = t1.members
    witness = None
    for x in t2.members:
        if x in members1 or depth[x] > cutoff:
            continue
        if witness is None or (depth[x], x) < (depth[witness], witness):
            witness = x
    if witness is None:
        return OvershadowVerdict(holds=True, cutoff=cutoff)
    return OvershadowVerdict(holds=False, cutoff=cutoff, witness=witness)


def overshadow_holds(t: HostTree, t1: Subtree, t2: Subtree) -> bool:
    """``overshadows(t, t1, t2).holds`` without building the certificate."""
    rest = t2.members - t1.members
    if not rest:
        return True
    common = t1.members & t2.members
    if not common:
        return True
    depth = t.depth.__getitem__
    return min(map(depth, rest)) > max(map(depth, common))


def compatible_pair(t: HostTree, t1: Subtree, t2: Subtree) -> PairVerdict:
    return PairVerdict(
        forward=overshadows(t, t1, t2).holds,
        backward=overshadows(t, t2, t1).holds,
    )


def roots_meet(t: HostTree, t1: Subtree, t2: Subtree) -> bool:
    """
    Root-meeting property of intersecting subtrees: the deeper root lies in
    the other subtree, and equal-depth roots coincide. Disjoint pairs
    satisfy it vacuously.
    """
    if not (t1.members & t2.members):
        return True
    d1, d2 = t.depth[t1.root], t.depth[t2.root]
    if d1 == d2:
        return t1.root == t2.root
    if d1 > d2:
        return t1.root in t2
    return t2.root in t1
