"""
Small worked instances with known answers.

Used by the ``selftest`` command and by the test suite. Each check in
``run_selftest`` returns (name, ok, message), in the same (ok, message)
spirit as the helpers in utils.
"""

from __future__ import annotations

import logging
from typing import List, Tuple

from .extraction import extract_strong_elimination_order
from .graph_core import Graph, parse_graph, same_graph
from .host_tree import build_host_tree, compatible_pair, make_subtree, overshadows
from .models import VertexOrder
from .orders import is_perfect_elimination_order, is_strong_elimination_order, seo_to_representation
from .recognition import (
    brute_force_seo,
    definitional_strongly_chordal,
    greedy_simple_elimination,
    greedy_simplicial_elimination,
)
from .representation import (
    bottom_up_order,
    intersection_graph,
    is_compatible_representation,
    parse_representation,
)
from .generators import generate_sun

logger = logging.getLogger(__name__)

# Seven vertices; a, b, c, w, x, y, z is a strong elimination order.
FANS_GRAPH = """c two nested fans around the triangle x, y, z
p edge 7 12
v a
v b
v c
v w
v x
v y
v z
e a w
e a x
e b w
e b x
e c x
e c y
e w x
e w y
e w z
e x y
e x z
e y z
"""

FANS_ORDER = 'a,b,c,w,x,y,z'

# i, j, k, l by decreasing root depth is not a strong elimination order
# (j and l are not adjacent), yet the representation is compatible.
SHARED_ROOT_REPRESENTATION = """t 3 4
node r - 0
node A r 2
node B r 1
sub i A
sub j B
sub k r A B
sub l r A
"""

SHARED_ROOT_GRAPH = """p edge 4 4
v i
v j
v k
v l
e i k
e i l
e j k
e k l
"""

# Both directions fail: a two-cycle in the overshadow digraph.
INCOMPATIBLE_REPRESENTATION = """t 4 2
node r - 0
node s r 1
node a s 1
node t s 1
sub p r s a
sub q s a t
"""


def fans_graph() -> Graph:
    return parse_graph(FANS_GRAPH)


def fans_order() -> VertexOrder:
    return VertexOrder.from_sequence(FANS_ORDER.split(','))


def shared_root_representation():
    return parse_representation(SHARED_ROOT_REPRESENTATION)


def shared_root_graph() -> Graph:
    return parse_graph(SHARED_ROOT_GRAPH)


def incompatible_representation():
    return parse_representation(INCOMPATIBLE_REPRESENTATION)


def overshadow_path_tree():
    """
    Root R with leaves L and M. T1 = {L}, T2 = {M}, T3 = {R, L}: T1 does
    not overshadow T3 (witness R) while every other listed direction holds.
    """
    host = build_host_tree([('R', None, 0), ('L', 'R', 1), ('M', 'R', 1)])
    subtrees = (
        make_subtree(host, ['L']),
        make_subtree(host, ['M']),
        make_subtree(host, ['R', 'L']),
    )
    return host, subtrees


def overshadow_star_tree():
    """Root R with leaves C1..C3 and Ti = {R, Ci}: overshadowing runs in a 3-cycle."""
    host = build_host_tree([('R', None, 0), ('C1', 'R', 1), ('C2', 'R', 1), ('C3', 'R', 1)])
    subtrees = tuple(make_subtree(host, ['R', f'C{i}']) for i in (1, 2, 3))
    return host, subtrees


############## Selftest ##############

def _check_fans():
    g = fans_graph()
    o = fans_order()
    if not is_strong_elimination_order(g, o).valid or not is_perfect_elimination_order(g, o).valid:
        return False, 'a..z rejected'
    r = seo_to_representation(g, o)
    if not same_graph(intersection_graph(r), g):
        return False, 'intersection graph differs'
    if not is_compatible_representation(r).compatible:
        return False, 'representation not compatible'
    extracted = extract_strong_elimination_order(r)
    if not extracted.succeeded or not is_strong_elimination_order(g, extracted.order).valid:
        return False, 'extracted order rejected'
    return True, f'extracted {extracted.order.as_text()}'


def _check_overshadow_tables():
    host, (t1, t2, t3) = overshadow_path_tree()
    failing = overshadows(host, t1, t3)
    if not (overshadows(host, t1, t2).holds and overshadows(host, t2, t3).holds
            and overshadows(host, t3, t1).holds):
        return False, 'expected overshadow missing'
    if failing.holds or failing.witness != 'R':
        return False, 'T1 over T3 should fail with witness R'
    host, (s1, s2, s3) = overshadow_star_tree()
    for a, b in ((s1, s2), (s2, s3), (s3, s1)):
        verdict = overshadows(host, a, b)
        if not verdict.holds or verdict.cutoff != 0:
            return False, 'star cycle broken'
    return True, 'truth tables match'


def _check_shared_root():
    r = shared_root_representation()
    g = intersection_graph(r)
    if not same_graph(g, shared_root_graph()):
        return False, 'intersection graph differs'
    verdict = is_strong_elimination_order(g, bottom_up_order(r))
    if verdict.valid or verdict.violation != (1, 2, 3, 4):
        return False, 'bottom-up order should fail at 1,2,3,4'
    extracted = extract_strong_elimination_order(r)
    if not extracted.succeeded or not is_strong_elimination_order(g, extracted.order).valid:
        return False, 'extraction failed'
    return True, f'extracted {extracted.order.as_text()}'


def _check_sun():
    g = generate_sun(3)
    if greedy_simple_elimination(g).succeeded:
        return False, 'greedy simple elimination should get stuck'
    if not greedy_simplicial_elimination(g).succeeded:
        return False, '3-sun should be chordal'
    search = brute_force_seo(g)
    if search.found or search.tried != 720:
        return False, 'brute force should exhaust 720 permutations'
    if definitional_strongly_chordal(g).strongly_chordal:
        return False, 'definitional check should fail'
    return True, 'not strongly chordal'


def _check_incompatible():
    r = incompatible_representation()
    p, q = r.assignment['p'], r.assignment['q']
    if compatible_pair(r.host, p, q).compatible:
        return False, 'pair should be incompatible'
    if extract_strong_elimination_order(r).succeeded:
        return False, 'extraction should report a cycle'
    return True, 'cycle reported'


SELFTEST_CHECKS = (
    ('fans-round-trip', _check_fans),
    ('overshadow-tables', _check_overshadow_tables),
    ('shared-root-extraction', _check_shared_root),
    ('sun3', _check_sun),
    ('incompatible-pair', _check_incompatible),
)


def run_selftest() -> List[Tuple[str, bool, str]]:
    results = []
    for name, check in SELFTEST_CHECKS:
        ok, message = check()
        logger.debug('selftest %s: %s', name, message)
        results.append((name, ok, message))
    return results
