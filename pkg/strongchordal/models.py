"""
Value types shared by every module.

All classes are frozen ``attrs`` classes: once built they are never
mutated, so they can be shared freely between modules (and threads).
Mapping fields hold plain dicts that nothing writes to after construction.

Graphs themselves are frozen ``networkx.Graph`` objects, see graph_core.
"""

from __future__ import annotations

from enum import Enum as PyEnum
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

from attrs import field, frozen


class OrderKind(PyEnum):
    """
    Enum helper class naming the two elimination-order checks.

    NOTE; this class inherits from the ``Enum`` python standard library.
    """
    STRONG = 'strong'
    PERFECT = 'perfect'


class SubdivisionPolicy(PyEnum):
    """
    How fresh subdivision nodes are shared out among the subtrees.

    EXTEND_NONE only adds the mandatory memberships (subtrees holding both
    ends of the subdivided arc); EXTEND_ALL also extends every subtree that
    holds the upper end.
    """
    EXTEND_NONE = 'extend-none'
    EXTEND_ALL = 'extend-all'


class RecognitionMethod(PyEnum):
    GREEDY = 'greedy'
    BRUTEFORCE = 'bruteforce'
    DEFINITION = 'definition'


class GeneratorKind(PyEnum):
    RDV = 'rdv'
    CHORDAL = 'chordal'
    SUN = 'sun'
    RANDOM = 'random'


@frozen
class VertexOrder:
    """
    A permutation of the vertex set, with 1-based position lookup.

    Use ``VertexOrder.from_sequence`` rather than the raw constructor.
    """
    sequence: Tuple[str, ...]
    index: Dict[str, int] = field(eq=False, repr=False)

    @classmethod
    def from_sequence(cls, labels) -> 'VertexOrder':
        sequence = tuple(labels)
        index = {v: p for p, v in enumerate(sequence, start=1)}
        if len(index) != len(sequence):
            raise ValueError('vertex order repeats a label')
        return cls(sequence, index)

    def position(self, v: str) -> int:
        return self.index[v]

    def at(self, p: int) -> str:
        return self.sequence[p - 1]

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def as_text(self) -> str:
        return ','.join(self.sequence)


@frozen
class HostTree:
    """
    A rooted tree with positive integer arc weights.

    ``nodes`` lists parents before children. ``weight`` has an entry for
    every non-root node (weight of the arc to its parent), ``depth`` is
    the weighted distance from the root and is computed once, at build time
    (see host_tree.build_host_tree).
    """
    nodes: Tuple[str, ...]
    root: str
    parent: Dict[str, Optional[str]] = field(repr=False)
    weight: Dict[str, int] = field(repr=False)
    depth: Dict[str, int] = field(repr=False)
    children: Dict[str, Tuple[str, ...]] = field(eq=False, repr=False)

    def __contains__(self, x):
        return x in self.depth

    def __len__(self):
        return len(self.nodes)


@frozen
class Subtree:
    """A connected node set of a host tree together with its (unique) root node."""
    root: str
    members: FrozenSet[str]

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def sorted_members(self) -> Tuple[str, ...]:
        """Root first, the remaining node ids ascending (the file format order)."""
        return (self.root,) + tuple(sorted(self.members - {self.root}))


@frozen
class OvershadowVerdict:
    """
    Outcome of ``overshadows(t, t1, t2)``.

    NOTE; ``disjoint`` verdicts always hold and carry no cutoff. A failing
    verdict always carries a witness, a node of T2 minus T1 whose depth is at
    most the cutoff.
    """
    holds: bool
    disjoint: bool = False
    cutoff: Optional[int] = None
    witness: Optional[str] = None

    def to_dict(self):
        return {
            'holds': self.holds,
            'disjoint': self.disjoint,
            'cutoff': self.cutoff,
            'witness': self.witness,
        }


@frozen
class PairVerdict:
    """(t1 overshadows t2, t2 overshadows t1) for a pair of subtrees."""
    forward: bool
    backward: bool

    @property
    def compatible(self) -> bool:
        return self.forward or self.backward


@frozen
class TreeRepresentation:
    """
    A host tree plus one subtree per graph vertex.

    ``assignment`` keeps the vertex order it was built with; that order is
    the vertex order of the intersection graph and of the file format.
    """
    host: HostTree
    assignment: Dict[str, Subtree]

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(self.assignment)

    def subtree(self, v: str) -> Subtree:
        return self.assignment[v]

    def root_of(self, v: str) -> str:
        return self.assignment[v].root

    def root_depth(self, v: str) -> int:
        return self.host.depth[self.assignment[v].root]

    def __len__(self):
        return len(self.assignment)


@frozen
class SimplicialVerdict:
    holds: bool
    pair: Optional[Tuple[str, str]] = None


@frozen
class SimpleVerdict:
    """
    Outcome of ``is_simple_vertex``: on success ``chain`` orders N[v] so
    that the closed neighbourhoods grow by inclusion, on failure ``pair``
    holds two members of N[v] whose neighbourhoods are incomparable.
    """
    holds: bool
    chain: Optional[Tuple[str, ...]] = None
    pair: Optional[Tuple[str, str]] = None


@frozen
class OrderVerdict:
    """
    Outcome of an elimination-order check.

    For strong orders ``violation`` holds the positions (i, j, k, l); for
    perfect orders it holds (i,) and ``pair`` names two later neighbours of
    v_i that are not adjacent. ``vertices`` gives the labels at those
    positions.
    """
    valid: bool
    kind: OrderKind
    violation: Optional[Tuple[int, ...]] = None
    vertices: Optional[Tuple[str, ...]] = None
    pair: Optional[Tuple[str, str]] = None

    def describe(self) -> str:
        if self.valid:
            return 'valid'
        text = 'positions ' + ','.join(str(p) for p in self.violation)
        text += ' vertices ' + ','.join(self.vertices)
        if self.pair:
            text += ' non-adjacent ' + ','.join(self.pair)
        return text

    def to_dict(self):
        return {
            'valid': self.valid,
            'kind': self.kind.value,
            'violation': self.violation,
            'vertices': self.vertices,
            'pair': self.pair,
        }


@frozen
class CompatibilityVerdict:
    compatible: bool
    pair: Optional[Tuple[str, str]] = None

    def to_dict(self):
        return {'compatible': self.compatible, 'pair': self.pair}


@frozen
class SubdivisionReport:
    """
    Result of the unit-weight subdivision experiment.

    ``intersection_preserved`` is the recomputed check that the subdivided
    representation still represents the same graph.
    """
    representation: TreeRepresentation
    intersection_preserved: bool
    compatibility: CompatibilityVerdict
    incompatible_pairs: Tuple[Tuple[str, str], ...] = ()

    def to_dict(self):
        return {
            'intersection_preserved': self.intersection_preserved,
            'compatible': self.compatibility.compatible,
            'pair': self.compatibility.pair,
            'incompatible_pairs': [list(p) for p in self.incompatible_pairs],
        }


@frozen
class OvershadowDigraph:
    """
    The auxiliary digraph H: an arc v -> w for every edge (v, w) of the
    intersection graph with T(v) not overshadowing T(w), i.e. v must come
    earlier in any order read off the representation.
    """
    vertices: Tuple[str, ...]
    arcs: FrozenSet[Tuple[str, str]]

    def __contains__(self, arc):
        return arc in self.arcs

    def out_arcs(self, v: str):
        return sorted(w for (u, w) in self.arcs if u == v)


@frozen
class ExtractionResult:
    """Either ``order`` (a strong elimination order) or ``cycle`` (a directed cycle of H)."""
    order: Optional[VertexOrder] = None
    cycle: Optional[Tuple[str, ...]] = None

    @property
    def succeeded(self) -> bool:
        return self.order is not None

    def to_dict(self):
        return {
            'order': list(self.order.sequence) if self.order is not None else None,
            'cycle': list(self.cycle) if self.cycle is not None else None,
        }


@frozen
class EliminationResult:
    """
    Outcome of a greedy elimination. On success ``sequence`` lists the
    vertices in removal order; when stuck ``residual`` is the vertex set
    left over in which no candidate vertex exists.
    """
    succeeded: bool
    sequence: Tuple[str, ...] = ()
    residual: Optional[FrozenSet[str]] = None

    def to_dict(self):
        return {
            'succeeded': self.succeeded,
            'sequence': list(self.sequence),
            'residual': sorted(self.residual) if self.residual is not None else None,
        }


@frozen
class BruteForceResult:
    order: Optional[VertexOrder]
    tried: int

    @property
    def found(self) -> bool:
        return self.order is not None

    def to_dict(self):
        return {
            'order': list(self.order.sequence) if self.order is not None else None,
            'tried': self.tried,
        }


@frozen
class DefinitionResult:
    """
    Outcome of the definitional strong chordality check.

    ``reason`` is 'chordless' when the offending cycle is a chordless cycle
    (the graph is not even chordal) and 'even-cycle' when it is an even
    cycle of length at least 6 without an odd chord.
    """
    strongly_chordal: bool
    cycle: Optional[Tuple[str, ...]] = None
    reason: Optional[str] = None

    def to_dict(self):
        return {
            'strongly_chordal': self.strongly_chordal,
            'cycle': list(self.cycle) if self.cycle is not None else None,
            'reason': self.reason,
        }


@frozen
class CorpusEntry:
    """One row of a corpus manifest.tsv file."""
    kind: str
    params: str
    seed: int
    file: str
    compatible: Optional[bool]
    strongly_chordal: bool

    def to_row(self) -> str:
        def flag(value):
            if value is None:
                return '-'
            return 'yes' if value else 'no'

        return '\t'.join([
            self.kind, self.params, str(self.seed), self.file,
            flag(self.compatible), flag(self.strongly_chordal),
        ])
