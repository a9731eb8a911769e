"""
Commands that inspect or transform tree representation files.
"""

import click

from ...graph_core import parse_graph, same_graph
from ...models import SubdivisionPolicy
from ...representation import (
    intersection_graph,
    is_compatible_representation,
    is_rdv,
    parse_representation,
    serialize_representation,
    subdivide_unit_weights,
)
from ..common import (
    echo_field,
    echo_json,
    echo_pair_certificate,
    exits_on_error,
    failing_directions,
    negative,
    read_text,
    write_text,
    yes_no,
)

representations_commands = click.Group('representations')


@representations_commands.command('verify-rep')
@click.option('--rep', 'rep_path', required=True, help='Representation file.')
@click.option('--graph', 'graph_path', default=None, help='Graph the representation should represent.')
@click.option('--json', 'as_json', is_flag=True, help='Print the report as JSON.')
@exits_on_error
def verify_rep(rep_path, graph_path, as_json):
    """
    Validate a representation: subtree invariants (checked while parsing),
    compatibility, and optionally equality of its intersection graph with
    a given graph.
    """
    r = parse_representation(read_text(rep_path))
    matches = None
    if graph_path is not None:
        matches = same_graph(intersection_graph(r), parse_graph(read_text(graph_path)))
    rdv = is_rdv(r)
    verdict = is_compatible_representation(r)

    if as_json:
        directions = []
        if not verdict.compatible:
            for a, b, failed in failing_directions(r, *verdict.pair):
                directions.append(dict(failed.to_dict(), direction=[a, b]))
        echo_json({
            'intersection_graph_matches': matches,
            'rdv': rdv,
            'compatibility': verdict.to_dict(),
            'directions': directions,
        })
    else:
        if matches is not None:
            echo_field('intersection-graph', 'matches' if matches else 'differs')
        echo_field('rdv', yes_no(rdv))
        echo_field('compatible', yes_no(verdict.compatible))
        if not verdict.compatible:
            echo_pair_certificate(r, *verdict.pair)
    if matches is False or not verdict.compatible:
        negative()


@representations_commands.command('subdivide')
@click.option('--rep', 'rep_path', required=True, help='Representation file.')
@click.option(
    '--policy',
    type=click.Choice([p.value for p in SubdivisionPolicy]),
    required=True,
    help='Which subtrees receive the fresh nodes.',
)
@click.option('--out', 'out_path', required=True, help='Representation file to write.')
@click.option('--json', 'as_json', is_flag=True, help='Print the report as JSON.')
@exits_on_error
def subdivide(rep_path, policy, out_path, as_json):
    """Replace weighted arcs by unit paths and report what that does to compatibility."""
    r = parse_representation(read_text(rep_path))
    report = subdivide_unit_weights(r, SubdivisionPolicy(policy))
    write_text(out_path, serialize_representation(report.representation))
    if as_json:
        echo_json(report.to_dict())
    else:
        echo_field('intersection-graph', 'preserved' if report.intersection_preserved else 'changed')
        echo_field('compatible', yes_no(report.compatibility.compatible))
        for u, v in report.incompatible_pairs:
            echo_field('incompatible', (u, v))
    if not report.compatibility.compatible:
        negative()
