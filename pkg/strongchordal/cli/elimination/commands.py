"""
Commands around elimination orders: checking them, turning them into
tree representations and reading them back off representations.
"""

import click

from ...errors import InvalidOrderError
from ...extraction import extract_strong_elimination_order, verify_cycle_certificate
from ...graph_core import parse_graph
from ...orders import (
    is_perfect_elimination_order,
    is_strong_elimination_order,
    parse_order,
    peo_to_representation,
    seo_to_representation,
)
from ...representation import parse_representation, serialize_representation
from ...utils import validate_order_flags
from ..common import (
    echo_field,
    echo_json,
    echo_order_verdict,
    exits_on_error,
    fail_usage,
    negative,
    read_text,
    write_text,
)

elimination_commands = click.Group('elimination')


############## Elimination order commands ##############

@elimination_commands.command('check-order')
@click.option('--graph', 'graph_path', required=True, help='Graph file.')
@click.option('--order', 'order_text', required=True, help='Comma-separated vertex labels.')
@click.option('--strong', is_flag=True, help='Check for a strong elimination order (default).')
@click.option('--perfect', is_flag=True, help='Check for a perfect elimination order.')
@click.option('--json', 'as_json', is_flag=True, help='Print the verdict as JSON.')
@exits_on_error
def check_order(graph_path, order_text, strong, perfect, as_json):
    """Check a vertex order; prints the violation when it fails."""
    ok, message = validate_order_flags(strong, perfect)
    if not ok:
        fail_usage(message)
    g = parse_graph(read_text(graph_path))
    order = parse_order(order_text, g)
    verdict = is_perfect_elimination_order(g, order) if perfect else is_strong_elimination_order(g, order)
    if as_json:
        echo_json(verdict.to_dict())
    elif verdict.valid:
        click.echo('valid')
    else:
        click.echo('invalid')
        echo_order_verdict(verdict)
    if not verdict.valid:
        negative()


@elimination_commands.command('build-rep')
@click.option('--graph', 'graph_path', required=True, help='Graph file.')
@click.option('--order', 'order_text', required=True, help='Comma-separated vertex labels.')
@click.option('--unit-weights', is_flag=True, help='Treat the order as perfect and use unit arc weights.')
@click.option('--out', 'out_path', required=True, help='Representation file to write.')
@exits_on_error
def build_rep(graph_path, order_text, unit_weights, out_path):
    """Build a tree representation from an elimination order."""
    g = parse_graph(read_text(graph_path))
    order = parse_order(order_text, g)
    try:
        if unit_weights:
            r = peo_to_representation(g, order)
        else:
            r = seo_to_representation(g, order)
    except InvalidOrderError as e:
        click.echo('invalid')
        echo_order_verdict(e.verdict)
        negative()
    write_text(out_path, serialize_representation(r))


@elimination_commands.command('extract-order')
@click.option('--rep', 'rep_path', required=True, help='Representation file.')
@click.option('--json', 'as_json', is_flag=True, help='Print the result as JSON.')
@exits_on_error
def extract_order(rep_path, as_json):
    """Print a strong elimination order read off a compatible representation."""
    r = parse_representation(read_text(rep_path))
    result = extract_strong_elimination_order(r)
    pair = None if result.succeeded else verify_cycle_certificate(r, result.cycle)
    if as_json:
        payload = result.to_dict()
        payload['incompatible'] = list(pair) if pair else None
        echo_json(payload)
    elif result.succeeded:
        click.echo(result.order.as_text())
    else:
        echo_field('cycle', result.cycle)
        echo_field('incompatible', pair)
    if not result.succeeded:
        negative()
