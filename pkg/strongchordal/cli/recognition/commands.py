"""
Strong chordality recognition from the command line.
"""

import click

from ...graph_core import parse_graph
from ...models import RecognitionMethod
from ...recognition import brute_force_seo, definitional_strongly_chordal, greedy_simple_elimination
from ..common import echo_field, echo_json, exits_on_error, negative, read_text

recognition_commands = click.Group('recognition')


def echo_certificate(method, result, positive):
    if method is RecognitionMethod.GREEDY:
        if not positive:
            echo_field('residual', sorted(result.residual))
    elif method is RecognitionMethod.BRUTEFORCE:
        if positive:
            echo_field('order', result.order.sequence)
        echo_field('tried', result.tried)
    elif not positive:
        echo_field('cycle', result.cycle)
        echo_field('reason', result.reason)


@recognition_commands.command('recognize')
@click.option('--graph', 'graph_path', required=True, help='Graph file.')
@click.option(
    '--method',
    type=click.Choice([m.value for m in RecognitionMethod]),
    default=RecognitionMethod.GREEDY.value,
    show_default=True,
)
@click.option('--json', 'as_json', is_flag=True, help='Print the result as JSON.')
@exits_on_error
def recognize(graph_path, method, as_json):
    """
    Decide strong chordality. Exits 0 if strongly chordal, 1 if not, 2 when
    an exhaustive method refuses a graph above its size limit.
    """
    g = parse_graph(read_text(graph_path))
    method = RecognitionMethod(method)

    if method is RecognitionMethod.GREEDY:
        result = greedy_simple_elimination(g)
        positive = result.succeeded
    elif method is RecognitionMethod.BRUTEFORCE:
        result = brute_force_seo(g)
        positive = result.found
    else:
        result = definitional_strongly_chordal(g)
        positive = result.strongly_chordal

    if as_json:
        echo_json({'method': method.value, 'strongly_chordal': positive, 'result': result.to_dict()})
    else:
        echo_certificate(method, result, positive)
        click.echo('strongly-chordal' if positive else 'not-strongly-chordal')
    if not positive:
        negative()
