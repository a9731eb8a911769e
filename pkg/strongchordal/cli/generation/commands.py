"""
Seeded instance generation.
"""

import click

from ...config import Config
from ...errors import InputFileError
from ...generators import (
    generate_corpus,
    generate_random_chordal_representation,
    generate_random_graph,
    generate_rdv_representation,
    generate_sun,
)
from ...graph_core import serialize_graph
from ...models import GeneratorKind
from ...representation import serialize_representation
from ...utils import validate_generate_options
from ..common import exits_on_error, fail_usage, write_text

generation_commands = click.Group('generation')


@generation_commands.command('generate')
@click.option('--kind', type=click.Choice([k.value for k in GeneratorKind]), required=True)
@click.option('--seed', type=int, default=Config.DEFAULT_SEED, show_default=True)
@click.option('--nodes', type=int, default=None, help='Host tree nodes (rdv, chordal).')
@click.option('--verts', type=int, default=None, help='Graph vertices.')
@click.option('--max-weight', type=int, default=None, help='Largest arc weight (rdv, default 1).')
@click.option('--k', 'k', type=int, default=None, help='Sun size (sun).')
@click.option('--density', type=int, default=500, show_default=True, help='Edge probability in permille (random).')
@click.option('--out', 'out_path', required=True, help='File to write.')
@exits_on_error
def generate(kind, seed, nodes, verts, max_weight, k, density, out_path):
    """
    Write one generated instance: a representation file for rdv and
    chordal, a graph file for sun and random.
    """
    kind = GeneratorKind(kind)
    ok, message = validate_generate_options(kind, nodes, verts, max_weight, k)
    if not ok:
        fail_usage(message)

    if kind is GeneratorKind.RDV:
        r = generate_rdv_representation(nodes, verts, 1 if max_weight is None else max_weight, seed)
        text = serialize_representation(r)
    elif kind is GeneratorKind.CHORDAL:
        text = serialize_representation(generate_random_chordal_representation(nodes, verts, seed))
    elif kind is GeneratorKind.SUN:
        text = serialize_graph(generate_sun(k))
    else:
        text = serialize_graph(generate_random_graph(verts, seed, density))
    write_text(out_path, text)


@generation_commands.command('generate-corpus')
@click.option('--out', 'out_dir', required=True, help='Directory to fill.')
@click.option('--count', type=int, default=10, show_default=True, help='Instances per kind.')
@click.option('--seed', type=int, default=Config.DEFAULT_SEED, show_default=True)
@exits_on_error
def generate_corpus_command(out_dir, count, seed):
    """Write a seeded corpus and its manifest.tsv."""
    if count < 0:
        fail_usage('--count must be non-negative.')
    try:
        entries = generate_corpus(out_dir, count, seed)
    except OSError as e:
        raise InputFileError(f'cannot write corpus to {out_dir}: {e.strerror or e}') from None
    click.echo(f'entries: {len(entries)}')
