"""
Helpers shared by every command collection: file access, the error to
exit-code mapping and certificate printing.

Exit codes: 0 positive answer, 1 negative answer (certificate on stdout,
or the result as one JSON object with --json), 2 usage error, unreadable
input or malformed file (one ``error:`` line on stderr).
"""

import functools
import json
import logging

import click

from ..errors import InputFileError, StrongChordalError
from ..host_tree import overshadows

logger = logging.getLogger(__name__)

EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def read_text(path: str) -> str:
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except OSError as e:
        raise InputFileError(f'cannot read {path}: {e.strerror or e}') from None
    except UnicodeDecodeError:
        raise InputFileError(f'cannot read {path}: not UTF-8 text') from None


def write_text(path: str, text: str):
    try:
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
    except OSError as e:
        raise InputFileError(f'cannot write {path}: {e.strerror or e}') from None
    logger.info('wrote %s', path)


def exits_on_error(f):
    """Turn package errors into a one-line diagnostic and exit code 2."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except StrongChordalError as e:
            logger.debug('command failed', exc_info=True)
            click.echo(f'error: {e}', err=True)
            raise click.exceptions.Exit(EXIT_ERROR)

    return wrapper


def negative():
    raise click.exceptions.Exit(EXIT_NEGATIVE)


def fail_usage(message: str):
    click.echo(f'error: {message}', err=True)
    raise click.exceptions.Exit(EXIT_ERROR)


############## Certificates ##############

def echo_field(name: str, value):
    if isinstance(value, (tuple, list)):
        value = ','.join(str(v) for v in value)
    click.echo(f'{name}: {value}')


def echo_order_verdict(verdict):
    echo_field('violation', verdict.violation)
    echo_field('vertices', verdict.vertices)
    if verdict.pair:
        echo_field('pair', verdict.pair)


def failing_directions(r, u: str, v: str):
    """(a, b, verdict) for each direction in which T(a) does not overshadow T(b)."""
    host = r.host
    for a, b in ((u, v), (v, u)):
        verdict = overshadows(host, r.assignment[a], r.assignment[b])
        if not verdict.holds:
            yield a, b, verdict


def echo_pair_certificate(r, u: str, v: str):
    echo_field('incompatible', (u, v))
    for a, b, verdict in failing_directions(r, u, v):
        echo_field('direction', (a, b))
        echo_field('witness', verdict.witness)
        echo_field('cutoff', verdict.cutoff)


def echo_json(payload):
    """One JSON object on stdout, keys sorted."""
    click.echo(json.dumps(payload, sort_keys=True))


def yes_no(value: bool) -> str:
    return 'yes' if value else 'no'
