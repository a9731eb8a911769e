import click

from ...fixtures import run_selftest
from ..common import exits_on_error, negative

selftest_commands = click.Group('selftest')


@selftest_commands.command('selftest')
@exits_on_error
def selftest():
    """Run the worked instances with known answers."""
    failed = 0
    for name, ok, message in run_selftest():
        click.echo(f"{'ok' if ok else 'FAIL'} {name}: {message}")
        failed += not ok
    if failed:
        negative()
