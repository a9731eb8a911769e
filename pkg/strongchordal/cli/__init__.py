"""
The command-line front end.

The top-level ``cli`` group configures logging and then hands over to
the command collections, one per area, which are registered below the
same way the areas of a web app register their blueprints.
"""
import logging
import logging.config

import click

from ..config import Config


@click.group()
@click.option('--verbose', is_flag=True, help='Log progress at DEBUG level on stderr.')
def cli(verbose):
    """Strongly chordal graphs via compatible subtree representations."""
    logging.config.fileConfig(Config.LOGGING_CONFIG, disable_existing_loggers=False)
    if verbose:
        logging.getLogger('strongchordal').setLevel(logging.DEBUG)


def register_commands(group: click.Group, collection: click.Group):
    for name, command in collection.commands.items():
        if name in group.commands:
            raise RuntimeError(f'command {name!r} registered twice')
        group.add_command(command, name)


# Importing command collections
from .elimination import elimination_commands
from .representations import representations_commands
from .recognition import recognition_commands
from .generation import generation_commands
from .selftest import selftest_commands

# Registering command collections
register_commands(cli, elimination_commands)
register_commands(cli, representations_commands)
register_commands(cli, recognition_commands)
register_commands(cli, generation_commands)
register_commands(cli, selftest_commands)
