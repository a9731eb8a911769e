from .commands import elimination_commands
