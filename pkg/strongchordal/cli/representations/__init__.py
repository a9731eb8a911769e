from .commands import representations_commands
