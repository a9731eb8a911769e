from .commands import recognition_commands
