from .commands import generation_commands
