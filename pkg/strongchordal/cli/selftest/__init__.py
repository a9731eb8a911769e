from .commands import selftest_commands
