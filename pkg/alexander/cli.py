"""Entry point returning the exit status instead of exiting."""

import os
import sys


def cli_main(argv=None) -> int:
    """Run one alexander subcommand (order, decompose, verify, knot)."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "alexander_lab.settings")
    from django.core.management import execute_from_command_line

    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        execute_from_command_line(["alexander", *argv])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
