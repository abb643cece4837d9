from django.core.management.base import CommandError

from .decompose import Command as DecomposeCommand
from ..base import EXIT_CHECK_FAILED


class Command(DecomposeCommand):
    help = "Decompose and exit with status 1 if any coefficient-index check fails"

    def run(self, kind, value, options):
        report = super().run(kind, value, options)
        if not report.passed:
            failed = [
                name for name, v in {**report.checks, **report.self_checks}.items()
                if v is False
            ]
            raise CommandError(
                f"verification failed: {', '.join(sorted(failed))}",
                returncode=EXIT_CHECK_FAILED,
            )
