from ...serializers import serialize_report
from ..base import AlexanderCommand, report_context


class Command(AlexanderCommand):
    help = "Build the amalgam decomposition (B, U, f, g) and its lattice pair"

    def run(self, kind, value, options):
        report = self.run_decompose(self.presentation(kind, value), options)
        self.emit(
            options, serialize_report(report),
            "alexander/decompose.txt", report_context(report),
        )
        return report
