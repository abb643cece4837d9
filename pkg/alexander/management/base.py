from django.core.management.base import BaseCommand, CommandError
from django.template.loader import render_to_string

from ..conf import get_setting
from ..decomp import CHECK_NAMES, LATTICE_BASIS_NOTE, decompose
from ..exceptions import InputError, ResourceLimit, StepLimit
from ..knots import seifert_to_presentation
from ..serializers import dumps, load_input

# Exit codes shared by all commands
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


class AlexanderCommand(BaseCommand):
    """Common plumbing: input file, output mode, limits and error mapping.

    Subclasses implement ``run(kind, value, options)``, where ``value`` is
    the validated LambdaPresentation or SeifertMatrix.
    """

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("file", help="JSON input with a 'presentation' or 'seifert' key")
        parser.add_argument(
            "--json", action="store_true",
            help="Print canonical JSON instead of text",
        )
        parser.add_argument(
            "--seed", type=int, default=None,
            help="Seed for the unimodular scramble self-check",
        )
        parser.add_argument(
            "--max-minors", type=int, default=None,
            help="Cap on the number of maximal minors enumerated by order",
        )
        parser.add_argument(
            "--max-steps", type=int, default=None,
            help="Cap on the number of reduction steps",
        )

    def handle(self, *args, **options):
        try:
            kind, value = load_input(options["file"])
            self.run(kind, value, options)
        except InputError as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT)
        except (ResourceLimit, StepLimit) as exc:
            raise CommandError(str(exc), returncode=EXIT_LIMIT)

    def run(self, kind, value, options):
        raise NotImplementedError

    def limits(self, options):
        # an explicit 0 is a real cap, only None falls back to settings
        return {
            key: get_setting(key.upper()) if options[key] is None else options[key]
            for key in ("max_minors", "max_steps")
        }

    def presentation(self, kind, value):
        return seifert_to_presentation(value) if kind == "seifert" else value

    def emit(self, options, data, template, context):
        if options["json"]:
            self.stdout.write(dumps(data))
        else:
            self.stdout.write(render_to_string(template, context), ending="")

    def run_decompose(self, P, options):
        limits = self.limits(options)
        return decompose(
            P, max_minors=limits["max_minors"], max_steps=limits["max_steps"],
            seed=options["seed"], scramble_steps=get_setting("SCRAMBLE_STEPS"),
        )


def report_context(report):
    return {
        "report": report,
        "check_names": CHECK_NAMES,
        "self_checks": sorted(report.self_checks.items()),
        "lattice_basis": LATTICE_BASIS_NOTE,
    }
