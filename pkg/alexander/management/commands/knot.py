from django.template.loader import render_to_string

from ...conf import get_setting
from ...exceptions import InputError
from ...knots import analyze_knot
from ...serializers import serialize_knot
from ..base import AlexanderCommand, report_context


class Command(AlexanderCommand):
    help = "Alexander polynomial and fiberedness screen of a Seifert matrix"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--decompose", action="store_true",
            help="Also decompose the presentation and reduce the Seifert amalgam",
        )

    def run(self, kind, value, options):
        if kind != "seifert":
            raise InputError(f"{options['file']}: the knot command needs a 'seifert' input")
        limits = self.limits(options)
        report = analyze_knot(
            value,
            with_decomposition=options["decompose"],
            max_minors=limits["max_minors"],
            max_steps=limits["max_steps"],
            seed=options["seed"],
            scramble_steps=get_setting("SCRAMBLE_STEPS"),
        )
        decomposition = ""
        if report.decomposition is not None:
            decomposition = render_to_string(
                "alexander/decompose.txt", report_context(report.decomposition),
            )
        self.emit(options, serialize_knot(report), "alexander/knot.txt", {
            "report": report,
            "decomposition": decomposition,
        })
