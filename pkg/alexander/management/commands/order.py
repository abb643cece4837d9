from ...laurent import content
from ...present import order
from ...serializers import serialize_order
from ..base import AlexanderCommand


class Command(AlexanderCommand):
    help = "Print the order (Alexander polynomial) of a presented module"

    def run(self, kind, value, options):
        P = self.presentation(kind, value)
        delta = order(P, max_minors=self.limits(options)["max_minors"])
        self.emit(options, serialize_order(delta), "alexander/order.txt", {
            "delta": delta,
            "degree": None if delta.is_zero else delta.deg,
            "coefficients": delta.coefficients(),
            "content": content(delta),
        })
