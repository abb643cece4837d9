from django.conf import settings

from .decomp import DEFAULT_MAX_STEPS
from .present import DEFAULT_MAX_MINORS

DEFAULTS = {
    "MAX_MINORS": DEFAULT_MAX_MINORS,
    "MAX_STEPS": DEFAULT_MAX_STEPS,
    "SCRAMBLE_STEPS": 8,
    "FIXTURE_DIR": None,
}


def get_setting(name):
    """Read one entry of settings.ALEXANDER, falling back to the defaults."""
    if name not in DEFAULTS:
        raise KeyError(f"unknown alexander setting {name!r}")
    return getattr(settings, "ALEXANDER", {}).get(name, DEFAULTS[name])
