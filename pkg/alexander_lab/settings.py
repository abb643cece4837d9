"""
Django settings for the alexander_lab project.

The project carries no database, no URLs and no web server: it exists to
configure the ``alexander`` app (limits, logging, templates) and to give
its management commands and test runner a home.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get(
    "DJANGO_SECRET_KEY", "django-insecure-alexander-lab-local-only"
)

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'alexander',
]

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [],
        },
    },
]


# No persistence: every computation is a pure function of its input file.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Algebra limits
# Each value can be overridden from the environment.

ALEXANDER = {
    'MAX_MINORS': int(os.environ.get('ALEXANDER_MAX_MINORS', 10 ** 6)),
    'MAX_STEPS': int(os.environ.get('ALEXANDER_MAX_STEPS', 1000)),
    'SCRAMBLE_STEPS': int(os.environ.get('ALEXANDER_SCRAMBLE_STEPS', 8)),
    'FIXTURE_DIR': BASE_DIR / 'fixtures',
}


# Logging
# Diagnostics go to standard error so that command output stays parseable.

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "{levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        "alexander": {
            "handlers": ["console"],
            "level": os.environ.get("ALEXANDER_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}
