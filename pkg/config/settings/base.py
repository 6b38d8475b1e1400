"""
Base settings to build other settings files upon.
"""
from pathlib import Path

import environ

ROOT_DIR = Path(__file__).resolve(strict=True).parent.parent.parent
env = environ.Env()

READ_DOT_ENV_FILE = env.bool("DJANGO_READ_DOT_ENV_FILE", default=False)
if READ_DOT_ENV_FILE:
    # OS environment variables take precedence over variables from .env
    env.read_env(str(ROOT_DIR / ".env"))

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = env.bool("DJANGO_DEBUG", False)
# https://docs.djangoproject.com/en/dev/ref/settings/#time-zone
TIME_ZONE = "UTC"
# https://docs.djangoproject.com/en/dev/ref/settings/#language-code
LANGUAGE_CODE = "en-us"
# https://docs.djangoproject.com/en/dev/ref/settings/#use-i18n
USE_I18N = True
# https://docs.djangoproject.com/en/dev/ref/settings/#use-tz
USE_TZ = True
# https://docs.djangoproject.com/en/dev/ref/settings/#locale-paths
LOCALE_PATHS = [str(ROOT_DIR / "locale")]

# DATABASES
# ------------------------------------------------------------------------------
# The apps define no models.
# https://docs.djangoproject.com/en/dev/ref/settings/#databases
DATABASES = {}
# https://docs.djangoproject.com/en/stable/ref/settings/#std:setting-DEFAULT_AUTO_FIELD
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# APPS
# ------------------------------------------------------------------------------
LOCAL_APPS = [
    "words",
    "scalars",
    "fock",
    "coherent",
    "padic_fn",
    "iso",
    "cli",
]

# https://docs.djangoproject.com/en/dev/ref/settings/#installed-apps
INSTALLED_APPS = LOCAL_APPS

# LOGGING
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#logging
# See https://docs.djangoproject.com/en/dev/topics/logging for
# more details on how to customize your logging configuration.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s "
            "%(process)d %(thread)d %(message)s"
        }
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        }
    },
    "root": {"level": env("FCS_LOG_LEVEL", default="WARNING"), "handlers": ["console"]},
}

# Free coherent states
# ------------------------------------------------------------------------------
# Branching factor and truncation depth used when a command gets no --p/--depth
FCS_DEFAULT_P = env.int("FCS_P", default=2)
FCS_DEFAULT_DEPTH = env.int("FCS_DEPTH", default=5)
# Seed of the verification suites
FCS_DEFAULT_SEED = env.int("FCS_SEED", default=7)
# eps values of the convergence table, lambda**2 = p * (1 - eps)
FCS_DEFAULT_EPS_GRID = env.list(
    "FCS_EPS_GRID", cast=float, default=[0.01, 0.005, 0.0025, 0.00125]
)
# Random leaves: real and imaginary parts are grid values / denominator
FCS_LEAF_GRID = env.list("FCS_LEAF_GRID", cast=int, default=[-2, -1, 0, 1, 2])
FCS_LEAF_DENOMINATOR = env.int("FCS_LEAF_DENOMINATOR", default=2)
# Random states per verification suite, and the longest X_I paired against
# each other (capped by the depth)
FCS_SUITE_STATES = env.int("FCS_SUITE_STATES", default=3)
FCS_SUITE_MAX_LENGTH = env.int("FCS_SUITE_MAX_LENGTH", default=4)
