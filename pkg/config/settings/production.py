from .base import *  # noqa
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env("DJANGO_SECRET_KEY")

# LOGGING
# ------------------------------------------------------------------------------
LOGGING["root"]["level"] = env("FCS_LOG_LEVEL", default="ERROR")  # noqa F405
