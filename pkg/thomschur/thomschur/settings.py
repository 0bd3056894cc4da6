from pathlib import Path

import environ

env = environ.Env(
    THOMSCHUR_DEBUG=(bool, False),
    THOMSCHUR_ALPHABET_SIZE=(int, 8),
    THOMSCHUR_MAX_R=(int, 8),
    THOMSCHUR_SCHUR_CACHE_SIZE=(int, 4096),
)
environ.Env.read_env()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed or served; the key only satisfies Django's startup checks.
SECRET_KEY = env("SECRET_KEY", default="django-insecure-thomschur-batch-calculator")

DEBUG = env("THOMSCHUR_DEBUG")

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    "django.contrib.auth",
    "django.contrib.contenttypes",

    "rest_framework",
    "schur.apps.SchurConfig",
]

# No persistence: every result is recomputed from the closed forms or the solver.
DATABASES = {}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ]
}

# Calculator settings

# Indexed variables per family (a1.., b1.., y1..) in the global polynomial ring.
THOMSCHUR_ALPHABET_SIZE = env("THOMSCHUR_ALPHABET_SIZE")

# Default ceiling for r accepted by the command line.
THOMSCHUR_MAX_R = env("THOMSCHUR_MAX_R")

THOMSCHUR_SCHUR_CACHE_SIZE = env("THOMSCHUR_SCHUR_CACHE_SIZE")

THOMSCHUR_GOLDEN_DIR = BASE_DIR / "schur" / "golden"
