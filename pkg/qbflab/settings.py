"""
Django settings for the qbflab project.

The project has no database-backed state and serves nothing over the network;
Django provides configuration, logging, app discovery, the management command
entry point and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os

from decouple import config
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
env_path = Path(__file__).resolve().parent.parent / ".env"
load_dotenv(dotenv_path=env_path)


SECRET_KEY = config("SECRET_KEY", default="qbflab-insecure-local-only")

DEBUG = False

ALLOWED_HOSTS = []

ENVIRONMENT = os.getenv("ENVIRONMENT", "dev")


# Application definition

INSTALLED_APPS = [
    "rest_framework",
    "qbflab",
    "pauli_core",
    "qbf_build",
    "property_testing",
    "learning",
    "noise_hyper",
    "influence_kkl",
    "fkn",
    "dynamics",
    "cli",
]

REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
    ],
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [],
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": False,
}

# The test runner still expects a default connection; nothing is stored.
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": ":memory:",
    }
}

TIME_ZONE = "UTC"

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Numerical tolerances

QBF_TOLERANCE = config("QBF_TOLERANCE", default=1e-9, cast=float)
QBF_SPARSITY_THRESHOLD = config("QBF_SPARSITY_THRESHOLD", default=1e-12, cast=float)
QBF_ZERO_EIGENVALUE_BAND = config("QBF_ZERO_EIGENVALUE_BAND", default=1e-12, cast=float)
QBF_RANK_TOLERANCE = config("QBF_RANK_TOLERANCE", default=1e-8, cast=float)

# Problem-size ceilings (dense storage only, 2^10 x 2^10 at most)
QBF_DENSE_MAX_QUBITS = config("QBF_DENSE_MAX_QUBITS", default=10, cast=int)
QBF_LOCALITY_MAX_QUBITS = config("QBF_LOCALITY_MAX_QUBITS", default=6, cast=int)
QBF_DYNAMICS_LEARN_MAX_QUBITS = config(
    "QBF_DYNAMICS_LEARN_MAX_QUBITS", default=8, cast=int
)

# Sampling and search
QBF_HAAR_SAMPLES = config("QBF_HAAR_SAMPLES", default=10000, cast=int)
QBF_MAX_WORKERS = config("QBF_MAX_WORKERS", default=4, cast=int)
QBF_SAMPLING_CHUNKS = config("QBF_SAMPLING_CHUNKS", default=16, cast=int)
QBF_SEARCH_MAX_ITERATIONS = config("QBF_SEARCH_MAX_ITERATIONS", default=2000, cast=int)

# Logarithm base used on the right-hand side of the Talagrand-type bound
QBF_TALAGRAND_LOG_BASE = config("QBF_TALAGRAND_LOG_BASE", default=2.0, cast=float)


# Logging
# Reports go to stdout, so every handler writes to stderr.

QBF_LOG_LEVEL = os.getenv("QBF_LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": True,
    "formatters": {
        "json": {
            "()": "qbflab.log_formatter.StandardJSONLogFormatter",
        },
    },
    "handlers": {
        "console": {
            "level": QBF_LOG_LEVEL,
            "class": "logging.StreamHandler",
            "formatter": "json",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "ERROR",
            "propagate": True,
        },
        "qbflab": {
            "handlers": ["console"],
            "level": QBF_LOG_LEVEL,
            "propagate": False,
        },
        "": {
            "handlers": ["console"],
            "level": QBF_LOG_LEVEL,
            "propagate": False,
        },
    },
}
