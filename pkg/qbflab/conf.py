from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


def get_setting(name, default):
    """Read a project setting, falling back to ``default`` outside a configured project."""
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default


def resolve_tolerance(tol=None):
    if tol is not None:
        return float(tol)
    return float(get_setting("QBF_TOLERANCE", 1e-9))
