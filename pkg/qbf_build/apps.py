from django.apps import AppConfig


class QbfBuildConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "qbf_build"
    verbose_name = "Quantum boolean function constructors"
