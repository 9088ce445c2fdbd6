from django.apps import AppConfig


class PropertyTestingConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "property_testing"
    verbose_name = "Stabilizer, locality and Håstad tests"
