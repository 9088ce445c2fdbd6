from django.apps import AppConfig


class FknConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "fkn"
    verbose_name = "Friedgut-Kalai-Naor checks"
