from django.apps import AppConfig


class InfluenceKklConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "influence_kkl"
    verbose_name = "Influence, Poincaré, Talagrand and KKL checks"
