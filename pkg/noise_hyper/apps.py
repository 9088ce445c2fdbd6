from django.apps import AppConfig


class NoiseHyperConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "noise_hyper"
    verbose_name = "Noise operator and hypercontractivity checks"
