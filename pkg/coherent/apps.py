from django.apps import AppConfig


class CoherentConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "coherent"
