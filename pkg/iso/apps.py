from django.apps import AppConfig


class IsoConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "iso"
