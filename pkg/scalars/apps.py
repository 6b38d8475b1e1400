from django.apps import AppConfig


class ScalarsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "scalars"
