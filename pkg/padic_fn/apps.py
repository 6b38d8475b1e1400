from django.apps import AppConfig


class PadicFnConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "padic_fn"
