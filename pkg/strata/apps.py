from django.apps import AppConfig


class StrataConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'strata'
    verbose_name = 'Strata and bundle charts'
