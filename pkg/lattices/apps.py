from django.apps import AppConfig


class LatticesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'lattices'
    verbose_name = 'Bounded z-stable lattices'
