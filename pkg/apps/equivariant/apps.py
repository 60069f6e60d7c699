from django.apps import AppConfig


class EquivariantConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.equivariant'
    verbose_name = 'Equivariant homotopy'
