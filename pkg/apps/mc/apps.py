from django.apps import AppConfig


class McConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.mc'
    verbose_name = 'Maurer-Cartan and gauge'
