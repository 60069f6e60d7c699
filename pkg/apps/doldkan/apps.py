from django.apps import AppConfig


class DoldkanConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.doldkan'
    verbose_name = 'Dold-Kan correspondence'
