from django.apps import AppConfig


class LinearConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.linear'
    verbose_name = 'Exact linear algebra'
