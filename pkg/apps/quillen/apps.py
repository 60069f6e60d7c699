from django.apps import AppConfig


class QuillenConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.quillen'
    verbose_name = 'Quillen models'
