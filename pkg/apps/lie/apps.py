from django.apps import AppConfig


class LieConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.lie'
    verbose_name = 'Free graded Lie algebras'
