from django.apps import AppConfig


class SympolyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'sympoly'
    verbose_name = 'Elementary symmetric polynomials'
