from django.apps import AppConfig


class SchurConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "schur"
    verbose_name = "Supersymmetric Schur functions and Thom polynomials"
