from django.apps import AppConfig


class AlexanderConfig(AppConfig):
    name = "alexander"
    verbose_name = "Laurent module orders and amalgam decompositions"
