from hypothesis import HealthCheck, settings

# Every property run is seeded: the same examples on every machine.
settings.register_profile(
    "alexander",
    derandomize=True,
    deadline=None,
    database=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("alexander")
