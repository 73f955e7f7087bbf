"""Shared test configuration.

Keeps hypothesis deterministic-ish and patient: the exact engine does real
work per example, so the default deadline is too strict for the larger hosts.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "meshperm",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    print_blob=True,
)
settings.load_profile("meshperm")
