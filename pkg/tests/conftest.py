from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import SUMMARY
    except ImportError:
        return
    if SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in SUMMARY:
            terminalreporter.write_line(line)
