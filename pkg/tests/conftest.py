from hypothesis import settings

# Exact arithmetic is slow per example; a modest budget keeps the suite quick.
settings.register_profile("octoclif", max_examples=25, deadline=None)
settings.load_profile("octoclif")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
