import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "vgit", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("vgit")


@pytest.fixture(scope="session")
def w4():
    from vgit.pgl2 import lifted_torus_action

    return lifted_torus_action(4)


@pytest.fixture(scope="session")
def w5():
    from vgit.pgl2 import lifted_torus_action

    return lifted_torus_action(5)


@pytest.fixture(scope="session")
def p1():
    from vgit.toric import make_weight_configuration

    return make_weight_configuration([(1,), (1,)])


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance") or __import__("sys").modules.get(
        "tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
