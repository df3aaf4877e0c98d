import pytest

from wager import defaults


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="Run slow acceptance tests (10000 runs per cell)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long Monte Carlo reproduction")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return

    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def defaults_path(tmp_path, monkeypatch):

    """Keep stored defaults of the developer machine out of tests"""

    path = tmp_path / "app" / "defaults.json"
    monkeypatch.setattr(defaults, "get_defaults_path", lambda: str(path))

    for name in ("WAGER_RUNS", "WAGER_SEED", "WAGER_WORKERS"):
        monkeypatch.delenv(name, raising=False)

    return path
