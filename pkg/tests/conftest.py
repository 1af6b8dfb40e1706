import pytest
from hypothesis import settings

from circ4 import kernels

settings.register_profile("ci", derandomize=True, max_examples=100)
settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption(
        "--run-long",
        action="store_true",
        default=False,
        help="run the gated 2^32 / 2^34 full-enumeration criteria",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "long: multi-minute full enumerations, off by default")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="needs --run-long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile (or load the cached) kernels so timed tests measure the scan
    kernels.warmup()
