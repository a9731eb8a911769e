"""
Shared fixtures for the test suite.
"""

import pytest
from click.testing import CliRunner

from strongchordal import fixtures
from strongchordal.generators import generate_sun
from strongchordal.graph_core import make_graph
from strongchordal.orders import seo_to_representation


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run slow tests')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long-running corpus or timing test, needs --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='need --runslow option to run')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fans():
    return fixtures.fans_graph()


@pytest.fixture
def fans_order():
    return fixtures.fans_order()


@pytest.fixture
def fans_rep(fans, fans_order):
    """
    The weighted representation built from the order a, b, c, w, x, y, z.

    Node v_j sits at depth 7 - j, so depths run a=6 down to z=0, and
    T(x) = {x, w, c, b, a}.
    """
    return seo_to_representation(fans, fans_order)


@pytest.fixture
def shared_rep():
    return fixtures.shared_root_representation()


@pytest.fixture
def sun3():
    return generate_sun(3)


@pytest.fixture
def c4():
    return make_graph('abcd', [('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a')])


@pytest.fixture
def runner():
    """
    A pytest fixture that provides a click test runner for the command line.

    The runner invokes commands in-process and captures stdout and stderr
    separately, so tests can check the certificate lines and the one-line
    diagnostics independently of each other.

    Yields:
        CliRunner: a runner whose ``invoke(cli, [...])`` returns a Result with
        ``exit_code``, ``stdout`` and ``stderr``.

    Usage:
        Use the `runner` fixture together with `tmp_path` to write input files.
        Example:
            def test_example(runner, tmp_path):
                result = runner.invoke(cli, ['selftest'])
                assert result.exit_code == 0
    """
    try:
        cli_runner = CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 dropped mix_stderr; stderr is always kept separate.
        cli_runner = CliRunner()
    yield cli_runner


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""

    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
