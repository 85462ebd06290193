import logging

import pytest

from alphametric.globals import globals as g


@pytest.fixture
def tunables():
    """ The shared Globals, restored after the test """
    saved = (g.max_vertices, g.triangle_cap, g.hull_cap, g.threads, g.report_truncate)
    yield g
    g.max_vertices, g.triangle_cap, g.hull_cap, g.threads, g.report_truncate = saved


@pytest.fixture(autouse=True)
def package_logger():
    """ The CLI reconfigures the package logger; undo it so caplog keeps working """
    logger = logging.getLogger("alphametric")
    saved = (logger.handlers[:], logger.level, logger.propagate)
    yield logger
    logger.handlers[:], logger.level, logger.propagate = saved
