import logging

import pytest
from hypothesis import settings

from lukas_qt.utils import LOGGER_NAME

# enumeration-backed properties are slow on the first (uncached) example
settings.register_profile("lukas_qt", deadline=None, max_examples=60)
settings.load_profile("lukas_qt")


@pytest.fixture(autouse=True)
def _reset_package_logger():
    yield
    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
