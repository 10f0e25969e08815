import logging
import math

import pytest

from graphent.graph import dump_spec, preset


@pytest.fixture(autouse=True)
def reset_logger():
    yield
    logger = logging.getLogger('graphent')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def max_spec():
    """CZ H H |00>, the maximally entangled two-qubit graph state."""
    return preset("two-qubit", 2, theta=math.pi / 2, phi=math.pi)


@pytest.fixture
def write_spec(tmp_path):

    def write(spec, name="spec.json"):
        path = tmp_path / name
        path.write_text(dump_spec(spec, indent=2), encoding="utf-8")
        return str(path)

    return write
