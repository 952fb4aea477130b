import json

import numpy as np

import pytest

from src.infrastructure.logging.config import get_processors
from src.infrastructure.logging.processors import add_app_context, plain_numbers


def test_plain_numbers_makes_events_json_safe():
    event = plain_numbers(None, "info", {
        "event": "Flow finished",
        "z": 0.5 + 0.25j,
        "steps": np.int64(6283),
        "residual": np.float64(2e-15),
        "radii": np.array([0.0, 0.5]),
        "values": np.array([1 + 1j, 2 - 1j]),
    })
    assert event["z"] == [0.5, 0.25]
    assert event["steps"] == 6283 and type(event["steps"]) is int
    assert event["radii"] == [0.0, 0.5]
    assert event["values"] == [[1.0, 1.0], [2.0, -1.0]]
    json.dumps(event)


def test_app_context_is_stamped():
    event = add_app_context(None, "info", {"event": "x"})
    assert event["app_name"] == "darboux-phase-space"


@pytest.mark.parametrize("log_format", ["console", "json"])
def test_context_processors_run_for_every_format(log_format):
    processors = get_processors(log_format)
    assert add_app_context in processors
    assert plain_numbers in processors
    assert processors.index(plain_numbers) < len(processors) - 1
