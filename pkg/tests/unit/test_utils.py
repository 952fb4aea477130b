import json
import math

import numpy as np
import pytest

from src.core.utils import dumps_json, format_float


@pytest.mark.parametrize("value, text", [
    (0.1, "0.10000000000000001"),
    (1 / 3, "0.33333333333333331"),
    (10.0, "10.0"),
    (-1e-17, "-1.0000000000000001e-17"),
    (float("nan"), "NaN"),
    (float("-inf"), "-Infinity"),
])
def test_format_float(value, text):
    assert format_float(value) == text


def test_dumps_json_round_trips_doubles():
    values = [0.1, 1 / 3, math.pi, 1e-17, 123456789.123]
    text = dumps_json({"values": values})
    assert json.loads(text)["values"] == values
    mantissa = text.split("\n")[2].strip().rstrip(",").lstrip("-").split("e")[0].replace(".", "").lstrip("0")
    assert len(mantissa) == 17


def test_dumps_json_sorts_nested_keys_and_unwraps_numpy():
    text = dumps_json({"b": {"y": np.float64(0.5), "x": np.int64(2)}, "a": [True, None, "s"]}, sort_keys=True)
    assert text.index('"a"') < text.index('"b"')
    assert text.index('"x"') < text.index('"y"')
    assert json.loads(text) == {"a": [True, None, "s"], "b": {"x": 2, "y": 0.5}}
    assert dumps_json({}) == "{}" and dumps_json([]) == "[]"


def test_dumps_json_rejects_unknown_types():
    with pytest.raises(TypeError):
        dumps_json({"z": 1j})
