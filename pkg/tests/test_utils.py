import json

import numpy as np
import pytest

from alphametric.globals import Globals
from alphametric.half_integer import HalfInteger
from alphametric.utils import (better, merge_extremal, parallel_imap, parallel_map,
                               reduce_partitioned, stripes, to_json, truncated, witness_list)


def test_better_prefers_value_then_smaller_witness():
    assert better((3, (1, 2)), None)
    assert better((4, (9, 9)), (3, (0, 0)))
    assert not better((3, (1, 2)), (3, (1, 1)))
    assert better((3, (1, 0)), (3, (1, 1)))
    assert not better((3, None), (3, (0,)))


def test_merge_ignores_empty_partitions():
    assert merge_extremal([None, (2, (5,)), (2, (3,)), None, (1, (0,))]) == (2, (3,))
    assert merge_extremal([None, None]) is None


@pytest.mark.parametrize("threads", [1, 2, 3, 8])
def test_partitioned_reduction_is_independent_of_workers(threads):
    values = [5, 1, 7, 3, 7, 2]

    def kernel(items):
        return merge_extremal((values[i], (i,)) for i in items)
    assert reduce_partitioned(kernel, range(len(values)), threads) == (7, (2,))


def test_maps_keep_input_order():
    assert parallel_map(lambda x: x * x, range(10), threads=4) == [x * x for x in range(10)]
    assert list(parallel_imap(lambda x: -x, range(7), threads=3)) == [-x for x in range(7)]
    assert parallel_map(str, [], threads=4) == []


def test_round_robin_stripes():
    assert stripes(range(7), 3) == [[0, 3, 6], [1, 4], [2, 5]]
    assert stripes([], 4) == [[]]


def test_json_encoding():
    report = {"delta": HalfInteger(doubled=3), "n": np.int64(4), "ok": np.bool_(True),
              "row": np.arange(3), "set": frozenset({2, 1})}
    assert json.loads(to_json(report)) == {"delta": 3, "n": 4, "ok": True, "row": [0, 1, 2], "set": [1, 2]}
    assert to_json({"a": 1}, indent=None) == '{"a": 1}'
    with pytest.raises(TypeError):
        to_json({"x": object()})


def test_small_helpers():
    assert witness_list(None) is None
    assert witness_list((np.int32(1), 2)) == [1, 2]
    assert truncated(range(5), 3) == ([0, 1, 2], 2)
    assert truncated(range(2), 3) == ([0, 1], 0)


def test_environment_overrides(monkeypatch):
    monkeypatch.setattr(Globals, "_instance", Globals.Instance())
    monkeypatch.setenv("ALPHAMETRIC_HULL_CAP", "7")
    monkeypatch.setenv("ALPHAMETRIC_THREADS", "zero")
    monkeypatch.setenv("ALPHAMETRIC_LOG_LEVEL", "debug")
    Globals.reset()
    fresh = Globals.Instance()
    assert fresh.hull_cap == 7
    assert fresh.threads >= 1
    assert fresh.log_level == "DEBUG"
    assert isinstance(fresh, Globals)
    with pytest.raises(TypeError):
        Globals()
