import dataclasses
import json
from fractions import Fraction

import numpy as np

from ..half_integer import HalfInteger


def _default(obj):
    if isinstance(obj, HalfInteger):
        return obj.doubled
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return dataclasses.asdict(obj)
    raise TypeError("cannot encode {!r} as JSON".format(obj))


def to_json(report, indent=2):
    """ Deterministic JSON text for a report dict (key order is insertion order) """
    return json.dumps(report, default=_default, indent=indent)


def witness_list(witness):
    """ Flatten a witness tuple to plain ints, or None """
    if witness is None:
        return None
    return [int(x) for x in witness]


def truncated(items, limit):
    """ First `limit` items plus the number dropped """
    items = list(items)
    if limit is None or len(items) <= limit:
        return items, 0
    return items[:limit], len(items) - limit
