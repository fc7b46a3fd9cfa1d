"""Caps and shared exceptions.

``CHEVCOUNT_CAP`` in the environment overrides the element and series caps
(the partition and class-type caps are left alone).
"""

import os


class CapExceeded(ValueError):
    """A request would exceed a configured size cap."""


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder (always a bug)."""


DEFAULT_CAPS = {
    "partitions": 60,
    "series_int": 200,
    "series_poly": 64,
    "elements": 10**6,
    "burnside": 5000,
    "classtypes": 10**6,
}

_OVERRIDABLE = ("elements", "series_int", "series_poly")


def cap(name):
    override = os.environ.get("CHEVCOUNT_CAP")
    if override and name in _OVERRIDABLE:
        return int(override)
    return DEFAULT_CAPS[name]


def exact_div(a, b):
    q, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{a} is not divisible by {b}")
    return q
