"""Exact class numbers of finite classical groups, with an enumeration oracle and bound checks."""

from ._config import CapExceeded, InexactDivision
from .classcount import GroupSpec, class_number

__version__ = "0.1.0"

__all__ = ["CapExceeded", "GroupSpec", "InexactDivision", "class_number", "__version__"]
