"""Exact computations for the thick calculus of the nilHecke algebra and for U(sl2)."""

from .arith import LaurentQ, MultiPoly
from .errors import InexactDivisionError, RepresentationMismatch, UsageError
from .partitions import Partition, enumerate_P

__all__ = [
    "LaurentQ",
    "MultiPoly",
    "Partition",
    "enumerate_P",
    "UsageError",
    "InexactDivisionError",
    "RepresentationMismatch",
]
