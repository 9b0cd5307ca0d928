"""Exception types shared across the package."""

from __future__ import annotations


class UsageError(ValueError):
    """Bad arguments from a caller: out-of-range index, mismatched ranks, shapes outside a box."""


class InexactDivisionError(ArithmeticError):
    """An exact division left a remainder. Upstream this means a broken identity."""


class RepresentationMismatch(AssertionError):
    """Normal-form equality and operator-action equality disagree on a nilHecke element."""
