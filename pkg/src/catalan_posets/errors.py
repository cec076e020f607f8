"""Shared exception types."""

from __future__ import annotations


class CapacityError(Exception):
    """Raised when a requested size exceeds the documented bound of an operation.

    Validation problems with the data itself raise ValueError; this exception
    only signals that an input is too large for the implementation, not that it
    is malformed.
    """
