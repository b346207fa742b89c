"""Shared exception types."""


class CapExceeded(ValueError):
    """Raised when a computation would exceed a documented feasibility cap."""
