from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""
