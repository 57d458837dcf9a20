"""Exception types shared across the package."""

from __future__ import annotations


class ResourceCapError(RuntimeError):
    """A requested object would exceed a configured size or work cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class DisconnectedError(ValueError):
    """Raised by metric computations that need strong connectivity."""

    def __init__(self, source: int, target: int, labels=None):
        if labels is not None:
            msg = f"no directed path from {labels[source]!r} to {labels[target]!r}"
        else:
            msg = f"no directed path from vertex {source} to vertex {target}"
        super().__init__(msg)
        self.source = source
        self.target = target


class LibraryDefect(AssertionError):
    """An internal cross-check failed; this is a bug, not a user error."""
