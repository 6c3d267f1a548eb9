"""Shared exception types."""


class ResourceLimitExceeded(Exception):
    """A Groebner run blew past its configured pair or degree cap."""
