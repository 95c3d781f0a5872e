"""Shared exception types."""


class NotFiniteType(ValueError):
    """A Cartan matrix that is not of finite type (or not a Cartan matrix)."""


class UnsupportedRootSystem(ValueError):
    """An operation that needs two root lengths was given a simply-laced
    system, or a formula was asked for outside its domain of validity."""


class SizeLimitExceeded(RuntimeError):
    """An exhaustive computation refused to run past its configured bound.

    This is a refusal, never a silent truncation."""
