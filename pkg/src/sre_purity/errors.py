"""Shared exception types, kept separate so the CLI can map them to exit codes."""


class DimensionError(ValueError):
    """Operands live on different qubit counts or incompatible dimensions."""


class SizeGuardError(ValueError):
    """A requested object exceeds the configured desk-scale size limits."""


class NormalizationError(ValueError):
    """A state or distribution violates its normalization invariant."""
