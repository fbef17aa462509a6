"""Shared exception types."""


class DspkitError(Exception):
    """Base class for all library-specific errors."""


class ResourceLimitError(DspkitError):
    """A size or resource guard was exceeded."""


class PreconditionError(DspkitError, ValueError):
    """An operation was invoked outside its defined domain."""


class UndefinedMoveError(DspkitError, ValueError):
    """A multiplicity-vector move is not defined for this input."""


class SeriesParameterError(DspkitError, ValueError):
    """A series parameter lies outside the family's validity range."""


class ChainMismatchError(DspkitError):
    """A reduction trace does not follow the expected symbolic chain."""


class ObstructionError(DspkitError):
    """No generic eigenvalue assignment can exist for the requested mode."""


class GenerationFailedError(DspkitError):
    """Assignment generation exhausted its retry budget."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
