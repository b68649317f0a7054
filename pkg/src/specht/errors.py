class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class LLTInvariantError(RuntimeError):
    """A computed canonical-basis vector failed unitriangularity or positivity.

    This signals a convention error in the Fock-space action, never bad input.
    """


class CacheCorruptionError(RuntimeError):
    """A cached block file is malformed or fails the canonical-basis invariants."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key
