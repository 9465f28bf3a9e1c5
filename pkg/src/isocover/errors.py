class IsocoverError(Exception):
    pass


class InputError(IsocoverError, ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class DomainError(IsocoverError, ValueError):
    """Input is well formed but outside the operation's domain, e.g. a disconnected graph."""


class SizeLimitError(IsocoverError):
    """Graph exceeds the exact-oracle size bound."""


class CertificationError(IsocoverError):
    """A certificate could not be produced because the claimed structure is false.

    ``witness`` holds the offending vertices or edge.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
