"""
Loja Error Hierarchy
====================

Exceptions shared across the packages. The CLI maps them to exit codes:

    InputValidationError  -> 2
    ResourceGuardError    -> 3
"""


class LojaError(Exception):
    """Base exception for all engine errors."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class InputValidationError(LojaError):
    """Input mapping is malformed or violates F(0) = 0."""
    pass


class ResourceGuardError(LojaError):
    """A configured resource guard (tower degree, recursion depth) was exceeded."""
    pass


class PreconditionError(LojaError, ValueError):
    """An operation was called outside its documented domain."""
    pass
