from __future__ import annotations

from .linalg import DimensionError


class VecAutoError(Exception):
    """Base class for errors raised by this package."""


class MachineError(VecAutoError, ValueError):
    """A machine description is malformed."""


class InputError(VecAutoError, ValueError):
    """An input word uses a symbol outside the machine's alphabet."""


class NotApplicableError(VecAutoError):
    """A transform's precondition does not hold for the given machine."""


class ResourceLimitError(VecAutoError):
    """A simulation exceeded a configured resource bound."""

    def __init__(self, message: str, step: int | None = None, word=None):
        super().__init__(message)
        self.step = step
        self.word = word


__all__ = [
    "DimensionError",
    "VecAutoError",
    "MachineError",
    "InputError",
    "NotApplicableError",
    "ResourceLimitError",
]
