"""Exceptions shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class PreconditionError(InputError):
    """A documented precondition failed.

    Carries the name of the violated condition and, when available, a witness
    object (usually an interval) demonstrating the violation.
    """

    def __init__(self, condition: str, message: str, witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class InconsistentSpectrumError(InputError):
    """Spectrum arithmetic produced an impossible value (negative squared modulus)."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
