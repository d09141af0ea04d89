"""
Error Types - Exception hierarchy for Copolarity-Verify

Input problems and internal consistency failures are kept apart so the
command line can map them to exit codes.

Author: Copolarity-Verify
"""

from typing import Any, Dict, Optional


class CopolarityError(RuntimeError):
    """Base class for every error raised by the package."""


class InputError(CopolarityError, ValueError):
    """A precondition on the arguments of an operation does not hold."""


class ComputationError(CopolarityError):
    """
    An internal sentinel fired: an exact division left a remainder, an average
    that must be integral was not, or a denominator that must be positive was not.

    These indicate a bug, never bad input.
    """

    def __init__(self, message: str, *, detail: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.detail: Dict[str, Any] = dict(detail or {})


class ArithmeticOverflowError(ComputationError):
    """A value left the signed 64-bit range."""
