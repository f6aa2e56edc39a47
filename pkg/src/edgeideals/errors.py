"""Exception types shared across the package."""

from __future__ import annotations


class EdgeIdealsError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(EdgeIdealsError, ValueError):
    """A family parameter is outside its structurally valid range."""


class FamilySpecParseError(EdgeIdealsError, ValueError):
    """A compact family-spec string failed to parse.

    Carries the character offset where parsing stopped.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FusionLoopError(EdgeIdealsError, ValueError):
    """Fusing two adjacent vertices would create a loop."""


class MembershipError(EdgeIdealsError, ValueError):
    """A monomial was required to lie outside the ideal but does not."""


class TooManyVariablesError(EdgeIdealsError, ValueError):
    """The ambient variable count exceeds a configured cap."""


class TooManyGeneratorsError(EdgeIdealsError, ValueError):
    """The generator count exceeds the Taylor-complex cap."""


class NonPrimeCharacteristicError(EdgeIdealsError, ValueError):
    """Field characteristic must be a prime number."""


class CapExceededError(EdgeIdealsError, ValueError):
    """An exact search was requested beyond its configured size cap."""


class OutOfStatedRangeError(EdgeIdealsError, ValueError):
    """Closed-form values were requested outside the stated parameter range."""


class RuleInapplicableError(EdgeIdealsError, ValueError):
    """A decomposition rule does not apply at the given parameters."""


class RecursionCapError(EdgeIdealsError, RuntimeError):
    """The regularity recursion exceeded its depth cap."""
