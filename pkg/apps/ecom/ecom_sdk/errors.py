"""
Error Types
===========
Every failure raised by the SDK derives from EcomError so the CLI can map it
onto an exit code.
"""

from typing import Any, Optional


class EcomError(Exception):
    """Base class for SDK errors."""


class GroupSpecError(EcomError, ValueError):
    """A group spec could not be turned into a valid finite group."""


class InvalidInputError(EcomError, ValueError):
    """An operation was called outside its precondition."""


class DisconnectedComplexError(EcomError):
    """A connected complex was required."""

    def __init__(self, components: int):
        super().__init__(f"complex is disconnected ({components} components)")
        self.components = components


class RelatorViolation(EcomError):
    """A triangle relator was not sent to the identity by the commutator map."""

    def __init__(self, relator, product: int, expected: int):
        super().__init__(f"relator {tuple(relator)} maps to element {product}, expected {expected}")
        self.relator = tuple(relator)
        self.product = product
        self.expected = expected


class BudgetExceeded(EcomError):
    """
    A configured resource budget ran out.

    Attributes:
        resource: budget name (e.g. "max_simplices", "time_limit_seconds")
        limit: configured limit
        attempted: amount requested when the budget tripped
        partial: optional partial result computed before the budget tripped
    """

    def __init__(self, resource: str, limit: Any, attempted: Any, partial: Optional[Any] = None):
        super().__init__(f"budget '{resource}' exceeded: limit {limit}, attempted {attempted}")
        self.resource = resource
        self.limit = limit
        self.attempted = attempted
        self.partial = partial

    def __reduce__(self):
        return (type(self), (self.resource, self.limit, self.attempted, self.partial))

    def to_dict(self) -> dict:
        out = {"resource": self.resource, "limit": self.limit, "attempted": self.attempted}
        if self.partial is not None:
            out["partial"] = self.partial
        return out


class SimplificationError(EcomError):
    """A presentation rewrite changed an invariant it must preserve."""
