"""Exception types shared across the package."""

from __future__ import annotations


class WidthlabError(Exception):
    """Base class for all package-specific errors."""


class CapExceeded(WidthlabError):
    """A configured work or size cap would be exceeded.

    Caps are explicit; exceeding one is an error, never silent truncation.
    """


class BooleanSpaceOverflow(WidthlabError):
    """Boolean row-space closure grew past its cap.

    Carries the member count reached when the cap was tripped.
    """

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


class ParseError(WidthlabError):
    """Malformed textual input; position points at the offending byte or line."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class ContractError(WidthlabError):
    """A cut function violated its symmetry contract f(X) = f(V \\ X)."""


class StructureError(WidthlabError):
    """A decomposition tree failed structural validation."""
