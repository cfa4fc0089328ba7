"""Exception types shared across the package."""

from __future__ import annotations

from collections.abc import Iterable


class VdaError(Exception):
    """Base class for every domain error raised by this package."""


class SchemaError(VdaError):
    """Structurally invalid data: mismatched duty lists, bad vectors, name clashes."""


class TotalityError(SchemaError):
    """An assumption lacks a contrary (the contrary map must be total)."""


class FlatnessError(SchemaError):
    """A rule head is an assumption; only flat frameworks are supported."""


class UnknownNameError(VdaError, LookupError):
    """A referenced action, situation, duty, or sentence is not declared."""


class SelfComparisonError(VdaError, ValueError):
    """Strict preference queried for an action against itself."""


class ResourceCapError(VdaError):
    """A configured resource cap was exceeded."""

    def __init__(self, cap: str, limit: int):
        super().__init__(f"resource cap exceeded: {cap} (limit {limit})")
        self.cap = cap
        self.limit = limit


class IndeterminateSituationError(VdaError):
    """Some perception assumption is neither skeptically justified nor rejected."""

    def __init__(self, undecided: Iterable[str]):
        self.undecided = tuple(undecided)
        listed = ", ".join(self.undecided)
        super().__init__(f"indeterminate situation; undecided assumptions: {listed}")


class AgentFileError(VdaError):
    """An agent file cannot be parsed or fails a referential check."""
