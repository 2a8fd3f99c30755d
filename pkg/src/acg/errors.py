"""Exception taxonomy.

Precondition violations (bad input) and theorem violations (a structural
claim failed on a concrete group) are deliberately distinct: the latter
means either an implementation bug or a genuine counterexample, and always
carries a witness.
"""

from __future__ import annotations


class AcgError(Exception):
    """Base class for all errors raised by this package."""


class CycleParseError(AcgError, ValueError):
    """Malformed cycle notation; ``position`` is the 0-based text offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class GroupFileError(AcgError, ValueError):
    """Malformed group file; ``line`` is the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line


class DegreeMismatch(AcgError, ValueError):
    pass


class MembershipError(AcgError, ValueError):
    """An element or subgroup was expected to lie in a group and does not."""


class NotNormal(AcgError, ValueError):
    pass


class PreconditionError(AcgError, ValueError):
    """A documented operation precondition does not hold."""


class UnsupportedGroup(AcgError, ValueError):
    """Operation requires structure the input lacks (e.g. solvability)."""


class CapacityExceeded(AcgError, RuntimeError):
    """Exhaustive work would exceed the enumeration bound.

    The message always names the bound so the caller knows what to raise
    (``ACG_ENUM_BOUND`` or the ``bound=`` argument).
    """

    def __init__(self, needed: int, bound: int, what: str = "enumeration"):
        super().__init__(
            f"{what} needs {needed} elements but the bound is {bound}; "
            f"increase the bound (ACG_ENUM_BOUND or bound=) to proceed"
        )
        self.needed = needed
        self.bound = bound


class ConstructionError(AcgError, RuntimeError):
    """A zoo constructor produced a group violating its own manifest."""


class TableConsistencyError(AcgError, RuntimeError):
    """Internal character-table consistency check failed (never silent)."""


class TheoremViolation(AcgError, RuntimeError):
    """A verified structural claim failed; carries a serializable witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
