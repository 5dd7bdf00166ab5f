"""Exception hierarchy; each error carries the CLI exit code it maps to."""

from __future__ import annotations


class MatlcError(Exception):
    """Base class for all matlc errors."""
    exit_code = 2
    kind = "error"


class ParseError(MatlcError):
    """Input could not be parsed."""
    exit_code = 2
    kind = "parse"


class DomainError(MatlcError):
    """An operation was called outside its domain."""
    exit_code = 2
    kind = "domain"


class UnsupportedRankError(DomainError):
    """Region counting was requested for an ambient rank other than 2."""
    kind = "unsupported-rank"


class CapacityError(MatlcError):
    """Exhaustive enumeration would exceed the configured cap."""
    exit_code = 3
    kind = "capacity"


class InvariantViolation(MatlcError):
    """An identity that must hold by construction failed."""
    exit_code = 4
    kind = "invariant"


def check_capacity(size: int, cap: int, what: str) -> None:
    """Raise CapacityError when ``size`` exceeds ``cap``."""
    if size > cap:
        raise CapacityError(f"{what}: ground set of {size} elements exceeds enumeration cap {cap}")
