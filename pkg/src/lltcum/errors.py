"""Exception types shared across the package."""


class LLTError(Exception):
    """Base class for all package errors."""


class NonDivisible(LLTError):
    """Exact division by a power of (q-1) left a remainder."""


class NotSymmetric(LLTError):
    """Polynomial fails a variable-transposition test."""


class DegreeExceedsVars(LLTError):
    """Homogeneous degree exceeds the number of variables; expansion unfaithful."""


class PatternMismatch(LLTError):
    """A rewrite site does not carry the configuration the rule needs."""


class SizeGuard(LLTError):
    """Enumeration size exceeds the guard for this operation."""


class NotReduced(LLTError):
    """Schroder path violates the reduced-path conditions."""


class InvalidParkingFunction(LLTError):
    """Sequence fails the parking-function inequality."""
