"""
Verdicts on exact integer sequences: log-concavity, strictness, internal
zeros, nonnegativity and sign alternation.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Dict, Optional, Sequence, Tuple

IntSeq = Tuple[int, ...]


@dataclass(frozen=True)
class LogConcavityVerdict:
    """Property report for one sequence."""
    log_concave: bool
    strictly_log_concave: bool
    internal_zeros: bool
    nonnegative: bool
    sign_alternating: bool
    first_violation: Optional[int] = None

    def to_json(self) -> Dict[str, object]:
        return asdict(self)


def log_concavity_violation(s: Sequence[int], strict: bool = False) -> Optional[int]:
    """First interior index i with s[i-1]*s[i+1] > s[i]^2 (>= when strict)."""
    for i in range(1, len(s) - 1):
        lhs, rhs = s[i - 1] * s[i + 1], s[i] * s[i]
        if lhs > rhs or (strict and lhs == rhs):
            return i
    return None


def is_log_concave(s: Sequence[int]) -> bool:
    return log_concavity_violation(s) is None


def is_strictly_log_concave(s: Sequence[int]) -> bool:
    return log_concavity_violation(s, strict=True) is None


def has_internal_zeros(s: Sequence[int]) -> bool:
    """True iff a zero sits strictly between two nonzero entries."""
    nonzero = [i for i, x in enumerate(s) if x != 0]
    if len(nonzero) < 2:
        return False
    return any(s[j] == 0 for j in range(nonzero[0] + 1, nonzero[-1]))


def is_nonnegative(s: Sequence[int]) -> bool:
    return all(x >= 0 for x in s)


def is_sign_alternating(s: Sequence[int]) -> bool:
    """Nonzero entries alternate in sign starting positive; zeros only as a suffix."""
    body = list(s)
    while body and body[-1] == 0:
        body.pop()
    if not body:
        return False
    return all(x != 0 and (x > 0) == (i % 2 == 0) for i, x in enumerate(body))


def strip_trailing_zeros(s: Sequence[int]) -> IntSeq:
    body = list(s)
    while body and body[-1] == 0:
        body.pop()
    return tuple(body)


def analyze_sequence(s: Sequence[int]) -> LogConcavityVerdict:
    """Full verdict; ``first_violation`` refers to (non-strict) log-concavity."""
    violation = log_concavity_violation(s)
    return LogConcavityVerdict(
        log_concave=violation is None,
        strictly_log_concave=is_strictly_log_concave(s),
        internal_zeros=has_internal_zeros(s),
        nonnegative=is_nonnegative(s),
        sign_alternating=is_sign_alternating(s),
        first_violation=violation,
    )
