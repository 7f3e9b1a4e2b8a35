"""Error taxonomy shared across the package."""

from __future__ import annotations


class StableBettiError(Exception):
    """Base class for all package errors."""


class MonomialSyntaxError(StableBettiError):
    """Monomial text does not match the strict grammar."""


class DegreeMismatch(StableBettiError):
    """Lexicographic comparison requested across different degrees."""


class InvalidMove(StableBettiError):
    """Borel exchange with j >= i, index out of range, or variable absent."""


class BadRange(StableBettiError):
    """Numeric argument outside its documented range."""


class BadDegree(StableBettiError):
    """Degree argument outside its documented range."""


class MixedDegrees(StableBettiError):
    """A set operation requires all monomials to share one degree."""


class RankOutOfRange(StableBettiError):
    """Ranked selection past the end of the difference set."""

    def __init__(self, message: str, rank: int, size: int):
        super().__init__(message)
        self.rank = rank
        self.size = size


class EmptyIdeal(StableBettiError):
    """Operation undefined on the zero ideal."""


class NotStable(StableBettiError):
    """Betti formula applied to a non-stable component."""

    def __init__(self, message: str, component: int, generator=None, move=None):
        super().__init__(message)
        self.component = component
        self.generator = generator
        self.move = move


class CapTooLow(StableBettiError):
    """Homology is still nonzero at the top tracked degree."""


class BudgetExceeded(StableBettiError):
    """Enumeration or search exceeded its configured budget."""


class SpecError(StableBettiError):
    """Corner spec violates a structural invariant (malformed input)."""


class InfeasibleSpec(StableBettiError):
    """No witness exists (or none within the search budget)."""

    def __init__(self, message: str, exhausted_budget: bool = False):
        super().__init__(message)
        self.exhausted_budget = exhausted_budget


class UncoveredByCharacterization(StableBettiError):
    """Spec falls outside the region the characterization decides."""


class VerificationFailed(StableBettiError):
    """A constructed witness failed its mandatory self-check."""
