"""Exception hierarchy.  Every evaluator failure is a HoltsmarkError."""


class HoltsmarkError(Exception):
    """Base class for all evaluation errors raised by this package."""


class DomainError(HoltsmarkError, ValueError):
    """Argument outside the range an evaluator supports."""


class PoleError(DomainError):
    """Argument sits on a pole (Gamma at a non-positive integer, a zero denominator parameter, ...)."""


class RangeOverflowError(HoltsmarkError, OverflowError):
    """Result not representable as a finite double."""


class NoConvergenceError(HoltsmarkError, ArithmeticError):
    """Series hit its term cap before meeting the truncation test."""


class PrecisionLossError(HoltsmarkError, ArithmeticError):
    """Cancellation in a series is too severe for the result to be trusted."""


class BudgetExceededError(HoltsmarkError, RuntimeError):
    """Adaptive quadrature ran past its evaluation budget."""
