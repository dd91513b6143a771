"""Exception types shared across the package."""


class FloorSumError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FloorSumError, ValueError):
    """An argument is outside the range on which an operation is defined."""


class InstanceTooLargeError(FloorSumError, OverflowError):
    """Worst-case intermediate values would not fit in a signed 64-bit word."""


class DivisibilityError(FloorSumError, ValueError):
    """The modulus lacks a divisor required by a predicted extremal site."""

    def __init__(self, m: int, missing: tuple[int, ...]):
        self.m = m
        self.missing = tuple(missing)
        divisors = " and ".join(str(d) for d in self.missing)
        super().__init__(f"m={m} must be a multiple of {divisors}")


class TableViolationError(FloorSumError):
    """A computed difference disagrees with its proven case table.

    This cannot happen unless the implementation itself is wrong; it is
    raised (rather than silently recorded) so that scans fail loudly.
    """
