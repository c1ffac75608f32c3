"""Exception types raised across the package."""


class SubsetSumError(Exception):
    """Base class for all errors raised by this package."""


class ZeroInverse(SubsetSumError, ZeroDivisionError):
    """Raised when inverting a residue congruent to zero."""


class CapExceedsModulus(SubsetSumError, ValueError):
    """Inverse table requested for indices that are not all invertible."""


class NoPrimeFound(SubsetSumError):
    """Prime sampling exhausted its retry budget."""


class PrimeSamplingFailed(NoPrimeFound):
    """A decision round could not obtain a prime."""


class SizeOverflow(SubsetSumError, ValueError):
    """Convolution length exceeds the largest supported transform."""


class NonzeroConstantTerm(SubsetSumError, ValueError):
    """exp was asked for a series whose constant term is not zero."""


class FieldTooSmall(SubsetSumError, ValueError):
    """The prime modulus does not exceed the truncation degree."""


class NonPositiveItem(SubsetSumError, ValueError):
    """An instance contains an item smaller than 1."""


class InstanceTooLarge(SubsetSumError, ValueError):
    """An oracle was asked to process more items than it allows."""


class ParseError(SubsetSumError, ValueError):
    """Malformed token in an instance stream.

    ``index`` is the 1-based position of the offending token.
    """

    def __init__(self, index: int, token: str, reason: str):
        self.index = index
        self.token = token
        self.reason = reason
        super().__init__(f"token {index} ({token!r}): {reason}")
