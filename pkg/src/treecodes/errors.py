"""Exception types shared across the package.

Everything derives from ValueError (bad input) except MismatchFound,
which signals that an internal consistency battery found a discrepancy.
"""


class InvalidDrawing(ValueError):
    """A tree sequence violates the growth-by-one-leaf invariants."""


class SizeMismatch(InvalidDrawing):
    """A drawing's i-th tree does not have i+1 vertices."""


class NotLeafRemoval(InvalidDrawing):
    """No leaf removal of one tree in a drawing yields the previous tree."""


class SignPatternInvalid(ValueError):
    """Signed permutation starts negative where a strict inverse is required."""


class NotInImage(ValueError):
    """Signed permutation has a negative left-to-right minimum, so it has
    no build-tree code."""


class NotInClass(ValueError):
    """Object fails the membership predicate of its declared class."""


class LimitExceeded(ValueError):
    """Requested size exceeds the configured enumeration limit."""


class MismatchFound(RuntimeError):
    """A cross-check between independently computed quantities failed."""


class DimensionMismatch(ValueError):
    """Weight vector and cone generators live in different dimensions."""


class NonGenericPoint(ValueError):
    """Point has a zero coordinate or two coordinates of equal magnitude."""


class CertificateInvalid(ValueError):
    """A region classification certificate fails its validity checks."""


class DivisionByZeroConstantTerm(ValueError):
    """Series division by a series with zero constant term."""


class SqrtConstantTermNotOne(ValueError):
    """Series square root requires constant term exactly 1."""


class NonIntegerCoefficient(ValueError):
    """n! times a series coefficient failed to be a nonnegative integer."""
