"""Exception types raised across the package."""


class SignedAlgebraError(ValueError):
    """Base class for every validation error raised by signedalg."""


class DimensionMismatch(SignedAlgebraError):
    pass


class NotSquare(DimensionMismatch):
    pass


class LengthMismatch(SignedAlgebraError):
    pass


class NotInvertible(SignedAlgebraError):
    """The matrix has no inverse modulo 2."""


class NotAnticommutative(SignedAlgebraError):
    pass


class MalformedGram(SignedAlgebraError):
    """P^T P does not split into the two-block identity / complement pattern."""


class NotOrthogonal(SignedAlgebraError):
    pass


class OddMass(SignedAlgebraError):
    pass


class FlatlineInSpan(SignedAlgebraError):
    """The all-ones vector lies in the span of the seed vectors."""


class BadSeed(SignedAlgebraError):
    pass


class TooLarge(SignedAlgebraError):
    """An exhaustive scan was requested beyond its configured bound."""


class NotBasic(SignedAlgebraError):
    pass


class NotIndependent(SignedAlgebraError):
    pass


class NotAChain(SignedAlgebraError):
    pass


class OddSize(SignedAlgebraError):
    pass


class ImpureDoubleton(SignedAlgebraError):
    pass
