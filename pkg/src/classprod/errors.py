"""Exception hierarchy shared by every module."""


class GroupError(Exception):
    """Base class for all errors raised by classprod."""


class NotAGroup(GroupError):
    pass


class EmptySet(GroupError, ValueError):
    pass


class AmbientMismatch(GroupError, ValueError):
    pass


class NotASubgroup(GroupError, ValueError):
    pass


class NotNormal(GroupError, ValueError):
    pass


class NotInvariant(GroupError, ValueError):
    """Raised when eta/decompose is asked about a set that is not a union of classes."""


class NotSolvable(GroupError):
    """The derived series stabilized above the target.

    Carries the stabilized series so callers can still inspect it.
    """

    def __init__(self, message, series=None):
        super().__init__(message)
        self.series = series


class NotSolvableModN(NotSolvable):
    pass


class ParameterOutOfRange(GroupError, ValueError):
    pass


class NotPrime(ParameterOutOfRange):
    pass


class NotAPermutation(GroupError, ValueError):
    pass


class OrderCapExceeded(GroupError):
    pass


class NotAnAutomorphism(GroupError, ValueError):
    pass


class NotAnAction(GroupError, ValueError):
    pass


class ParseError(GroupError, ValueError):
    pass


class UnknownFamily(ParseError):
    pass


class TheoremBViolation(GroupError):
    """A supersolvable scan row broke dl(G/C_G(A)) <= 2*eta(AA^-1) - 1."""
