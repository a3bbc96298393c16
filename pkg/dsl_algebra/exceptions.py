"""Exception hierarchy shared by the algebra, cache and CLI layers."""


class AlgebraError(ValueError):
    """Base class for every error raised by dsl_algebra."""


class AlphabetMismatchError(AlgebraError):
    """Two operands live over different alphabets."""


class TruncationError(AlgebraError):
    """A degree beyond the truncation order of a series was requested."""


class ConstantTermError(AlgebraError):
    """The constant term violates the precondition of exp, log or inverse."""


class NotHomogeneousError(AlgebraError):
    pass


class NotLieError(AlgebraError):
    """Input is not an element of the free Lie algebra."""


class NotInertError(AlgebraError):
    """Input is not push-invariant (or has no h-solution at group level)."""


class NotWAdmissibleError(AlgebraError):
    """A word ending in e0 was handed to an operation defined on W."""


class DimensionMismatchError(AlgebraError):
    pass


class TorsorPreconditionError(AlgebraError):
    """a·x = (x+z)·b does not hold, so no factorization exists."""


class CacheError(AlgebraError):
    pass


class InputFormatError(AlgebraError):
    """Malformed JSON input handed to the CLI."""
