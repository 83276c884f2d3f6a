"""Exception hierarchy shared by all modules."""


class E6MonoError(ValueError):
    """Base class for every error raised by the package."""


# lattices
class NonSymmetricError(E6MonoError):
    pass


class DegenerateError(E6MonoError):
    pass


class UnknownNameError(E6MonoError):
    pass


class ZeroScaleError(E6MonoError):
    pass


class NotDefiniteError(E6MonoError):
    pass


class RankMismatchError(E6MonoError):
    pass


class DependentBasisError(E6MonoError):
    pass


class NonIntegralPairingError(E6MonoError):
    pass


# exterior algebra
class GeneratorMismatchError(E6MonoError):
    pass


class NotTopDegreeError(E6MonoError):
    pass


# group cohomology
class NotInvolutionError(E6MonoError):
    pass


# groups
class NotRootError(E6MonoError):
    pass


class CapExceededError(E6MonoError):
    pass


class NotIsometryError(E6MonoError):
    pass


class NotTransitiveError(E6MonoError):
    pass


# symmetric functions
class TooManyRowsError(E6MonoError):
    pass


class OddCoefficientParityError(E6MonoError):
    pass


class CapViolationError(E6MonoError):
    pass


# cli
class UnknownSuiteError(E6MonoError):
    pass
