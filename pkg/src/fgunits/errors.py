"""Exception hierarchy."""


class FGUnitsError(Exception):
    """Base class for all errors raised by fgunits."""


class GroupMismatch(FGUnitsError, ValueError):
    """Operands belong to different groups."""


class InvalidGroup(FGUnitsError, ValueError):
    pass


class AugmentationZero(FGUnitsError, ArithmeticError):
    """Element has augmentation 0, hence is not a unit."""


class NotNormalized(FGUnitsError, ValueError):
    """Element does not have augmentation 1."""


class NotWellDefined(FGUnitsError, ValueError):
    """Generator images do not define a homomorphism."""


class NotInvolutory(FGUnitsError, ValueError):
    pass


class ConsistencyFailure(FGUnitsError, AssertionError):
    """An internal invariant was violated. Always a bug."""


class TooLarge(FGUnitsError):
    """Requested computation exceeds a configured size cap."""


class NotAGroup(FGUnitsError, ValueError):
    pass
