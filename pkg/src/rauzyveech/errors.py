"""Exception hierarchy shared by every module."""


class RauzyVeechError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 3


class InvalidPermutation(RauzyVeechError, ValueError):
    pass


class NotIrreducible(InvalidPermutation):
    pass


class Degenerate(InvalidPermutation):
    pass


class NotStandard(InvalidPermutation):
    pass


class ForbiddenPosition(InvalidPermutation):
    pass


class IllegalInsertion(InvalidPermutation):
    pass


class NoSuchSingularity(RauzyVeechError, ValueError):
    pass


class BadSplit(RauzyVeechError, ValueError):
    pass


class OutOfRange(RauzyVeechError, ValueError):
    pass


class NotComposable(RauzyVeechError, ValueError):
    pass


class ProfileInconsistent(RauzyVeechError, RuntimeError):
    """Raised when the singularity data contradicts Gauss-Bonnet; always a bug."""


class Tie(RauzyVeechError, RuntimeError):
    """Singular and non-singular counts coincide, so the Arf majority is undefined."""


class DimensionMismatch(RauzyVeechError, ValueError):
    pass


class DimensionTooLarge(RauzyVeechError, ValueError):
    pass


class NotSymplectic(RauzyVeechError, ValueError):
    pass


class SingularVector(RauzyVeechError, ValueError):
    pass


class SingularSeed(SingularVector):
    pass


class DegenerateForm(RauzyVeechError, ValueError):
    pass


class BadPairing(RauzyVeechError, ValueError):
    pass


class WrongPairingPattern(RauzyVeechError, ValueError):
    pass


class NotSymplecticBasis(RauzyVeechError, ValueError):
    pass


class NotLevelTwo(RauzyVeechError, ValueError):
    """A matrix that should reduce to the identity mod 2 does not."""


class KernelNotFixed(RauzyVeechError, ValueError):
    pass


class GenusNotPreserved(RauzyVeechError, ValueError):
    pass


class ClassSearchFailed(RauzyVeechError, RuntimeError):
    pass


class BudgetExceeded(RauzyVeechError):
    """A size or step budget was hit before the computation finished."""

    exit_code = 4


class SizeExceeded(BudgetExceeded):
    def __init__(self, max_size):
        super().__init__(f"Rauzy class larger than {max_size} vertices")
        self.max_size = max_size


class CapExceeded(BudgetExceeded):
    def __init__(self, cap, partial=None):
        super().__init__(f"enumeration exceeded cap of {cap} elements")
        self.cap = cap
        self.partial = partial


class BoundsExceeded(BudgetExceeded):
    pass
