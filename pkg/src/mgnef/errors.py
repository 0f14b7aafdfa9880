"""Exception hierarchy shared by all mgnef modules."""


class MgnefError(Exception):
    """Base class for all domain errors raised by this package."""


class UnstableSignature(MgnefError):
    """2g - 2 + |T| <= 0."""


class DuplicateLabel(MgnefError):
    """Marking labels are not pairwise distinct."""


class InvalidPair(MgnefError):
    """A pair of genus-markings does not form a valid separating index."""


class SignatureMismatch(MgnefError):
    """Divisor classes from different moduli signatures were combined."""


class WrongHomeSpace(MgnefError):
    """A named class was requested on a signature it does not live on."""


class UnsupportedBasisElement(MgnefError):
    """A coordinate operation met a basis element outside its domain."""


class GenusTooSmall(MgnefError):
    """The operation requires a larger genus."""


class SpecMismatch(MgnefError):
    """A divisor class does not match the clutching-map specification."""


class NotInSpan(MgnefError):
    """Target class is not a linear combination of the given generators."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DependentGenerators(MgnefError):
    """The generator list is linearly dependent."""


class BadSplit(MgnefError):
    """s + t != g or a part is smaller than 1."""


class NegativeSeed(MgnefError):
    """The generator walk needs b_irr >= 0."""


class DimensionTooLarge(MgnefError):
    """Brute-force vertex enumeration is restricted to small dimensions."""


class DegenerateInput(MgnefError):
    """V-representation input admits no full-dimensional hull."""


class ExprError(MgnefError):
    """Base class for divisor-expression failures."""


class ExprSyntaxError(ExprError):
    """Malformed divisor expression text."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnknownAtom(ExprError):
    """An atom does not resolve on the declared signature."""
