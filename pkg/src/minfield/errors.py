"""Exception hierarchy for the minfield package."""


class MinFieldError(Exception):
    """Base class for all errors raised by this package."""


# --- field construction / arithmetic ---

class NotPrime(MinFieldError):
    pass


class ReduciblePolynomial(MinFieldError):
    pass


class DegreeMismatch(MinFieldError):
    pass


class FieldTooLarge(MinFieldError):
    pass


class DivisionByZero(MinFieldError):
    pass


class NotADivisor(MinFieldError):
    pass


class ZeroInput(MinFieldError):
    pass


class NotInSubfield(MinFieldError):
    pass


class WrongCharacteristic(MinFieldError):
    pass


class SameCharacteristic(MinFieldError):
    pass


class NotASubfield(MinFieldError):
    pass


class NoRootFound(MinFieldError):
    """Canonical subfield embedding found no root; internal inconsistency."""


# --- matrices ---

class ShapeMismatch(MinFieldError):
    pass


class FieldMismatch(MinFieldError):
    pass


class Singular(MinFieldError):
    pass


class NotScalar(MinFieldError):
    """A semilinear norm product is not a scalar matrix."""


class PreconditionFailed(MinFieldError):
    pass


class RetryLimitExceeded(MinFieldError):
    pass


# --- representations / descent ---

class NotAbsolutelyIrreducible(MinFieldError):
    pass


class NotWritable(MinFieldError):
    """The representation provably cannot be written over the target subfield."""


class CapExceeded(MinFieldError):
    pass


# --- PC presentations ---

class PcSyntaxError(MinFieldError):
    pass


class IndexOutOfRange(MinFieldError):
    pass


class InconsistentPresentation(MinFieldError):
    pass


class NotInSubgroup(MinFieldError):
    pass


# --- irreducible table construction ---

class NotConjugateStable(MinFieldError):
    pass


class OrbitNotFree(MinFieldError):
    pass


class InternalInconsistency(MinFieldError):
    pass


# --- file formats ---

class FormatError(MinFieldError):
    """Malformed input file (any of the line-oriented text formats)."""


class VerifyFailed(MinFieldError):
    """A claimed invariant in an artifact file does not re-check."""
