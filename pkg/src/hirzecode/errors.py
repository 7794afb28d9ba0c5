"""Exception types raised across the package."""


class HirzecodeError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeCharacteristic(HirzecodeError, ValueError):
    """Field characteristic is not a prime number."""


class FieldTooLarge(HirzecodeError, ValueError):
    """Requested field order exceeds the supported maximum (256)."""


class DivisionByZero(HirzecodeError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class MixedFields(HirzecodeError, ValueError):
    """Operands belong to different field specifications."""


class OutsidePolygon(HirzecodeError, ValueError):
    """Lattice point or exponent vector lies outside the monomial polygon."""


class EmptyGradedPiece(HirzecodeError, ValueError):
    """The requested graded piece contains no monomials (dX < 0 or delta < 0)."""


class EtaOneUnsupported(HirzecodeError, ValueError):
    """Closed-form parameters are not available for eta = 1."""


class SpecialRegimeRequired(HirzecodeError, ValueError):
    """Operation requires the special regime (eta >= 2, dT < 0, eta | dT, q <= delta/eta)."""


class ZeroPolynomial(HirzecodeError, ValueError):
    """The zero polynomial has no leading monomial."""


class NotARepresentative(HirzecodeError, ValueError):
    """Lattice point is not a member of the reduced representative set."""


class PrecedingConditionsViolated(HirzecodeError, ValueError):
    """Puncturing preconditions on (dT, dX) are not met."""


class BudgetExceededWithoutWitnessMatch(HirzecodeError, RuntimeError):
    """Neither exhaustive search nor witness/bound agreement certified the distance."""


class CaseOutOfRange(HirzecodeError, ValueError):
    """Requested closed-form case does not apply to these parameters."""
