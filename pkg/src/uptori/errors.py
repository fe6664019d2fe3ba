"""Exception hierarchy shared by every module of the package."""


class UptoriError(Exception):
    """Base class for all errors raised by :mod:`uptori`."""


class LengthMismatch(UptoriError, ValueError):
    pass


class TargetNotTotal(UptoriError, ValueError):
    pass


class BadWindowLength(UptoriError, ValueError):
    pass


class BadSymbol(UptoriError, ValueError):
    """A letter outside the alphabet, or an unparsable character."""


class OutOfBounds(UptoriError, IndexError):
    pass


class ShapeTooLarge(UptoriError, ValueError):
    """The window does not fit the grid, or its code space overflows int64."""


class TooLarge(UptoriError, ValueError):
    pass


class BadP(UptoriError, ValueError):
    pass


class NotAnUpword(UptoriError, ValueError):
    pass


class RotationOutOfRange(UptoriError, ValueError):
    pass


class CertificationError(UptoriError):
    """A construction's inputs or output failed re-verification."""


class NotTotal(UptoriError, ValueError):
    pass


class ShapeMismatch(UptoriError, ValueError):
    pass


class LemmaViolation(UptoriError):
    """The last row of m'(W) differs from its first row."""


class UnequalFamilyLengths(UptoriError, ValueError):
    pass


class DiamondicityNotOne(UptoriError, ValueError):
    pass


class DoubleCoverage(UptoriError, ValueError):
    pass


class ConditionsNotMet(UptoriError, ValueError):
    """A quasi-family fails one of the lifting preconditions.

    ``condition`` is one of ``"a"``, ``"b"``, ``"c"`` or ``"upqf"``; ``member``
    is the offending member index when one can be named.
    """

    def __init__(self, condition, message, member=None):
        super().__init__(f"condition ({condition}): {message}")
        self.condition = condition
        self.member = member


class BadCut(UptoriError, ValueError):
    pass


class BadBlock(UptoriError, ValueError):
    pass


class SpecTooLarge(UptoriError, ValueError):
    pass


class ParseError(UptoriError, ValueError):
    pass


class DuplicateMember(UptoriError, ValueError):
    """Two family members are rotations of each other."""
