"""Exception types raised across the package.

Every error derives from :class:`TgrsError` (itself a ``ValueError``) so the
CLI can map any precondition failure to exit status 2 with one ``except``.
"""


class TgrsError(ValueError):
    pass


# -- fields -----------------------------------------------------------------
class NonPrime(TgrsError):
    pass


class ReducibleModulus(TgrsError):
    pass


class UnsupportedSize(TgrsError):
    pass


class FieldMismatch(TgrsError):
    pass


class DivisionByZero(TgrsError, ZeroDivisionError):
    pass


class EvenCharacteristic(TgrsError):
    pass


class OddCharacteristic(TgrsError):
    pass


class NotASubfieldDegree(TgrsError):
    pass


# -- matrices and codes -----------------------------------------------------
class NotSquare(TgrsError):
    pass


class DimensionMismatch(TgrsError):
    pass


class ZeroCode(TgrsError):
    pass


class FullSpace(ZeroCode):
    """Dual of the full space: it has dimension zero."""


class BadIndexSet(TgrsError):
    pass


class BadTransform(TgrsError):
    pass


class BudgetExceeded(TgrsError):
    pass


# -- TGRS parameters and theorems --------------------------------------------
class RepeatedEvaluationPoint(TgrsError):
    pass


class ZeroEvaluationPoint(TgrsError):
    pass


class BadParams(TgrsError):
    pass


class BadSize(TgrsError):
    pass


class OutOfTheoremRange(TgrsError):
    pass


class SetTooSmall(TgrsError):
    pass


class WrongShape(TgrsError):
    pass


# -- constructions ------------------------------------------------------------
class BadShape(TgrsError):
    pass


class ExcludedEta(TgrsError):
    pass


class BadParameter(TgrsError):
    pass


class BadModulus(TgrsError):
    pass


class PointNotInSubfield(TgrsError):
    pass


class BadBeta(TgrsError):
    pass


class NotSelfOrthogonal(TgrsError):
    pass


class ZeroNotLast(TgrsError):
    pass
