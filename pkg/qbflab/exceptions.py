"""Exception hierarchy shared by every qbflab app.

The CLI maps any ``QbfLabError`` to exit status 2; messages carry the measured
quantity that failed so they can be shown as-is.
"""


class QbfLabError(Exception):
    """Base class for all library errors."""


class MalformedOperatorError(QbfLabError, ValueError):
    pass


class DimensionMismatchError(QbfLabError, ValueError):
    pass


class QubitIndexError(QbfLabError, IndexError):
    pass


class ParameterRangeError(QbfLabError, ValueError):
    pass


class CapacityError(QbfLabError):
    """The requested qubit count is above a configured ceiling."""


class InputFormatError(QbfLabError, ValueError):
    pass


class PreconditionError(QbfLabError, ValueError):
    pass


class NotHermitianError(PreconditionError):
    pass


class NotUnitaryError(PreconditionError):
    pass


class NotQuantumBooleanError(PreconditionError):
    pass


class NotProjectorError(PreconditionError):
    pass


class NotTracelessError(PreconditionError):
    pass


class NormalizationError(PreconditionError):
    pass


class DegreeError(PreconditionError):
    pass


class AnticommutationError(PreconditionError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
