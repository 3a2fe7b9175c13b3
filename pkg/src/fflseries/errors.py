"""Exception hierarchy shared by all modules."""


class FFLError(Exception):
    """Base class for every error raised by the package."""


class DivisionByZero(FFLError, ZeroDivisionError):
    pass


class InvalidAutomorphism(FFLError, ValueError):
    pass


class NotInvertibleSeries(FFLError, ValueError):
    pass


class NotNormalized(FFLError, ValueError):
    pass


class ReconstructionFailed(FFLError):
    pass


class InvalidField(FFLError, ValueError):
    pass


class BadReductionOfFunction(FFLError, ValueError):
    pass


class SingularModel(FFLError, ValueError):
    pass


class UnsupportedCharacteristic(FFLError, ValueError):
    pass


class NotMinimal(FFLError, ValueError):
    pass


class BadReductionPlace(FFLError, ValueError):
    pass


class UnsupportedRamificationOverlap(FFLError, ValueError):
    pass


class ImprimitiveCharacter(FFLError, ValueError):
    pass


class IncompleteLocalData(FFLError, ValueError):
    pass


class IncomparableSeries(FFLError, ValueError):
    pass


class PoleAtCenter(FFLError):
    """Raised instead of a value when the L-series has a pole at T = 1/q."""

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"pole of order {order} at T = 1/q")


class ConfigError(FFLError, ValueError):
    """A job configuration failed validation; ``field`` names the culprit."""

    def __init__(self, field, message):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")
