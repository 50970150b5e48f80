"""Exception types raised by the engine."""


class ThinIrredError(ValueError):
    """Base class for precondition failures."""


class NotPrime(ThinIrredError):
    pass


class CeilingExceeded(ThinIrredError):
    pass


class DivisionByZero(ThinIrredError, ZeroDivisionError):
    pass


class LogOfZero(ThinIrredError):
    pass


class NotADivisor(ThinIrredError):
    pass


class CharacteristicTooSmall(ThinIrredError):
    pass


class ZeroArgument(ThinIrredError):
    pass


class ZeroDerivative(ThinIrredError):
    pass


class PrincipalCharacter(ThinIrredError):
    pass


class SearchSpaceTooLarge(ThinIrredError):
    pass


class ParseError(ThinIrredError):
    pass
