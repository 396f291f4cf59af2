"""Exception types raised across the package."""


class FLLError(ValueError):
    """Base class for all input and domain errors."""


class SymbolOutOfRange(FLLError):
    pass


class EmptyWord(FLLError):
    pass


class AlphabetTooSmall(FLLError):
    pass


class RadiusTooLarge(FLLError):
    pass


class LengthMismatch(FLLError):
    pass


class AlphabetMismatch(FLLError):
    pass


class NotBinary(FLLError):
    pass


class DomainTooSmall(FLLError):
    """A closed form was evaluated outside the parameter range it holds on."""


class SpaceTooLarge(FLLError):
    """Exhaustive enumeration was requested over too many words."""


class PrefixLengthMismatch(FLLError):
    pass


class IndexOutOfRange(FLLError):
    pass


class InvalidConfig(FLLError):
    pass


class FormulaUnavailable(FLLError):
    pass
