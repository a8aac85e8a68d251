"""Exception hierarchy shared by every orbithop module."""


class OrbitHopError(Exception):
    """Base class for all errors raised by orbithop."""


class KeyFormatError(OrbitHopError, ValueError):
    """Key material cannot be turned into subkeys."""


class InvalidNibble(KeyFormatError):
    pass


class LengthMismatch(KeyFormatError):
    pass


class DegenerateSeed(KeyFormatError):
    pass


class DegenerateOffset(KeyFormatError):
    pass


class UnsupportedMapCount(KeyFormatError):
    pass


class DomainEscape(OrbitHopError, ArithmeticError):
    """A map step left the open domain needed for further iteration."""


class DegenerateOrbit(OrbitHopError):
    """An orbit escaped its domain or collapsed onto a fixed point."""


class GeneratorPoisoned(DegenerateOrbit):
    """Raised on every call after a generator hit a degenerate orbit."""


class BankTooSmall(OrbitHopError, ValueError):
    pass


class MapSpecError(OrbitHopError, ValueError):
    pass


class InsufficientData(OrbitHopError, ValueError):
    pass
