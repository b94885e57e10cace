"""Exception hierarchy shared by every module in the package."""


class ChristoffelError(Exception):
    """Base class for domain errors (mapped to exit code 1 by the CLI)."""


class NotCoprime(ChristoffelError, ValueError):
    pass


class EqualLetters(ChristoffelError, ValueError):
    pass


class NotAUnit(ChristoffelError, ArithmeticError):
    pass


class NotIntegralDomain(ChristoffelError, ValueError):
    pass


class RingMismatch(ChristoffelError, ValueError):
    pass


class SizeMismatch(ChristoffelError, ValueError):
    pass


class LengthMismatch(ChristoffelError, ValueError):
    pass


class NotInvertible(ChristoffelError, ArithmeticError):
    pass


class NotPrimitive(ChristoffelError, ValueError):
    pass


class NotBinaryAlphabet(ChristoffelError, ValueError):
    pass


class NotCentral(ChristoffelError, ValueError):
    pass


class NotChristoffel(ChristoffelError, ValueError):
    pass


class NotClosed(ChristoffelError, RuntimeError):
    pass


class NotApplicable(ChristoffelError, ValueError):
    pass


class NotFound(ChristoffelError, LookupError):
    pass
