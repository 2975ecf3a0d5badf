"""Exception hierarchy shared by all modules."""


class SelfIntError(Exception):
    pass


class WordError(SelfIntError, ValueError):
    """Raised when a string cannot be turned into a reduced cyclic word."""


class EmptyWord(WordError):
    pass


class IllegalCharacter(WordError):
    pass


class NotCyclicallyReduced(WordError):
    pass


class LengthMismatch(SelfIntError, ValueError):
    pass


class SameOccurrence(SelfIntError, ValueError):
    pass


class NonPrimitiveInput(SelfIntError, ValueError):
    pass


class CapExceeded(SelfIntError, RuntimeError):
    """A linked pair reached the interior-length cap of the periodic search."""


class WrongOrientation(SelfIntError, ValueError):
    pass


class DegenerateSplit(SelfIntError, ValueError):
    pass


class NotOppositeCorners(SelfIntError, ValueError):
    pass


class PurePower(SelfIntError, ValueError):
    pass


class UnknownShape(SelfIntError, ValueError):
    pass


class UnvalidatedLength(SelfIntError, ValueError):
    pass
