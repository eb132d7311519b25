"""Exception hierarchy.

Everything raised on bad input derives from :class:`SemitoricError`; the CLI
maps :class:`ParseError` to exit code 2 and every other subclass to exit 1.
"""


class SemitoricError(Exception):
    """Base class for domain errors."""


class ParseError(SemitoricError):
    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class NotUnimodular(SemitoricError):
    pass


class _Indexed(SemitoricError):
    def __init__(self, index, detail=""):
        self.index = index
        text = f"{type(self).__name__}({index})"
        if detail:
            text += f": {detail}"
        super().__init__(text)


class NotPrimitive(_Indexed):
    pass


class BadDeterminant(_Indexed):
    pass


class IndexOutOfRange(_Indexed):
    pass


class NotBlowdownSite(_Indexed):
    pass


class DegenerateStep(_Indexed):
    pass


class InvalidCorner(_Indexed):
    pass


class NotCounterClockwise(SemitoricError):
    pass


class MinimumLength(SemitoricError):
    pass


class NotMinimal(SemitoricError):
    pass


class Unclassifiable(SemitoricError):
    """Reaching this means a bug: every valid minimal object has a class."""


class SeamViolation(SemitoricError):
    pass


class BadWinding(SemitoricError):
    pass


class HelixEquationViolated(SemitoricError):
    pass


class NotAHelixWord(SemitoricError):
    WRONG_WINDING = "WrongWinding"
    NOT_CONJUGATE = "NotConjugateToTc"
    SEED_MISMATCH = "SeedMismatch"

    def __init__(self, reason, detail=""):
        self.reason = reason
        text = f"NotAHelixWord({reason})"
        if detail:
            text += f": {detail}"
        super().__init__(text)


class SeedNotInS(SemitoricError):
    pass


class HiddenCornerUnsupported(SemitoricError):
    pass


class SeamOnCut(SemitoricError):
    pass


class Infeasible(SemitoricError):
    pass


class InvalidPolygon(SemitoricError):
    pass
