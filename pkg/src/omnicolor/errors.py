"""Exception hierarchy.

Every error raised by the library derives from :class:`OmniColorError`, so
callers (and the CLI) can separate input problems from failed identities:
a failed identity is never an exception, it is a :class:`~omnicolor.verdicts.Verdict`.
"""


class OmniColorError(Exception):
    pass


# scalars
class InversionOfZero(OmniColorError, ZeroDivisionError):
    pass


class OrderMismatch(OmniColorError, ValueError):
    pass


class InvalidOrder(OmniColorError, ValueError):
    pass


class ParseError(OmniColorError, ValueError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class LiteralError(ParseError):
    """A scalar literal does not follow the ``q`` / ``q*z^k`` grammar."""


# grading
class DimensionMismatch(OmniColorError, ValueError):
    pass


class GroupMismatch(OmniColorError, ValueError):
    pass


# graded spaces and maps
class ShapeMismatch(OmniColorError, ValueError):
    pass


class AmbientMismatch(OmniColorError, ValueError):
    pass


class NotGraded(OmniColorError, ValueError):
    pass


class NotHomogeneous(OmniColorError, ValueError):
    pass


# color algebras
class InvalidConstants(OmniColorError, ValueError):
    pass


class ShiftMismatch(OmniColorError, ValueError):
    pass


class NotLie(OmniColorError, ValueError):
    pass


class NotQuadratic(OmniColorError, ValueError):
    pass


# omni
class SpaceMismatch(OmniColorError, ValueError):
    pass


class NotSkew(OmniColorError, ValueError):
    pass


class NotMaximalIsotropic(OmniColorError, ValueError):
    pass


class NotDirac(OmniColorError, ValueError):
    pass


# two-term algebras
class UnboundSymbol(OmniColorError, ValueError):
    """Raised when asked to evaluate a formula that contains a free variable."""


class NotSkeletal(OmniColorError, ValueError):
    pass


class NotStrict(OmniColorError, ValueError):
    pass


class CrossedAxiomFailure(OmniColorError, ValueError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


# categorical side
class NonComposable(OmniColorError, ValueError):
    pass


# file format / cli
class SchemaError(OmniColorError, ValueError):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class UnknownCommand(OmniColorError, ValueError):
    pass


class UnknownFixture(OmniColorError, KeyError):
    pass
