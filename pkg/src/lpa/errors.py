"""Exception hierarchy shared by every module of the package."""


class LPAError(Exception):
    """Base class for all errors raised by :mod:`lpa`."""


class InputError(LPAError):
    """Malformed user input (files, expressions, arguments)."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class GraphFormatError(InputError):
    pass


class EmptyGraph(GraphFormatError):
    pass


class DuplicateName(GraphFormatError):
    pass


class DanglingEndpoint(GraphFormatError):
    pass


class ParseError(InputError):
    pass


class UnknownName(ParseError):
    pass


class NonComposablePath(ParseError):
    pass


class MalformedScalar(ParseError):
    pass


class NonPositiveCoefficient(ParseError):
    pass


class GraphMismatch(LPAError):
    pass


class FieldMismatch(LPAError):
    pass


class NotIdempotent(LPAError):
    pass


class NotHomogeneous(LPAError):
    pass


class ProductMismatch(LPAError):
    pass


class SinkNotExpandable(LPAError):
    pass


class AbsentTerm(LPAError):
    pass


class IncompleteAssignment(InputError):
    pass


class NotEFamily(LPAError):
    pass


class CertificateMismatch(LPAError):
    pass


class DegreeViolation(LPAError):
    pass


class NotInvertible(LPAError):
    pass


class MissingWitness(InputError):
    pass


class AssemblyAssertionFailed(LPAError):
    pass


class ShapeMismatch(LPAError):
    pass


class RewriteLimitExceeded(RuntimeError):
    """The normal-form rewrite ran past its step bound (an internal bug)."""
