"""Domain exceptions shared across the package.

Every error raised by the library for a *domain* reason (bad geometry,
violated precondition, exhausted search) derives from DomainError so the
CLI can map them to exit code 1, distinct from usage errors (exit 2).
"""


class DomainError(Exception):
    pass


# algebra kernel
class AllZero(DomainError):
    pass


class ZeroForm(DomainError):
    pass


# braids
class IndexOutOfRange(DomainError):
    pass


class NotAKnot(DomainError):
    pass


class NotPure(DomainError):
    pass


class InvalidCounts(DomainError):
    pass


# curves
class CoincidentPoints(DomainError):
    pass


class DegenerateAxes(DomainError):
    pass


class ZeroParameter(DomainError):
    pass


class CurveAtInfinity(DomainError):
    pass


# gluing
class NotIntersecting(DomainError):
    pass


class Tangential(DomainError):
    pass


class ExtraIntersections(DomainError):
    pass


class NotEmbeddedInput(DomainError):
    pass


class EpsilonExhausted(DomainError):
    def __init__(self, message, step_index=None, diagnostics=None):
        super().__init__(message)
        self.step_index = step_index
        self.diagnostics = diagnostics


class StrandsNotSeparated(DomainError):
    pass


class CrossingNotFound(DomainError):
    pass


class NeighborhoodTooCrowded(DomainError):
    pass


class NonRationalInfinityPoint(DomainError):
    pass


# constructors
class DegeneratePolygon(DomainError):
    pass


class VerificationMismatch(DomainError):
    pass


class NoDescriptor(DomainError):
    pass


# verify
class NotAffine(DomainError):
    pass


class NotEmbedded(DomainError):
    pass


class GenericityFailure(DomainError):
    pass


class MalformedDiagram(DomainError):
    pass
