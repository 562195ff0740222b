"""Exception hierarchy shared by all modules."""


class FrameSpecError(ValueError):
    """Base class for every error raised by framespec."""


class InputError(FrameSpecError):
    """Malformed user input (bad JSON, wrong schema, bad field)."""


class DimensionMismatch(FrameSpecError):
    pass


class LengthMismatch(FrameSpecError):
    pass


class NotHermitian(FrameSpecError):
    pass


class NotProjector(FrameSpecError):
    pass


class NotOrthonormal(FrameSpecError):
    pass


class DomainError(FrameSpecError):
    """Mathematical precondition failure on otherwise well-formed input."""


class NotAFrame(DomainError):
    pass


class NotParseval(DomainError):
    pass


class PreconditionViolated(DomainError):
    pass


class NotStrictlyIncreasing(DomainError):
    pass


class BetaOutOfRange(DomainError):
    pass


class KTooSmall(DomainError):
    pass


class NOutOfRange(DomainError):
    pass


class NumericalFailure(FrameSpecError):
    pass


class InternalInconsistency(FrameSpecError):
    """Two independent computations of the same quantity disagree."""


class ConventionMismatch(FrameSpecError):
    pass
