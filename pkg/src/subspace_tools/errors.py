"""Exception hierarchy shared by every module of the toolkit."""


class ToolkitError(Exception):
    """Base class; the CLI maps any subclass to exit code 1."""


class ZeroInput(ToolkitError, ValueError):
    pass


class ZeroVector(ToolkitError, ValueError):
    pass


class NotPrime(ToolkitError, ValueError):
    pass


class FactorizationBound(ToolkitError):
    """A cofactor could not be certified prime within the trial-division bound."""


class PreconditionFailed(ToolkitError, ValueError):
    pass


class InputTooLarge(ToolkitError, ValueError):
    pass


class InvalidDigit(ToolkitError, ValueError):
    pass


class InvalidAutomaton(ToolkitError, ValueError):
    pass


class OutOfRange(ToolkitError, ValueError):
    pass


class PatternMismatch(ToolkitError, ValueError):
    pass


class DegeneratePattern(ToolkitError, ValueError):
    pass


class BadPlaceSet(ToolkitError, ValueError):
    pass


class NonpositiveRoot(ToolkitError, ValueError):
    pass


class IrrationalObstruction(ToolkitError):
    """A q-th root needed by the peeling step does not exist in Q.

    ``value`` is the offending rational and ``kind`` is ``"root"`` or
    ``"coefficient"``.
    """

    def __init__(self, kind, value, q):
        self.kind = kind
        self.value = value
        self.q = q
        super().__init__(f"{kind} {value} has no rational root of order {q}")


class StepLimit(ToolkitError):
    pass


class DimensionMismatch(ToolkitError, ValueError):
    pass


class IndexOutOfRange(ToolkitError, IndexError):
    pass


class HodgeViolation(ToolkitError, ValueError):
    pass


class DegenerateSelfIntersection(ToolkitError, ValueError):
    pass


class NonpositivePairing(ToolkitError, ValueError):
    pass


class PositivityViolation(ToolkitError, ValueError):
    pass


class NoConvergence(ToolkitError):
    pass


class ScreenFailed(ToolkitError):
    pass


class NotNested(ToolkitError, ValueError):
    pass


class OutOfRiemannRochRange(ToolkitError, ValueError):
    pass


class ThetaOutOfRange(ToolkitError, ValueError):
    pass


class UsageError(ToolkitError):
    pass
