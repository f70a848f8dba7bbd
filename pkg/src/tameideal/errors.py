"""Exception hierarchy shared by all tameideal modules."""


class TameIdealError(Exception):
    """Base class for all library errors."""


class EmptyGeneratorSet(TameIdealError):
    """An ideal was built from no generators."""


class LengthMismatch(TameIdealError):
    """An exponent vector does not match the ambient variable count."""


class NotSquarefree(TameIdealError):
    """A squarefree-only operation received a generator with an exponent > 1."""


class NotAGenerator(TameIdealError):
    """The requested chart center is not a minimal generator of the ideal."""


class NotAVertex(TameIdealError):
    """The chart regularity criterion was invoked at a non-vertex generator."""


class DegreeTooHigh(TameIdealError):
    """The degree-at-most-2 classifier received a generator of degree > 2."""


class SearchBudgetExceeded(TameIdealError):
    """The integer cone search hit its node or multiplicity budget.

    Raised instead of returning a possibly-wrong negative answer.
    """


class VertexNotPartitioned(TameIdealError):
    """A swap was requested at a vertex that lies in no part of the partition."""


class CircuitNotInClutter(TameIdealError):
    """The requested circuit does not belong to the clutter."""


class MixedGenerator(TameIdealError):
    """A binomial fits neither the linear-in-T nor the pure-T class."""


class Unsupported(TameIdealError):
    """The requested equations are outside the supported ideal classes."""


class InternalCheckFailed(TameIdealError):
    """A runtime self-check (uniqueness, lower bound, witness replay) failed.

    Indicates a bug rather than bad input; never expected on valid runs.
    """


class IdealSyntaxError(TameIdealError):
    """Ideal expression could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(TameIdealError):
    """A variable occurs in the expression but not in the declared list."""
