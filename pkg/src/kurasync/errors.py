"""Exception types raised by the library."""


class KuramotoError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(KuramotoError, ValueError):
    pass


class SingularD(KuramotoError):
    """Some cosine sum kappa_i is numerically zero, so D is not invertible."""


class Degenerate(KuramotoError):
    """The index formula does not apply (kappa_i ~ 0 or tau ~ 2)."""


class DegenerateDenominator(KuramotoError):
    pass


class Marginal(KuramotoError):
    """A frequency vector sits on the stability boundary (tau ~ 2)."""

    def __init__(self, message, decision=None):
        super().__init__(message)
        self.decision = decision


class InconsistentInput(KuramotoError, ValueError):
    pass


class NonFinite(KuramotoError, FloatingPointError):
    pass


class WindowTooLong(KuramotoError, ValueError):
    pass
