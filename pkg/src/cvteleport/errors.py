"""Exception types shared across the toolkit."""


class CvTeleportError(Exception):
    """Base class for all toolkit errors."""


class TruncationTooSmall(CvTeleportError, ValueError):
    """Truncated state leaks more probability than the configured tolerance."""

    def __init__(self, leak: float, tol: float, msg: str = ""):
        self.leak = leak
        self.tol = tol
        super().__init__(
            msg or f"truncation leak {leak:.3e} exceeds tolerance {tol:.3e}"
        )


class ShapeMismatch(CvTeleportError, ValueError):
    """Operands live in different truncated spaces."""


class NoConvergence(CvTeleportError, RuntimeError):
    """Eigensolver failed to reach the requested residual."""


class InvalidPovm(CvTeleportError, ValueError):
    """POVM elements fail positivity or completeness."""


class NegativeProbability(CvTeleportError, ValueError):
    """A probability entry is negative beyond rounding noise."""


class GridTooCoarse(CvTeleportError, RuntimeError):
    """Wavefunction grid fails its quadrature self-test."""


class LambdaNonPositive(CvTeleportError, ValueError):
    """Prior precision must be strictly positive."""


class LambdaNegative(CvTeleportError, ValueError):
    """Prior precision must be nonnegative."""


class QuadratureNotConverged(CvTeleportError, RuntimeError):
    """Operator quadrature changed too much under grid refinement."""


class ThetaOutOfRange(CvTeleportError, ValueError):
    """Two-state angle outside (0, pi/2]."""


class DimensionTooSmall(CvTeleportError, ValueError):
    """Hilbert dimension must be at least 1."""


class ConfigInvalid(CvTeleportError, ValueError):
    """Experiment configuration failed validation."""


class NonPositiveError(CvTeleportError, ValueError):
    """Standard error must be strictly positive."""
