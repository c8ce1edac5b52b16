"""Exception types shared across the package."""


class WeierCubicError(Exception):
    """Base class for all errors raised by this package."""


class LatticeError(WeierCubicError):
    """Degenerate period lattice (real period ratio, zero period...)."""


class PoleError(WeierCubicError):
    """Evaluation point coincides with a lattice point."""


class AccuracyError(WeierCubicError):
    """A series or sum did not reach the requested tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class SingularTransformError(WeierCubicError):
    """Linear-fractional transformation with a*d - b*c = 0."""


class RatioDegeneracyError(WeierCubicError):
    """A required coefficient ratio (a/c, b/d, ...) is undefined."""


class IllPosedInterpolationError(WeierCubicError):
    """Interpolation nodes are duplicated or insufficient."""


class DegenerateDepressionError(WeierCubicError):
    """Square completion breaks down: k = 0 or a pole of L1/L2."""

    def __init__(self, message, ratio=None):
        super().__init__(message)
        self.ratio = ratio


class FormDivisionError(WeierCubicError):
    """Division by a vanishing coefficient function (C = 0 in the n-map)."""


class NonConvergenceError(WeierCubicError):
    """Iterative solve exceeded its iteration cap."""

    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual


class DegenerateCubicError(WeierCubicError):
    """Axis cubic has vanishing leading coefficient (Gamma = 0 cases)."""


class StageError(WeierCubicError):
    """Wraps a failure inside one stage of the embedded sequence."""

    def __init__(self, axis, cause):
        super().__init__(f"stage for axis {axis} failed: {cause}")
        self.axis = axis
        self.cause = cause


class SolutionPoleError(WeierCubicError):
    """A solution formula denominator vanishes at the requested point."""


class BranchAmbiguityError(WeierCubicError):
    """A square-root radicand crosses its cut without path instructions."""


class TrackingError(WeierCubicError):
    """Branch tracking step too coarse (phase jump >= 90 degrees)."""


class LoopError(WeierCubicError):
    """Monodromy loop is not closed or otherwise malformed."""


class ScenarioError(WeierCubicError):
    """Scenario file malformed: unknown keys, bad shapes, bad values."""

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field
