"""Exception hierarchy shared by all ergodyn modules."""


class ErgodynError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ErgodynError):
    """Input lies outside the admissible domain of a map or formula."""


class ArityError(ErgodynError):
    """Point dimension does not match the map dimension."""


class UnsupportedOrder(ErgodynError):
    """Requested derivative order is not available for this family."""


class SingularPoint(ErgodynError):
    """Formula undefined because a derivative vanishes at the point."""


class NotUnimodalError(ErgodynError):
    """Map is monotone on the grid or has multiple interior extrema."""


class NoPreimage(ErgodynError):
    """Target value exceeds the maximum of the map on the interval."""


class NoInteriorFixedPoint(ErgodynError):
    """No fixed point strictly inside the interval was found."""


class NotFixed(ErgodynError):
    """Point does not satisfy the fixed-point precondition."""


class CapacityError(ErgodynError):
    """Requested enumeration exceeds the configured size cap."""


class EscapedDomain(ErgodynError):
    """An iterate left the invariant interval; point is not in the Cantor set."""

    def __init__(self, step: int, value: float):
        self.step = step
        self.value = value
        super().__init__(f"iterate left [0, 1] at step {step} (value {value!r})")


class ModelMismatch(ErgodynError):
    """Prehistories built over different map models cannot be compared."""


class InsufficientDepth(ErgodynError):
    """Prehistory is too shallow for the requested computation."""


class SpacingTooSmall(ErgodynError):
    """Specification intervals are closer than the admissible spacing."""


class SigmaOne(ErgodynError):
    """Utility exponents sigma = 1 or gamma = 1 are excluded."""


class MismatchedPotential(ErgodynError):
    """Measure and pressure estimate were built for different potentials."""


class NonConvergence(ErgodynError):
    """Iterative solver failed to reach the requested residual."""


class ParseError(ErgodynError):
    """Config file is syntactically malformed."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ValidationError(ErgodynError):
    """Config violated a module invariant; message names the invariant."""
