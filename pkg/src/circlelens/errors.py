"""Exception types shared across the package."""


class CircleLensError(Exception):
    """Base class for all errors raised by circlelens."""


class DegenerateInput(CircleLensError):
    """Geometrically degenerate input (identical circles, coincident points, ...)."""


class NoRadicalAxis(CircleLensError):
    """Concentric circles have no radical axis."""


class InvalidRichness(CircleLensError):
    """Richness parameter k must be at least 2."""


class OracleCapExceeded(CircleLensError):
    """Scene too large for the brute-force oracle."""


class CapExceeded(CircleLensError):
    """Input too large for the exact (exponential) solver."""


class InvalidInput(CircleLensError):
    """Malformed or out-of-contract input."""


class VerticalTangent(CircleLensError):
    """The circle has a vertical tangent at the requested point."""


class Inconclusive(CircleLensError):
    """Fewer than two comparable circles; order reversal cannot be decided."""


class OutOfDomain(CircleLensError):
    """Parameters outside the domain of the recurrence (requires n > k^3 * sqrt(2))."""


class SceneFormatError(InvalidInput):
    """Scene file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
