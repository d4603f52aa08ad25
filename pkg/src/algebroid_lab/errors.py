"""Exception types shared across the package."""


class AlgebroidLabError(Exception):
    """Base class for all package errors."""


class RingMismatchError(AlgebroidLabError):
    """Operands belong to different polynomial rings."""


class ArityMismatchError(AlgebroidLabError):
    """A point or exponent vector does not match the ring's variable count."""


class DimensionMismatchError(AlgebroidLabError):
    """Matrix/vector/module dimensions are inconsistent."""


class ChartMismatchError(AlgebroidLabError):
    """A geometric object lives on a different chart than required."""


class PolyParseError(AlgebroidLabError):
    """Malformed polynomial/vector-field/map text.

    Carries the 0-based offset of the offending token in `position`.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class NotTangentToCenterError(AlgebroidLabError):
    """A vector field has no polynomial lift to the blowup."""

    def __init__(self, component_index, detail=""):
        msg = f"no polynomial lift: component {component_index} not divisible"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.component_index = component_index


class PreconditionError(AlgebroidLabError):
    """An operation's stated precondition fails; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CoefficientExtractionError(AlgebroidLabError):
    """Structure-function extraction from bracket membership failed."""
