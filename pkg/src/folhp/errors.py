"""Exception hierarchy shared across the package."""

from __future__ import annotations


class FolhpError(Exception):
    """Base class for all package-specific errors."""


class ChartMismatchError(FolhpError):
    """Operands live on different charts."""


class UnknownCoordinateError(FolhpError):
    """A coordinate name is not part of the chart."""


class DegreeError(FolhpError):
    """Operation applied to objects of an unsupported degree."""


class ExactLayerError(FolhpError):
    """The exact polynomial layer cannot represent the requested object.

    Raised e.g. when a matrix inverse would have non-polynomial entries.
    Callers that can fall back to numerics should catch this.
    """


class NotRegularError(FolhpError):
    """A bivector has non-constant rank on the probe set.

    Carries two witness points with their ranks.
    """

    def __init__(self, point_a, rank_a, point_b, rank_b):
        self.point_a = tuple(point_a)
        self.rank_a = rank_a
        self.point_b = tuple(point_b)
        self.rank_b = rank_b
        super().__init__(
            f"rank {rank_a} at {self.point_a} but rank {rank_b} at {self.point_b}"
        )


class DslError(FolhpError):
    """Parse or validation failure in the input language, with location."""

    def __init__(self, message: str, line: int, col: int):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class ScenarioError(FolhpError):
    """A homotopy scenario fails one of its validity requirements."""
