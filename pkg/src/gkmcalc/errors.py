"""Exception hierarchy shared by all gkmcalc modules.

Every error raised on bad user input derives from :class:`GkmError`, so
callers (notably the CLI) can map failures to exit codes without pattern
matching on messages.
"""


class GkmError(Exception):
    """Base class for all gkmcalc errors."""


class InputShapeError(GkmError):
    """Malformed or inconsistent input data (wrong lengths, bad references)."""


class SubspaceContainmentError(GkmError):
    """A restriction was requested along a non-inclusion of subspaces."""


class ValidationError(GkmError):
    """A computation was attempted on a graph that fails validation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedRingStructureError(GkmError):
    """Ring operations are only defined for graphs with point fibers."""


class FormalityViolation(GkmError):
    """Series division produced a negative coefficient.

    Signals that the input series is not of the expected free-module form
    (wrong torus rank, or data that does not come from a Cohen-Macaulay
    action).
    """


class GysinInconsistency(GkmError):
    """Gysin data does not close up (top even Betti number nonzero)."""


class SimplicityError(GkmError):
    """A moment polytope failed the simplicity validation."""


class IsotropyRankError(GkmError):
    """Facet normals of a polytope span a space of the wrong dimension."""
