class KirchhoffError(Exception):
    """Base class for every error raised by the toolkit."""


class EdgeListParseError(KirchhoffError):
    """The edge-list text is malformed."""


class GraphValidationError(KirchhoffError):
    """The graph is not simple, not connected, or has out-of-range vertices."""


class InfeasibleFamilyError(KirchhoffError):
    """A family specification violates its feasibility constraint."""


class EigenSolverError(KirchhoffError):
    """The symmetric eigensolver failed (non-finite input or no convergence)."""


class PseudoinverseError(KirchhoffError):
    """The Laplacian has more than one eigenvalue below the zero cutoff."""


class InapplicableBoundError(KirchhoffError):
    """A bound's applicability predicate fails for the given inputs."""


class TableDataError(KirchhoffError):
    """The published-values asset is missing, malformed, or has no such table."""
