"""Exception types raised by the clustersqueeze library."""


class ClusterSqueezeError(Exception):
    """Base class for all library-specific errors."""


class MatrixCheckError(ClusterSqueezeError):
    """A matrix failed a structural precondition."""


class NotSymmetric(MatrixCheckError):
    pass


class NotHermitian(MatrixCheckError):
    pass


class NotUnitary(MatrixCheckError):
    pass


class NotOrthogonal(MatrixCheckError):
    pass


class NotPositiveDefinite(MatrixCheckError):
    pass


class SingularInput(ClusterSqueezeError):
    """The matrix is singular (or too close to singular) for the requested
    operation; a squeezing interaction matrix must be non-singular."""


class DomainError(ClusterSqueezeError):
    """A scalar function is undefined on part of a spectrum, or a parameter
    lies outside the numerically representable range."""


class DimensionMismatch(ClusterSqueezeError):
    pass


class GaugeIncompatible(ClusterSqueezeError):
    """The positive-definite gauge factor does not satisfy the reality
    condition, so the resulting interaction matrix would not be symmetric."""


class SingularPhasePoint(ClusterSqueezeError):
    """The local phases do not regularize the inverse relation between a
    structure unitary and an adjacency matrix."""


class NonRealResult(ClusterSqueezeError):
    """A matrix that should be real carries an imaginary residual above
    tolerance, signalling an invalid input."""


class SearchExhausted(ClusterSqueezeError):
    """The deterministic phase-search schedule found no regular phase vector."""


class GraphFormatError(ClusterSqueezeError):
    """Base class for graph-file format violations."""


class ParseError(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class IndexOutOfRange(GraphFormatError):
    pass


class OracleMismatch(ClusterSqueezeError):
    """Closed-form and brute-force covariance paths disagree beyond the
    comparison tolerance."""
