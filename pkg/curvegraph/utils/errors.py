"""Module contains the errors used inside curvegraph."""


class CurvegraphError(Exception):
    """Base class of every error raised by curvegraph."""


class GraphValidationError(CurvegraphError, ValueError):
    """Input or request is invalid. The CLI exits with status 1."""


class SchemaViolation(GraphValidationError):
    """Graph document does not match the expected JSON schema."""


class DanglingEndpoint(GraphValidationError):
    """Edge refers to a vertex id that does not exist."""


class LoopWithoutJoint(GraphValidationError):
    """Loop edge (u == v) has no interior polyline joint."""


class CoincidentPoints(GraphValidationError):
    """Two consecutive polyline points are closer than the separation tolerance."""


class ZeroLengthSegment(GraphValidationError):
    """First segment of an edge at a vertex has zero length."""


class UnknownVertex(GraphValidationError):
    """Vertex id is not part of the graph."""


class IndexOutOfRange(GraphValidationError):
    """Joint or edge index is outside the valid range."""


class InvalidAssignment(GraphValidationError):
    """Height assignment does not match the combinatorial graph."""


class BadParameters(GraphValidationError):
    """Family or operation parameters are outside the documented range."""


class NonClosedCircuit(GraphValidationError):
    """Circuit does not close up or uses an edge end that does not exist."""


class NonReversingImpossible(GraphValidationError):
    """A non-reversing circuit was requested on a graph with a degree-1 vertex."""


class BudgetExceeded(GraphValidationError):
    """Brute-force search space is larger than the configured budget."""


class HypothesisViolation(GraphValidationError):
    """Graph does not satisfy the hypothesis of a closed-form formula."""


class NonGenericDirection(GraphValidationError):
    """Direction has a segment orthogonal to it or repeated critical heights."""


class ExcessiveRejections(GraphValidationError):
    """Too many sampled directions stayed non-generic after perturbation."""


class NumericalCheckFailed(CurvegraphError):
    """A cross-check between two computations failed. The CLI exits with status 2."""
