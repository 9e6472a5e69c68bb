"""Exception types shared across the package."""


class VertexVisError(Exception):
    """Base class for every error raised by this library."""


class IdOutOfRangeError(VertexVisError):
    """A vertex id falls outside 0..n-1."""


class SelfLoopError(VertexVisError): ...


class DuplicateEdgeError(VertexVisError): ...


class DisconnectedError(VertexVisError):
    """A distance-dependent operation was asked about a disconnected graph."""


class TooLargeError(VertexVisError):
    """The instance exceeds the configured cap for an exponential solver."""


class InvalidParameterError(VertexVisError): ...


class IsolatedVertexError(VertexVisError): ...


class InvalidRegionError(VertexVisError): ...


class WitnessRejectedError(VertexVisError):
    """A constructed witness set failed its own verification gate."""


class UnsupportedFamilyError(VertexVisError): ...


class NotBlockGraphError(VertexVisError): ...


class CompleteGraphError(VertexVisError): ...


class SolveTimeoutError(VertexVisError):
    """A solver exceeded its configured wall-clock budget."""


class GraphFormatError(VertexVisError):
    """A graph file or vertex-set file could not be parsed."""
